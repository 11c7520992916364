import itertools

import pytest
from hypothesis import given, strategies as st

from quadcodes.gf2 import (
    BitMatrix,
    in_span,
    lowbit,
    nullspace_basis,
    random_invertible,
    rank,
    rref,
    rref_rows,
    span,
    weight,
    word_from_string,
    word_to_string,
)


@st.composite
def matrices(draw, max_rows=8, max_cols=12):
    cols = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << cols) - 1), max_size=max_rows))
    return BitMatrix(tuple(rows), cols)


def brute_span(rows):
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words


def dot(a, b):
    return weight(a & b) & 1


def test_word_strings():
    assert word_from_string("1100") == 0b0011
    assert word_to_string(0b0011, 4) == "1100"
    assert word_to_string(0, 3) == "000"
    with pytest.raises(ValueError):
        word_from_string("10a1")
    with pytest.raises(ValueError):
        word_from_string("")


@given(st.integers(0, 2**20 - 1))
def test_string_round_trip(w):
    assert word_from_string(word_to_string(w, 20)) == w


def test_weight_and_lowbit():
    assert weight(0b1011) == 3
    assert lowbit(0b1000) == 3
    assert lowbit(0) == -1


def test_small_rank_examples():
    assert rank(BitMatrix.from_strings(["110", "011", "101"])) == 2
    assert rank(BitMatrix.identity(5)) == 5
    assert rank(BitMatrix((), 4)) == 0


@given(matrices())
def test_rank_matches_span_size(m):
    assert 1 << rank(m) == len(brute_span(m.rows))


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_rank_nullity(m):
    basis = nullspace_basis(m)
    assert rank(m) + len(basis) == m.n_cols
    for v in basis:
        assert all(dot(v, r) == 0 for r in m.rows)
    assert rank(BitMatrix(tuple(basis), m.n_cols)) == len(basis)


@given(matrices())
def test_rref_is_idempotent_projection(m):
    r = rref(m)
    assert rref(r) == r
    assert brute_span(r.rows) == brute_span(m.rows)
    pivots = [lowbit(row) for row in r.rows]
    assert pivots == sorted(set(pivots))
    for i, row in enumerate(r.rows):
        for j, other in enumerate(r.rows):
            if i != j:
                assert not (other >> pivots[i]) & 1


@given(matrices(), st.integers(0, 2**12 - 1))
def test_in_span_agrees_with_brute_force(m, w):
    w &= (1 << m.n_cols) - 1
    assert in_span(m, w) == (w in brute_span(m.rows))


def test_in_span_length_mismatch():
    with pytest.raises(ValueError):
        in_span(BitMatrix((1,), 2), 0b100)


@given(matrices(max_rows=6))
def test_span_lists_every_word_once(m):
    words = span(rref_rows(m.rows))
    assert len(words) == len(set(words)) == 1 << rank(m)


def test_rref_canonical_for_equal_spans():
    a = rref_rows([0b0011, 0b0110])
    b = rref_rows([0b0101, 0b0011])
    assert a == b


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_random_invertible(n):
    m = random_invertible(n, seed=7)
    assert rank(m) == n
    assert random_invertible(n, seed=7) == m


def test_apply_is_matrix_vector_product():
    m = BitMatrix.from_strings(["110", "011"])
    for v in range(8):
        expected = sum(dot(row, v) << i for i, row in enumerate(m.rows))
        assert m.apply(v) == expected


def test_identity_apply():
    eye = BitMatrix.identity(4)
    assert all(eye.apply(v) == v for v in range(16))


def test_bad_matrix():
    with pytest.raises(ValueError):
        BitMatrix((0b1000,), 3)
    with pytest.raises(ValueError):
        BitMatrix((), 65)


def test_exhaustive_3x3_rank_distribution():
    counts = {}
    for rows in itertools.product(range(8), repeat=3):
        r = rank(BitMatrix(rows, 3))
        counts[r] = counts.get(r, 0) + 1
    # Number of 3x3 GF(2) matrices of each rank.
    assert counts == {0: 1, 1: 49, 2: 294, 3: 168}
