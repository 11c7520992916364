import itertools
import math

import pytest

from quadcodes.deck import enumerate_quads
from quadcodes.errors import BudgetExceeded
from quadcodes.gf2 import rref_rows, weight
from quadcodes.quadcode import (
    QuadCode,
    code_from_cards,
    min_realizing_dimension,
    min_weight,
    quad_count,
    realize_cards,
    weight_distribution,
)
from quadcodes.search import (
    F_from_B,
    _code_tree,
    compute_B,
    compute_B_with_witness,
    compute_D,
    compute_F,
    compute_F_with_witness,
    enumerate_quad_codes,
    find_code,
    find_noquads_set,
    hamming_bound,
    lazy_caterer_bound,
    lazy_caterer_dimension,
    probabilistic_threshold,
    witness_cards,
)

# Largest codes of length l with all nonzero weights even and >= 6, as found
# by exhaustive search (see the cross-checks below).
TRUE_B = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 4, 10: 4, 11: 8, 12: 16}
TRUE_F = {1: 2, 2: 3, 3: 4, 4: 6, 5: 7, 6: 9, 7: 12, 8: 18}


def _quad_free(cards):
    return not enumerate_quads(cards)


def brute_D(l):
    """D(l, q) by trying every l-subset containing 0, 1, 2 in deck 2^(l-1).

    Three distinct cards are affinely independent, so any l cards map onto a
    set starting 0, 1, 2; and l cards span an affine space of dimension <= l-1.
    """
    found = {}
    top = max(1, l - 1)
    fixed = [0, 1, 2][:l]
    for n in range(0, top + 1):
        size = 1 << n
        if size < l:
            continue
        rest = range(len(fixed), size)
        for extra in itertools.combinations(rest, l - len(fixed)):
            q = len(enumerate_quads(fixed + list(extra)))
            found.setdefault(q, size)
    return found


@pytest.mark.parametrize("l", range(1, 7))
def test_D_matches_brute_force(l):
    table = compute_D(6)
    assert {q: table.get(l, q) for q in table.attainable(l)} == brute_D(l)


@pytest.mark.slow
def test_D_row_7_matches_brute_force():
    assert {q: compute_D(7).get(7, q) for q in compute_D(7).attainable(7)} == brute_D(7)


def test_D_table_shape():
    table = compute_D(8)
    assert table.exact and table.monotone()
    assert table.attainable(8) == [0, 1, 2, 3, 5, 6, 7, 14]
    assert table.get(7, 4) is None
    js = table.to_json()
    assert js["rows"]["7"][4] is None and js["rows"]["7"][7] == 8


def test_D_witnesses_realize():
    table = compute_D(8)
    for (l, q), size in table.entries.items():
        cards = witness_cards(table, l, q)
        assert len(cards) == l
        assert len(enumerate_quads(cards.cards)) == q
        assert (1 << cards.n) <= max(size, 2)


def test_D_budget():
    with pytest.raises(BudgetExceeded):
        compute_D(9)


def _brute_quad_codes(length):
    words = [w for w in range(1, 1 << length) if weight(w) % 2 == 0 and weight(w) >= 4]
    codes = {()}
    frontier = {()}
    while frontier:
        nxt = set()
        for gens in frontier:
            for w in words:
                cand = rref_rows(gens + (w,))
                if len(cand) == len(gens) + 1 and cand not in codes:
                    span = {0}
                    for g in cand:
                        span |= {s ^ g for s in span}
                    if all(s == 0 or weight(s) >= 4 for s in span):
                        nxt.add(cand)
        codes |= nxt
        frontier = nxt
    return codes


@pytest.mark.parametrize("length", range(1, 8))
def test_code_enumeration_matches_brute_force(length):
    got = {c.generators for c in enumerate_quad_codes(length)}
    assert got == _brute_quad_codes(length)


def test_enumeration_by_dimension():
    assert [c.dimension for c in enumerate_quad_codes(8, k=4)] == [4] * 30


@pytest.mark.parametrize("length", range(1, 12))
def test_B_agrees_with_canonical_enumeration(length):
    best = max(len(g) for g, _ in _code_tree(length, 6, length))
    assert compute_B(length) == 1 << best == TRUE_B[length]


@pytest.mark.slow
def test_B12_canonical_enumeration():
    assert max(len(g) for g, _ in _code_tree(12, 6, 12)) == 4


@pytest.mark.parametrize("length", [6, 9, 11, 12])
def test_B_witnesses(length):
    size, code = compute_B_with_witness(length)
    assert code.size == size
    if code.dimension:
        assert min_weight(code) >= 6
        assert all(weight(w) % 2 == 0 for w in code.codewords())


def test_B12_witness_distribution():
    _, code = compute_B_with_witness(12)
    counts = weight_distribution(code).counts
    assert {w: a for w, a in enumerate(counts) if a} == {0: 1, 6: 12, 8: 3}


def test_find_code_none_when_too_big():
    assert find_code(10, 3) is None
    assert find_code(11, 3) is not None


def test_B_budget():
    with pytest.raises(BudgetExceeded):
        compute_B(13)


def brute_F(n):
    """Largest quad-free set by depth-first search over increasing cards from 0, 1, 2."""
    size = 1 << n
    if size <= 3:
        return size
    best = 3

    def grow(cards, sums, start):
        nonlocal best
        best = max(best, len(cards))
        for c in range(start, size):
            # c would complete a quad with some three chosen cards
            if c in sums:
                continue
            new = {a ^ b ^ c for a, b in itertools.combinations(cards, 2)}
            grow(cards + [c], sums | new, c + 1)

    first = [0, 1, 2]
    grow(first, {0 ^ 1 ^ 2}, 3)
    return best


@pytest.mark.parametrize("n", range(1, 6))
def test_F_matches_brute_force(n):
    assert compute_F(n) == brute_F(n) == TRUE_F[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_F_agrees_with_code_route(n):
    B = {l: compute_B(l) for l in range(1, 11)}
    assert F_from_B(n, B) == compute_F(n)


@pytest.mark.slow
def test_F7_agrees_with_code_route():
    B = {l: compute_B(l, best_effort=True) for l in range(1, 14)}
    assert F_from_B(7, B) == compute_F(7) == 12


def test_F_from_B_needs_coverage():
    assert F_from_B(6, {l: TRUE_B[l] for l in range(1, 10)}) is None


@pytest.mark.parametrize("n", range(1, 9))
def test_F_witnesses_are_quad_free(n):
    res = compute_F_with_witness(n)
    assert res.exact and res.size == len(res.witness) == TRUE_F[n]
    assert max(res.witness) < 1 << n
    assert _quad_free(res.witness)


def test_F_budget():
    with pytest.raises(BudgetExceeded):
        compute_F(9)


def test_find_noquads_set():
    cards = find_noquads_set(3, 4)
    assert cards is not None and _quad_free(cards.cards)
    assert find_noquads_set(4, 7) is None
    assert len(find_noquads_set(6, 9)) == 9


@pytest.mark.parametrize("n", range(2, 7))
def test_noquads_via_code_route(n):
    # A quad-free set of l cards is a realization of an even code with weights >= 6.
    l = TRUE_F[n]
    k = TRUE_B[l].bit_length() - 1
    code = QuadCode(find_code(l, k).generators, l)
    assert min_realizing_dimension(code) <= n
    cards = realize_cards(code, n)
    assert code_from_cards(cards) == code
    assert quad_count(code) == 0 and _quad_free(cards.cards)


def test_hamming_bound():
    assert hamming_bound(2, 7, 3) == 16
    assert hamming_bound(2, 10, 5) == 1024 // 56
    with pytest.raises(ValueError):
        hamming_bound(1, 3, 3)


def test_lazy_caterer():
    assert [lazy_caterer_bound(l) for l in range(1, 8)] == [1, 2, 4, 7, 11, 16, 22]
    for l in range(4, 40):
        n = lazy_caterer_dimension(l)
        assert (1 << n) >= lazy_caterer_bound(l) > (1 << (n - 1))


def test_probabilistic_threshold_definition():
    for n in range(3, 16):
        l = probabilistic_threshold(n)
        assert math.comb(l, 4) + 3 < (1 << n) <= math.comb(l + 1, 4) + 3


@pytest.mark.parametrize("n", range(3, 9))
def test_threshold_is_below_F(n):
    assert probabilistic_threshold(n) <= TRUE_F[n]
    assert lazy_caterer_dimension(TRUE_F[n]) <= n
