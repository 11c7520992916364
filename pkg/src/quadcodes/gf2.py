"""Bit-packed linear algebra over GF(2).

A word of length ``n`` is a plain Python ``int`` whose bit ``i`` holds
coordinate ``i``.  Coordinate 0 is the leftmost symbol when a word is
written as a 0/1 string, so ``"1100"`` is the integer ``0b0011``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

MAX_LENGTH = 64


def weight(word: int) -> int:
    """Hamming weight (population count) of a word."""
    return bin(word).count("1")


def lowbit(word: int) -> int:
    """Index of the lowest set bit; ``-1`` for the zero word."""
    return (word & -word).bit_length() - 1


def word_from_string(s: str) -> int:
    """Parse a 0/1 string, first character = coordinate 0."""
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {s!r}")
    if len(s) > MAX_LENGTH:
        raise ValueError(f"word longer than {MAX_LENGTH}: {len(s)}")
    value = 0
    for i, ch in enumerate(s):
        if ch == "1":
            value |= 1 << i
    return value


def word_to_string(word: int, length: int) -> str:
    return "".join("1" if (word >> i) & 1 else "0" for i in range(length))


def _check_length(n_cols: int) -> None:
    if not 0 <= n_cols <= MAX_LENGTH:
        raise ValueError(f"word length must be in [0, {MAX_LENGTH}], got {n_cols}")


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix stored as a tuple of row words."""

    rows: Tuple[int, ...]
    n_cols: int

    def __post_init__(self) -> None:
        _check_length(self.n_cols)
        rows = tuple(int(r) for r in self.rows)
        limit = 1 << self.n_cols
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError(f"row {r:#x} does not fit in {self.n_cols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BitMatrix":
        lines = [ln.strip() for ln in lines]
        if not lines:
            raise ValueError("empty matrix needs an explicit column count")
        n_cols = len(lines[0])
        if any(len(ln) != n_cols for ln in lines):
            raise ValueError("rows have unequal lengths")
        return cls(tuple(word_from_string(ln) for ln in lines), n_cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def to_strings(self) -> List[str]:
        return [word_to_string(r, self.n_cols) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.n_cols):
            col = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    col |= 1 << i
            cols.append(col)
        return BitMatrix(tuple(cols), self.n_rows)

    def apply(self, vec: int) -> int:
        """Matrix-vector product ``M @ vec``; bit ``i`` of the result is row ``i``."""
        out = 0
        for i, r in enumerate(self.rows):
            if weight(r & vec) & 1:
                out |= 1 << i
        return out


def _eliminate(rows: Sequence[int]) -> List[int]:
    """Reduced echelon basis, pivot = lowest set bit, sorted by pivot."""
    basis: List[int] = []
    for r in rows:
        for b in basis:
            if (r >> lowbit(b)) & 1:
                r ^= b
        if r:
            p = lowbit(r)
            basis = [b ^ r if (b >> p) & 1 else b for b in basis]
            basis.append(r)
    basis.sort(key=lowbit)
    return basis


def rref(m: BitMatrix) -> BitMatrix:
    """Reduced row echelon form with zero rows dropped."""
    return BitMatrix(tuple(_eliminate(m.rows)), m.n_cols)


def rank(m: BitMatrix) -> int:
    return len(_eliminate(m.rows))


def rref_rows(rows: Iterable[int]) -> Tuple[int, ...]:
    """Canonical (rref) basis of the span of ``rows``."""
    return tuple(_eliminate(list(rows)))


def nullspace_basis(m: BitMatrix) -> List[int]:
    """Basis of ``{x : M x^T = 0}``, one word per free column in ascending order."""
    basis = _eliminate(m.rows)
    pivots = {lowbit(b): b for b in basis}
    out = []
    for f in range(m.n_cols):
        if f in pivots:
            continue
        x = 1 << f
        for p, b in pivots.items():
            if (b >> f) & 1:
                x |= 1 << p
        out.append(x)
    return out


def in_span(m: BitMatrix, v: int) -> bool:
    if not 0 <= v < (1 << m.n_cols):
        raise ValueError(f"vector does not have length {m.n_cols}")
    for b in _eliminate(m.rows):
        if (v >> lowbit(b)) & 1:
            v ^= b
    return v == 0


def span(rows: Sequence[int]) -> List[int]:
    """All words in the span; ``2**len(rows)`` entries for independent rows."""
    words = [0]
    for r in rows:
        words += [w ^ r for w in words]
    return words


def random_invertible(n: int, seed: int) -> BitMatrix:
    """Uniformly random invertible ``n x n`` matrix, deterministic in ``seed``."""
    if not 1 <= n <= 30:
        raise ValueError(f"n must be in [1, 30], got {n}")
    rng = random.Random(seed)
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(n))
        m = BitMatrix(rows, n)
        if rank(m) == n:
            return m
