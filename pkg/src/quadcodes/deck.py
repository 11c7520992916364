"""EvenQuads cards as vectors of Z_2^n.

A card in the deck of size ``2**n`` is an integer in ``[0, 2**n)``; bit ``j``
is coordinate ``j``.  Four distinct cards form a quad when they XOR to zero.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .gf2 import BitMatrix, rank

MAX_DIM = 30


def check_dim(n: int, lo: int = 0) -> int:
    if not lo <= n <= MAX_DIM:
        raise ValueError(f"deck dimension must be in [{lo}, {MAX_DIM}], got {n}")
    return n


def _distinct(cards: Sequence[int]) -> None:
    if len(set(cards)) != len(cards):
        raise ValueError(f"cards must be pairwise distinct: {list(cards)}")


@dataclass(frozen=True)
class CardSequence:
    """Ordered, duplicate-free cards from one deck; position ``i`` is code coordinate ``i``."""

    n: int
    cards: Tuple[int, ...]

    def __post_init__(self) -> None:
        check_dim(self.n)
        cards = tuple(int(c) for c in self.cards)
        for c in cards:
            if not 0 <= c < (1 << self.n):
                raise ValueError(f"card {c} is not in the deck of size {1 << self.n}")
        _distinct(cards)
        object.__setattr__(self, "cards", cards)

    def __len__(self) -> int:
        return len(self.cards)

    def __iter__(self):
        return iter(self.cards)


@dataclass(frozen=True)
class AffineMap:
    """``a -> M a + t`` on Z_2^n with ``M`` invertible."""

    matrix: BitMatrix
    translation: int = 0

    def __post_init__(self) -> None:
        n = self.matrix.n_cols
        if self.matrix.n_rows != n or rank(self.matrix) != n:
            raise ValueError("affine map needs an invertible square matrix")
        if not 0 <= self.translation < (1 << n):
            raise ValueError("translation does not fit the deck dimension")

    @property
    def n(self) -> int:
        return self.matrix.n_cols

    def __call__(self, card: int) -> int:
        return self.matrix.apply(card) ^ self.translation


def is_quad(a: int, b: int, c: int, d: int) -> bool:
    _distinct((a, b, c, d))
    return a ^ b ^ c ^ d == 0


def complete_quad(a: int, b: int, c: int) -> int:
    """The unique fourth card completing ``a, b, c`` to a quad."""
    _distinct((a, b, c))
    return a ^ b ^ c


def enumerate_quads(cards: Iterable[int]) -> List[Tuple[int, int, int, int]]:
    """Index quadruples ``i<j<k<l`` whose cards XOR to zero.

    Deliberately brute force: this is the reference the code-based counts
    are checked against.
    """
    cards = list(cards)
    return [
        idx
        for idx in itertools.combinations(range(len(cards)), 4)
        if cards[idx[0]] ^ cards[idx[1]] ^ cards[idx[2]] ^ cards[idx[3]] == 0
    ]


def total_quads(n: int) -> int:
    """Number of quads in the whole deck of size ``2**n``."""
    check_dim(n, lo=1)
    return math.comb(1 << n, 3) // 4


def expected_quads(m: int, n: int) -> Fraction:
    """Expected number of quads among ``m`` uniformly drawn distinct cards."""
    if n < 2:
        raise ValueError("expected_quads needs n >= 2")
    if m < 0:
        raise ValueError("m must be non-negative")
    return Fraction(math.comb(m, 4), (1 << n) - 3)


def apply_affine(t: AffineMap, seq: CardSequence) -> CardSequence:
    if t.n != seq.n:
        raise ValueError(f"map acts on dimension {t.n}, cards live in dimension {seq.n}")
    return CardSequence(seq.n, tuple(t(c) for c in seq.cards))


def quaternary_width(n: int) -> int:
    return (n + 1) // 2


def parse_quaternary(s: str, n: int) -> int:
    """Base-4 string, most significant digit first, ``ceil(n/2)`` digits."""
    check_dim(n, lo=1)
    width = quaternary_width(n)
    if len(s) != width:
        raise ValueError(f"quaternary card for n={n} needs {width} digits, got {s!r}")
    if set(s) - set("0123"):
        raise ValueError(f"bad quaternary digit in {s!r}")
    if n % 2 and s[0] not in "01":
        raise ValueError(f"leading digit must be 0 or 1 for odd n, got {s!r}")
    return int(s, 4)


def format_quaternary(card: int, n: int) -> str:
    check_dim(n, lo=1)
    if not 0 <= card < (1 << n):
        raise ValueError(f"card {card} is not in the deck of size {1 << n}")
    digits = []
    for _ in range(quaternary_width(n)):
        digits.append("0123"[card & 3])
        card >>= 2
    return "".join(reversed(digits))


def parse_card(token: str, n: int) -> int:
    """Decimal integer or ``q:`` followed by a quaternary string."""
    token = token.strip()
    if token.startswith("q:"):
        return parse_quaternary(token[2:], n)
    try:
        value = int(token, 10)
    except ValueError:
        raise ValueError(f"cannot parse card {token!r}") from None
    if not 0 <= value < (1 << n):
        raise ValueError(f"card {value} is not in the deck of size {1 << n}")
    return value


def parse_cards(text: str, n: int) -> CardSequence:
    tokens = [t for t in text.replace(",", " ").split() if t]
    return CardSequence(n, tuple(parse_card(t, n) for t in tokens))
