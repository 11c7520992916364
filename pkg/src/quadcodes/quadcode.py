"""Quad codes: the binary linear codes realized by sequences of cards.

Coordinate ``i`` of a codeword corresponds to card ``i`` of the sequence.
A word ``c`` is a codeword when an even number of its bits are set and the
selected cards XOR to zero, i.e. ``c`` lies in the nullspace of the card
matrix augmented with an all-ones row.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from . import kernels
from .deck import CardSequence, check_dim
from .errors import BudgetExceeded, InfeasibleDeck, InvalidDistribution, InvalidQuadCode
from .gf2 import (
    MAX_LENGTH,
    BitMatrix,
    lowbit,
    nullspace_basis,
    rank,
    rref_rows,
    span,
    word_from_string,
    word_to_string,
)

MAX_ENUM_DIM = 24


class LinearCode:
    """A binary linear code held as its canonical (rref) generator matrix.

    Two codes are equal exactly when their lengths and rref generators match,
    whatever subclass they are.
    """

    __slots__ = ("length", "generators")

    def __init__(self, generators: Iterable[int], length: int):
        if not 1 <= length <= MAX_LENGTH:
            raise ValueError(f"code length must be in [1, {MAX_LENGTH}], got {length}")
        rows = [int(g) for g in generators]
        for g in rows:
            if not 0 <= g < (1 << length):
                raise ValueError(f"generator {g:#x} does not fit length {length}")
        self.length = length
        self.generators: Tuple[int, ...] = rref_rows(rows)

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    @property
    def matrix(self) -> BitMatrix:
        return BitMatrix(self.generators, self.length)

    def codewords(self) -> List[int]:
        if self.dimension > MAX_ENUM_DIM:
            raise BudgetExceeded(f"dimension {self.dimension} exceeds {MAX_ENUM_DIM}")
        return span(self.generators)

    def __contains__(self, word: int) -> bool:
        for g in self.generators:
            if (word >> lowbit(g)) & 1:
                word ^= g
        return word == 0

    def issubcode(self, other: "LinearCode") -> bool:
        return self.length == other.length and all(g in other for g in self.generators)

    def to_strings(self) -> List[str]:
        return [word_to_string(g, self.length) for g in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.length, self.generators))

    def __repr__(self) -> str:
        rows = ",".join(self.to_strings())
        return f"{type(self).__name__}(length={self.length}, k={self.dimension}, [{rows}])"


class QuadCode(LinearCode):
    """A linear code with all weights even and no nonzero word lighter than 4."""

    __slots__ = ()

    def __init__(self, generators: Iterable[int], length: int):
        super().__init__(generators, length)
        for g in self.generators:
            if bin(g).count("1") % 2:
                raise InvalidQuadCode(f"odd-weight word {word_to_string(g, length)}")
        if self.dimension:
            counts = weight_distribution(self).counts
            light = [w for w in (1, 2, 3) if w < len(counts) and counts[w]]
            if light:
                raise InvalidQuadCode(f"code has a nonzero word of weight {light[0]}")

    @classmethod
    def from_code(cls, code: LinearCode) -> "QuadCode":
        return code if isinstance(code, QuadCode) else cls(code.generators, code.length)


@dataclass(frozen=True)
class WeightDistribution:
    """Counts ``A_0..A_l`` of codewords by weight."""

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.counts:
            raise ValueError("weight distribution needs at least A_0")

    @property
    def length(self) -> int:
        return len(self.counts) - 1

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w < len(self.counts) else 0

    def to_json(self) -> str:
        return json.dumps(list(self.counts))

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        return cls(tuple(json.loads(text)))

    def polynomial(self) -> str:
        """The enumerator as text, e.g. ``x^4 + y^4``."""
        terms = []
        l = self.length
        for w, a in enumerate(self.counts):
            if not a:
                continue
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", l - w), ("y", w)) if e
            )
            coef = "" if a == 1 and mono else str(a)
            terms.append(coef + mono or "1")
        return " + ".join(terms) if terms else "0"


def augmented_matrix(seq: CardSequence) -> BitMatrix:
    """Rows are card coordinates ``0..n-1`` followed by the all-ones row."""
    rows = []
    for j in range(seq.n):
        row = 0
        for i, card in enumerate(seq.cards):
            if (card >> j) & 1:
                row |= 1 << i
        rows.append(row)
    rows.append((1 << len(seq)) - 1)
    return BitMatrix(tuple(rows), len(seq))


def code_from_cards(seq: CardSequence) -> QuadCode:
    if not len(seq):
        raise ValueError("need at least one card")
    if len(set(seq.cards)) != len(seq):
        raise ValueError("duplicate cards")
    return QuadCode(nullspace_basis(augmented_matrix(seq)), len(seq))


def weight_distribution(code: LinearCode) -> WeightDistribution:
    if code.dimension > MAX_ENUM_DIM:
        raise BudgetExceeded(f"dimension {code.dimension} exceeds {MAX_ENUM_DIM}")
    return WeightDistribution(tuple(kernels.weight_distribution(list(code.generators), code.length)))


def quad_count(code: LinearCode) -> int:
    """Number of weight-4 codewords; for a card code, the number of quads."""
    return weight_distribution(code)[4]


def min_weight(code: LinearCode) -> int:
    if not code.dimension:
        raise ValueError("minimum weight of the zero code is undefined")
    counts = weight_distribution(code).counts
    return next(w for w in range(1, len(counts)) if counts[w])


def dual_code(code: LinearCode) -> LinearCode:
    return LinearCode(nullspace_basis(code.matrix), code.length)


def _krawtchouk(length: int, j: int, w: int) -> int:
    """Coefficient of ``x^(l-j) y^j`` in ``(x+y)^(l-w) (x-y)^w``."""
    return sum(
        (-1) ** i * math.comb(w, i) * math.comb(length - w, j - i)
        for i in range(max(0, j - (length - w)), min(j, w) + 1)
    )


def dual_numerators(dist: WeightDistribution) -> List[int]:
    """Coefficients of ``W(x+y, x-y)`` before division by ``W(1,1)``."""
    l = dist.length
    return [sum(a * _krawtchouk(l, j, w) for w, a in enumerate(dist.counts) if a) for j in range(l + 1)]


def macwilliams_transform(dist: WeightDistribution, k: int | None = None) -> WeightDistribution:
    """Weight distribution of the dual code, or ``InvalidDistribution``.

    A negative or fractional coefficient proves no linear code has ``dist``.
    """
    size = dist.size
    if k is None:
        k = size.bit_length() - 1
    if size != 1 << k:
        raise InvalidDistribution(f"counts sum to {size}, expected 2^{k}")
    nums = dual_numerators(dist)
    for j, c in enumerate(nums):
        if c < 0:
            raise InvalidDistribution(f"coefficient of x^{dist.length - j}y^{j} is {c}/{size} < 0", nums)
    for j, c in enumerate(nums):
        if c % size:
            raise InvalidDistribution(f"coefficient of x^{dist.length - j}y^{j} is {c}/{size}, not an integer", nums)
    return WeightDistribution(tuple(c // size for c in nums))


def lemma_dimension_bound(length: int) -> int:
    """Largest dimension allowed for a length-``length`` code of minimum distance 4."""
    return length - 1 - (length - 1).bit_length()


def min_realizing_dimension(code: QuadCode) -> int:
    """Smallest ``n`` such that the deck of size ``2**n`` realizes ``code``."""
    if code.dimension > lemma_dimension_bound(code.length):
        raise InvalidQuadCode(
            f"dimension {code.dimension} exceeds l-1-ceil(log2 l) = {lemma_dimension_bound(code.length)}"
        )
    return code.length - code.dimension - 1


def realize_cards(code: QuadCode, n: int) -> CardSequence:
    """Cards in the deck of size ``2**n`` whose quad code is exactly ``code``.

    Rows of the card matrix: the rref basis of the dual minus its first row,
    then zero padding; the all-ones word stands in for the removed row as the
    augmentation row.
    """
    code = QuadCode.from_code(code)
    check_dim(n)
    need = min_realizing_dimension(code)
    if n < need:
        raise InfeasibleDeck(f"code of length {code.length}, dimension {code.dimension} needs n >= {need}, got {n}")
    ones = (1 << code.length) - 1
    basis = list(dual_code(code).generators)
    if ones in basis:
        basis.remove(ones)
    else:
        # Every rref coefficient of the all-ones word is 1, so it replaces any row.
        basis = basis[1:]
    rows = basis + [0] * (n - len(basis))
    cards = []
    for i in range(code.length):
        card = 0
        for j, r in enumerate(rows):
            if (r >> i) & 1:
                card |= 1 << j
        cards.append(card)
    return CardSequence(n, tuple(cards))


def puncture(code: LinearCode, pos: int) -> LinearCode:
    """Delete coordinate ``pos`` from every codeword."""
    if not 0 <= pos < code.length:
        raise ValueError(f"position {pos} out of range for length {code.length}")
    if code.length == 1:
        raise ValueError("cannot puncture a length-1 code")
    low = (1 << pos) - 1
    rows = [(g & low) | ((g >> (pos + 1)) << pos) for g in code.generators]
    return LinearCode(rows, code.length - 1)


def extend_parity(code: LinearCode) -> LinearCode:
    """Append an even-parity bit to every codeword."""
    l = code.length
    return LinearCode([g | ((bin(g).count("1") & 1) << l) for g in code.generators], l + 1)


def permute(code: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Coordinate ``i`` of each word moves to position ``perm[i]``."""
    if sorted(perm) != list(range(code.length)):
        raise ValueError("perm must be a permutation of the coordinates")
    rows = []
    for g in code.generators:
        rows.append(sum(1 << perm[i] for i in range(code.length) if (g >> i) & 1))
    return LinearCode(rows, code.length)


def parse_code(text: str) -> LinearCode:
    """One 0/1 generator row per line; blank lines and ``#`` comments ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("code file has no generator rows")
    length = len(lines[0])
    if any(len(ln) != length for ln in lines):
        raise ValueError("generator rows have unequal lengths")
    return LinearCode([word_from_string(ln) for ln in lines], length)


def format_code(code: LinearCode) -> str:
    header = f"# length {code.length}, dimension {code.dimension}\n"
    return header + "".join(s + "\n" for s in code.to_strings())


def codeword_strings(code: LinearCode) -> Iterator[str]:
    for w in sorted(code.codewords()):
        yield word_to_string(w, code.length)
