"""Codes of semimagic, magic and strongly magic quad squares.

Grid position ``p = 4*row + col`` (0-indexed, left to right, top to bottom)
is coordinate ``p`` of a length-16 codeword.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .deck import AffineMap, CardSequence, check_dim, parse_card
from .errors import BudgetExceeded
from .gf2 import weight
from .quadcode import (
    LinearCode,
    QuadCode,
    WeightDistribution,
    min_realizing_dimension,
    min_weight,
    puncture,
    weight_distribution,
)


class SquareKind(enum.Enum):
    SEMIMAGIC = "semimagic"
    MAGIC = "magic"
    STRONGLY_MAGIC = "strongly-magic"


def _mask(positions) -> int:
    return sum(1 << p for p in positions)


ROWS = tuple(_mask(range(4 * r, 4 * r + 4)) for r in range(4))
COLUMNS = tuple(_mask(range(c, 16, 4)) for c in range(4))
DIAGONALS = (_mask((0, 5, 10, 15)), _mask((3, 6, 9, 12)))

# The two extra quads of a magic square, marked X and Y in a grid:
#   . X Y .
#   X . . Y
#   Y . . X
#   . Y X .
_EXTRA_PATTERN = (".XY.", "X..Y", "Y..X", ".YX.")
BROKEN_DIAGONALS = tuple(
    _mask(4 * r + c for r in range(4) for c in range(4) if _EXTRA_PATTERN[r][c] == mark) for mark in "XY"
)

# Position quadruples that are themselves quads when read as deck-16 cards.
COORDINATE_QUADS = tuple(
    _mask(q) for q in itertools.combinations(range(16), 4) if q[0] ^ q[1] ^ q[2] ^ q[3] == 0
)

_CODES: Dict[SquareKind, QuadCode] = {}


def square_code(kind: SquareKind) -> QuadCode:
    if kind not in _CODES:
        if kind is SquareKind.SEMIMAGIC:
            gens = ROWS + COLUMNS
        elif kind is SquareKind.MAGIC:
            gens = ROWS + COLUMNS + DIAGONALS
        else:
            gens = COORDINATE_QUADS
        _CODES[kind] = QuadCode(gens, 16)
    return _CODES[kind]


def square_weight_enumerator(kind: SquareKind) -> WeightDistribution:
    return weight_distribution(square_code(kind))


@dataclass(frozen=True)
class QuadSquare:
    """A 4x4 grid of 16 distinct cards from the deck of size ``2**n``, stored row-major."""

    n: int
    grid: Tuple[int, ...]

    def __post_init__(self) -> None:
        cells = tuple(int(c) for c in self.grid)
        if len(cells) != 16:
            raise ValueError("a quad square has 16 cards")
        object.__setattr__(self, "grid", cells)
        CardSequence(self.n, cells)

    def rows(self) -> List[List[int]]:
        return [list(self.grid[4 * r: 4 * r + 4]) for r in range(4)]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> "QuadSquare":
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("a quad square has 4 rows of 4 cards")
        return cls(n, tuple(c for r in rows for c in r))


def parse_square(text: str, n: int) -> QuadSquare:
    """Four lines of four cards (decimal or ``q:`` quaternary), or a JSON 4x4 array."""
    text = text.strip()
    if text.startswith("["):
        return QuadSquare.from_rows(n, json.loads(text))
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    return QuadSquare.from_rows(n, [[parse_card(tok, n) for tok in ln] for ln in lines])


def format_square(sq: QuadSquare) -> str:
    width = len(str((1 << sq.n) - 1))
    return "\n".join(" ".join(f"{c:>{width}}" for c in row) for row in sq.rows())


def _mask_holds(cards: Sequence[int], mask: int) -> bool:
    x = 0
    for p in range(16):
        if (mask >> p) & 1:
            x ^= cards[p]
    return x == 0


def is_square_of_kind(sq: QuadSquare, kind: SquareKind) -> bool:
    """Every generator of the kind's code marks cards that XOR to zero."""
    return all(_mask_holds(sq.grid, g) for g in square_code(kind).generators)


def identity_square() -> QuadSquare:
    """Deck-16 grid whose card at each position is the position index."""
    return QuadSquare(4, tuple(range(16)))


def affine_image(t: AffineMap, sq: QuadSquare) -> QuadSquare:
    if t.n != sq.n:
        raise ValueError("affine map and square live in different decks")
    return QuadSquare(sq.n, tuple(t(c) for c in sq.grid))


def _affine_frame_count(n: int, points: int) -> int:
    """Ordered affinely independent ``points``-tuples in deck ``2**n``."""
    size = 1 << n
    total = size
    for i in range(points - 1):
        total *= size - (1 << i)
    return total


def _extra_masks(kind: SquareKind) -> List[int]:
    # Rows and columns are enforced by construction in the kernel.
    semi = square_code(SquareKind.SEMIMAGIC)
    return [g for g in square_code(kind).generators if g not in semi]


def count_squares(n: int, kind: SquareKind, method: str = "auto", allow_long: bool = False) -> int:
    """Number of labeled 4x4 grids of kind ``kind`` in deck ``2**n``.

    ``full`` enumerates every ordered first-row triple (one partition each)
    and backtracks rows 1-2, with row 3 forced by the columns.  ``orbit``
    fixes the first three cards to ``0, 1, 2`` and multiplies by the number
    of ordered affinely independent triples, on which the affine group acts
    simply transitively while preserving every square kind.
    """
    check_dim(n)
    if method == "auto":
        method = "full" if kernels.COMPILED and n <= 4 else "orbit"
    if method not in ("full", "orbit"):
        raise ValueError(f"unknown counting method {method!r}")
    if n < 4:
        return 0
    limit = 4 if method == "full" else 5
    if n > limit and not allow_long:
        raise BudgetExceeded(f"{method} square count is budgeted up to n={limit}")
    masks = _extra_masks(kind)
    if method == "orbit":
        return _affine_frame_count(n, 3) * kernels.count_grids(n, (0, 1, 2), masks)
    size = 1 << n
    total = 0
    for a, b, c in itertools.permutations(range(size), 3):
        if a ^ b ^ c in (a, b, c):
            continue
        total += kernels.count_grids(n, (a, b, c), masks)
    return total


_SEMIMAGIC_COEFFS = (112, 2823, 2531, 159, 1)
_MAGIC_COEFFS = (10, 85, 43, 1)


def predicted_count(n: int, kind: SquareKind) -> int:
    """Closed-form square count; 0 for ``n < 4`` where the formulas do not apply."""
    check_dim(n)
    if n < 4:
        return 0
    size = 1 << n
    base = size * (size - 1) * (size - 2) * (size - 4) * (size - 8)
    if kind is SquareKind.STRONGLY_MAGIC:
        return base
    coeffs = _SEMIMAGIC_COEFFS if kind is SquareKind.SEMIMAGIC else _MAGIC_COEFFS
    factor, falling = 0, 1
    for i, c in enumerate(coeffs):
        factor += c * falling
        falling *= size - (16 << i)
    return base * factor


def formula_applies(n: int) -> bool:
    return n >= 4


# Number of square codes per dimension (companion enumeration, reference data).
DIMENSION_COUNTS = {
    SquareKind.SEMIMAGIC: {7: 1, 8: 159, 9: 2531, 10: 2823, 11: 112},
    SquareKind.MAGIC: {8: 1, 9: 43, 10: 85, 11: 10},
    SquareKind.STRONGLY_MAGIC: {11: 1},
}


def _code_of_dimension(k: int) -> QuadCode:
    """Some square code of dimension ``k``: C_m grown inside C_sm for k = 9, 10."""
    if k == 7:
        return square_code(SquareKind.SEMIMAGIC)
    gens = list(square_code(SquareKind.MAGIC).generators)
    for g in square_code(SquareKind.STRONGLY_MAGIC).generators:
        if LinearCode(gens, 16).dimension == k:
            break
        if g not in LinearCode(gens, 16):
            gens.append(g)
    code = QuadCode(gens, 16)
    assert code.dimension == k
    return code


def dimension_table() -> dict:
    """Code counts per dimension (reference) and minimal deck sizes (recomputed)."""
    dims = list(range(7, 12))
    deck = {k: 1 << min_realizing_dimension(_code_of_dimension(k)) for k in dims}
    return {
        "dimensions": dims,
        "counts": {kind.value: DIMENSION_COUNTS[kind] for kind in SquareKind},
        "deck_size": deck,
        "verified": {"deck_size": True, "counts_dimension_11": "by count_squares(4, kind)", "counts_other": False},
    }


def codes_in_deck16(kind: SquareKind, method: str = "auto") -> int:
    """Number of dimension-11 square codes of this kind, from square counts in deck 16.

    Each such code is realized by exactly ``|AGL(4,2)|`` grids.
    """
    total = count_squares(4, kind, method)
    group = _affine_frame_count(4, 5)
    if total % group:
        raise AssertionError("square count is not a multiple of |AGL(4,2)|")
    return total // group


def is_perfect(code: LinearCode, radius: int = 1) -> bool:
    """Whether radius-``radius`` balls around the codewords tile the ambient space exactly."""
    l = code.length
    if l > 24:
        raise BudgetExceeded("perfectness check supports length <= 24")
    errors = [0]
    for r in range(1, radius + 1):
        errors += [sum(1 << i for i in pos) for pos in itertools.combinations(range(l), r)]
    if code.size * len(errors) != 1 << l:
        return False
    seen = bytearray(1 << l)
    for c in code.codewords():
        for e in errors:
            if seen[c ^ e]:
                return False
            seen[c ^ e] = 1
    return True


def check_punctured_hamming(code: LinearCode, report: Optional[List[str]] = None) -> bool:
    """Every puncture is a perfect length-15, dimension-11, distance-3 code."""
    ok = True
    for pos in range(code.length):
        p = puncture(code, pos)
        problems = []
        if p.length != 15:
            problems.append(f"length {p.length}")
        if p.dimension != 11:
            problems.append(f"dimension {p.dimension}")
        if not p.dimension or min_weight(p) != 3:
            problems.append("minimum weight is not 3")
        if not is_perfect(p, 1):
            problems.append("not perfect")
        if problems:
            ok = False
            if report is not None:
                report.append(f"coordinate {pos}: " + ", ".join(problems))
    return ok


def verify_hamming_15_11(report: Optional[List[str]] = None) -> bool:
    return check_punctured_hamming(square_code(SquareKind.STRONGLY_MAGIC), report)


def magic_extra_quads() -> Tuple[int, int]:
    """The broken-diagonal weight-4 words, checked to lie in the magic code."""
    code = square_code(SquareKind.MAGIC)
    for w in BROKEN_DIAGONALS:
        if weight(w) != 4 or w not in code:
            raise AssertionError("broken diagonal is not a magic-square quad")
    return BROKEN_DIAGONALS
