"""Exhaustive searches behind the classification tables.

The D and B searches run over codes rather than card sets.  Affine images
of a card sequence share its code, so enumerating rref generator matrices
removes the affine group for free.  The F search works on cards directly.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from . import kernels
from .deck import CardSequence, enumerate_quads
from .errors import BudgetExceeded
from .gf2 import lowbit, weight
from .quadcode import LinearCode, QuadCode, lemma_dimension_bound, realize_cards

EXACT_D_CARDS = 8
EXACT_B_LENGTH = 12
EXACT_F_DIM = 8
MAX_ENUM_LENGTH = 10


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = MAX_ENUM_LENGTH
    max_dimension: int = 24
    time_limit: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_length <= 0 or self.max_dimension <= 0:
            raise ValueError("budget limits must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")

    def deadline(self) -> Optional[float]:
        return None if self.time_limit is None else time.monotonic() + self.time_limit


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("search time limit exceeded")


def _allowed_table(length: int, min_weight: int) -> bytearray:
    """``table[x]`` is 1 when ``x`` may be a nonzero codeword: even and heavy enough."""
    table = bytearray(1 << length)
    for x in range(1, 1 << length):
        w = weight(x)
        if w % 2 == 0 and w >= min_weight:
            table[x] = 1
    return table


def _code_tree(length: int, min_weight: int, max_dim: int, deadline=None) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Every even code with nonzero weights ``>= min_weight`` and ``k <= max_dim``, once.

    Yields ``(rref generators, number of weight-4 words)``.  Rows are added in
    decreasing pivot order: a new row has its lowest set bit below every
    existing pivot and zeros on the existing pivot columns, which makes the
    resulting generator set exactly the rref of the span.  Partial spans with
    a forbidden weight are cut, which is sound because spans only grow.
    """
    allowed = _allowed_table(length, min_weight)
    words_by_low: Dict[int, List[int]] = {}
    for x in range(1, 1 << length):
        if allowed[x]:
            words_by_low.setdefault(lowbit(x), []).append(x)

    def grow(gens: List[int], words: List[int], pivmask: int, min_piv: int, quads: int):
        yield tuple(sorted(gens, key=lowbit)), quads
        if len(gens) == max_dim:
            return
        _check_deadline(deadline)
        for p in range(min_piv - 1, -1, -1):
            for g in words_by_low.get(p, ()):
                if g & pivmask:
                    continue
                coset = [g ^ s for s in words]
                if all(allowed[c] for c in coset):
                    extra = sum(1 for c in coset if weight(c) == 4)
                    yield from grow(gens + [g], words + coset, pivmask | (1 << p), p, quads + extra)

    yield from grow([], [0], 0, length, 0)


def enumerate_quad_codes(length: int, k: Optional[int] = None, budget: Optional[SearchBudget] = None) -> Iterator[QuadCode]:
    """Every quad code of the given length (and dimension ``k`` if given) exactly once."""
    budget = budget or SearchBudget()
    if not 1 <= length <= budget.max_length:
        raise BudgetExceeded(f"code enumeration supports length <= {budget.max_length}")
    bound = lemma_dimension_bound(length)
    if k is not None and not 0 <= k <= bound:
        return
    max_dim = bound if k is None else k
    for gens, _ in _code_tree(length, 4, max_dim, budget.deadline()):
        if k is None or len(gens) == k:
            yield QuadCode(gens, length)


INFINITY = None


@dataclass
class DTable:
    """Smallest deck size ``D(l, q)`` holding ``l`` cards with exactly ``q`` quads.

    Missing cells are unattainable (``INFINITY``, serialized as ``null``).
    """

    max_cards: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    witnesses: Dict[Tuple[int, int], QuadCode] = field(default_factory=dict)
    exact: bool = True

    def get(self, l: int, q: int) -> Optional[int]:
        return self.entries.get((l, q), INFINITY)

    def max_quads(self) -> int:
        return max((q for (_, q) in self.entries), default=0)

    def attainable(self, l: int) -> List[int]:
        return sorted(q for (ll, q) in self.entries if ll == l)

    def rows(self, max_q: Optional[int] = None) -> List[List[Optional[int]]]:
        max_q = self.max_quads() if max_q is None else max_q
        return [[self.get(l, q) for q in range(max_q + 1)] for l in range(1, self.max_cards + 1)]

    def monotone(self) -> bool:
        """``D(l+1, q) <= 2 D(l, q)`` for every finite ``D(l, q)`` below the last row."""
        for (l, q), size in self.entries.items():
            if l < self.max_cards:
                nxt = self.get(l + 1, q)
                if nxt is None or nxt > 2 * size:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "max_cards": self.max_cards,
            "exact": self.exact,
            "rows": {str(l): row for l, row in enumerate(self.rows(), start=1)},
        }


def compute_D(max_cards: int, best_effort: bool = False, budget: Optional[SearchBudget] = None) -> DTable:
    """Fill ``D(l, q)`` for ``l <= max_cards`` from the largest code per quad count."""
    exact = max_cards <= EXACT_D_CARDS
    if not exact and not best_effort:
        raise BudgetExceeded(f"exact D table stops at {EXACT_D_CARDS} cards; pass best_effort")
    if max_cards < 1:
        raise ValueError("max_cards must be positive")
    budget = budget or SearchBudget(max_length=max(max_cards, MAX_ENUM_LENGTH))
    deadline = budget.deadline()
    table = DTable(max_cards, exact=exact)
    for l in range(1, max_cards + 1):
        best: Dict[int, Tuple[int, ...]] = {}
        try:
            for gens, q in _code_tree(l, 4, lemma_dimension_bound(l), deadline):
                if q not in best or len(gens) > len(best[q]):
                    best[q] = gens
        except BudgetExceeded:
            if not best_effort:
                raise
            table.exact = False
        for q, gens in best.items():
            table.entries[(l, q)] = 1 << (l - len(gens) - 1)
            table.witnesses[(l, q)] = QuadCode(gens, l)
        if not table.exact:
            table.max_cards = l
            break
    return table


def witness_cards(table: DTable, l: int, q: int) -> CardSequence:
    """Realize the stored witness code in its minimal deck (at least deck size 2)."""
    code = table.witnesses[(l, q)]
    n = max(1, l - code.dimension - 1)
    return realize_cards(code, n)


def find_code(length: int, dim: int, min_weight: int = 6, deadline=None) -> Optional[LinearCode]:
    """An even code of this length and dimension with nonzero weights ``>= min_weight``.

    Symmetry reduction: permuting coordinates, a code whose minimum weight is
    ``w`` contains the word with bits ``0..w-1`` set and has every weight
    ``>= w``.  The remaining generators are enumerated canonically in the
    subspace with bit 0 clear, tracking one reduced representative per coset
    of the current span that could still join the code.
    """
    if dim <= 0:
        return LinearCode([], length)
    start = min_weight + (min_weight % 2)
    for w in range(start, length + 1, 2):
        ok = _allowed_table(length, w)
        u = (1 << w) - 1
        reps = {x for x in range(2, 1 << length, 2) if ok[x] and ok[x ^ u]}
        found = _extend(reps, [u], dim - 1, length, deadline)
        if found is not None:
            return LinearCode(found, length)
    return None


def _extend(reps, gens, need, min_piv, deadline):
    if need == 0:
        return gens
    if len(reps) < (1 << need) - 1:
        return None
    _check_deadline(deadline)
    for g in sorted(reps, key=lambda x: -lowbit(x)):
        p = lowbit(g)
        if p >= min_piv:
            continue
        bit = 1 << p
        nxt = {r for r in reps if lowbit(r) < p and not r & bit and (r ^ g) in reps}
        found = _extend(nxt, gens + [g], need - 1, p, deadline)
        if found is not None:
            return found
    return None


def max_code_dimension(length: int, min_weight: int = 6, deadline=None) -> Tuple[int, LinearCode]:
    """Largest dimension (with witness) of an even code with weights ``>= min_weight``."""
    best = LinearCode([], length)
    for dim in range(1, length + 1):
        code = find_code(length, dim, min_weight, deadline)
        if code is None:
            break
        best = code
    return best.dimension, best


def compute_B(length: int, best_effort: bool = False, budget: Optional[SearchBudget] = None) -> int:
    """Largest number of codewords in a length-``length`` code with minimum distance 6."""
    return compute_B_with_witness(length, best_effort, budget)[0]


def compute_B_with_witness(length: int, best_effort: bool = False, budget: Optional[SearchBudget] = None):
    if length < 1:
        raise ValueError("length must be positive")
    if length > EXACT_B_LENGTH and not best_effort:
        raise BudgetExceeded(f"exact B stops at length {EXACT_B_LENGTH}; pass best_effort")
    deadline = budget.deadline() if budget else None
    k, code = max_code_dimension(length, 6, deadline)
    return 1 << k, code


@dataclass(frozen=True)
class NoQuadsResult:
    n: int
    size: int
    witness: Tuple[int, ...]
    exact: bool = True


def _noquad_extension(n: int, target: int) -> Optional[List[int]]:
    """A spanning quad-free set of ``target`` cards in deck ``2**n``, if one exists.

    Any spanning set is affinely equivalent to one containing ``0`` and the
    unit vectors; permuting coordinates, its lightest remaining card has its
    low ``w`` bits set and every other extra card weighs at least ``w``.
    Cards of weight 2 or 3 would complete a quad with the unit vectors.
    """
    base = [0] + [1 << i for i in range(n)]
    if target <= len(base):
        return base[:target]
    for w in range(4, n + 1):
        u = (1 << w) - 1
        cands = [y for y in range(1 << n) if weight(y) >= w and y != u]
        found = kernels.extend_noquad(n, base + [u], cands, target)
        if found is not None:
            return sorted(found)
    return None


_F_CACHE: Dict[int, NoQuadsResult] = {}


def compute_F_with_witness(n: int, best_effort: bool = False) -> NoQuadsResult:
    """Maximum quad-free set in deck ``2**n`` with a witness.

    Builds on ``F(n-1)``: a set one larger than ``F(n-1)`` cannot lie in a
    hyperplane, so the spanning normalization in the extension search loses
    nothing.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > EXACT_F_DIM and not best_effort:
        raise BudgetExceeded(f"exact F stops at n = {EXACT_F_DIM}")
    if n in _F_CACHE:
        return _F_CACHE[n]
    if n == 0:
        result = NoQuadsResult(0, 1, (0,))
    else:
        prev = compute_F_with_witness(n - 1, best_effort)
        best = sorted(prev.witness + (1 << (n - 1),))
        if len(best) < n + 1:
            best = [0] + [1 << i for i in range(n)]
        while True:
            found = _noquad_extension(n, len(best) + 1)
            if found is None:
                break
            best = found
        result = NoQuadsResult(n, len(best), tuple(best), exact=n <= EXACT_F_DIM)
    _F_CACHE[n] = result
    return result


def compute_F(n: int, best_effort: bool = False) -> int:
    return compute_F_with_witness(n, best_effort).size


def find_noquads_set(n: int, size: int) -> Optional[CardSequence]:
    """A quad-free set of ``size`` cards in deck ``2**n``, or ``None`` if none exists."""
    res = compute_F_with_witness(n)
    if size > res.size:
        return None
    cards = CardSequence(n, res.witness[:size])
    if enumerate_quads(cards.cards):
        raise AssertionError("witness contains a quad")
    return cards


def F_from_B(n: int, B: Dict[int, int]) -> Optional[int]:
    """``F(n)`` from code sizes: the largest ``l`` with ``l - 1 - log2 B(l) <= n``.

    Returns ``None`` unless ``B`` covers one length past the answer.
    """
    best = None
    for l in sorted(B):
        if l - 1 - (B[l].bit_length() - 1) <= n:
            best = l
        elif best is not None and l == best + 1:
            return best
    return None


def hamming_bound(q: int, length: int, d: int) -> int:
    """Floor of the sphere-packing bound on a q-ary code of length ``length``, distance ``d``."""
    if q < 2 or d < 1 or length < 0:
        raise ValueError("need q >= 2, d >= 1, length >= 0")
    t = (d - 1) // 2
    ball = sum(math.comb(length, i) * (q - 1) ** i for i in range(t + 1))
    return q**length // ball


def lazy_caterer_bound(length: int) -> int:
    """Minimum number of cards in a deck holding a quad-free set of ``length`` cards."""
    if length < 1:
        raise ValueError("length must be positive")
    return (length * length - length + 2) // 2


def lazy_caterer_dimension(length: int) -> int:
    """Smallest deck dimension allowed by the lazy caterer bound."""
    return (lazy_caterer_bound(length) - 1).bit_length()


def probabilistic_threshold(n: int) -> int:
    """Largest ``l`` with ``C(l,4) + 3 < 2**n``; a quad-free set of that size exists."""
    if n < 2:
        raise ValueError("n must be at least 2")
    l = 3
    while math.comb(l + 1, 4) + 3 < (1 << n):
        l += 1
    return l
