"""Pure-Python implementations of the hot kernels.

Same signatures as the compiled ``_ckernels`` module; used when the
extension is not built and as the reference in the benchmark.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

_CHUNK_BITS = 18


def weight_distribution(gens: Sequence[int], length: int) -> List[int]:
    """Weight counts ``A_0..A_length`` of the span of independent ``gens``."""
    gens = [int(g) for g in gens]
    low, high = gens[:_CHUNK_BITS], gens[_CHUNK_BITS:]
    words = np.zeros(1, dtype=np.uint64)
    for g in low:
        words = np.concatenate((words, words ^ np.uint64(g)))
    counts = np.zeros(length + 1, dtype=np.int64)
    offset = 0
    for i in range(1 << len(high)):
        if i:
            # Gray code step over the high generators.
            offset ^= high[(i & -i).bit_length() - 1]
        w = np.bitwise_count(words ^ np.uint64(offset))
        counts += np.bincount(w, minlength=length + 1)[: length + 1]
    return [int(c) for c in counts]


def count_grids(n: int, first: Sequence[int], masks: Sequence[int]) -> int:
    """Count 4x4 grids with rows and columns quads and first three cards fixed.

    ``masks`` are 16-bit position sets (bit ``4*row + col``) whose cards must
    additionally XOR to zero.  Row 3 is forced by the column constraints.
    """
    size = 1 << n
    a0, a1, a2 = first
    a3 = a0 ^ a1 ^ a2
    if len({a0, a1, a2, a3}) < 4 or max(a0, a1, a2) >= size:
        return 0
    grid = [0] * 16
    grid[0:4] = [a0, a1, a2, a3]
    used = bytearray(size)
    for c in grid[0:4]:
        used[c] = 1
    masks = [m for m in masks if m]
    mask_pos = [[p for p in range(16) if (m >> p) & 1] for m in masks]
    total = 0

    def leaf() -> bool:
        for pos in mask_pos:
            x = 0
            for p in pos:
                x ^= grid[p]
            if x:
                return False
        return True

    def fill_row1() -> None:
        for b0 in range(size):
            if used[b0]:
                continue
            used[b0] = 1
            for b1 in range(size):
                if used[b1]:
                    continue
                used[b1] = 1
                for b2 in range(size):
                    if used[b2]:
                        continue
                    b3 = b0 ^ b1 ^ b2
                    if used[b3]:
                        continue
                    used[b2] = used[b3] = 1
                    grid[4:8] = [b0, b1, b2, b3]
                    fill_row2(0)
                    used[b2] = used[b3] = 0
                used[b1] = 0
            used[b0] = 0

    def place(col: int, c: int) -> None:
        # c goes to row 2; the column forces the row-3 card below it.
        if used[c]:
            return
        forced = grid[col] ^ grid[4 + col] ^ c
        if forced == c or used[forced]:
            return
        used[c] = used[forced] = 1
        grid[8 + col], grid[12 + col] = c, forced
        fill_row2(col + 1)
        used[c] = used[forced] = 0

    def fill_row2(col: int) -> None:
        nonlocal total
        if col == 4:
            if leaf():
                total += 1
        elif col == 3:
            place(3, grid[8] ^ grid[9] ^ grid[10])
        else:
            for c in range(size):
                place(col, c)

    fill_row1()
    return total


def extend_noquad(n: int, base: Sequence[int], candidates: Sequence[int], target: int) -> Optional[List[int]]:
    """Search for a quad-free set of ``target`` cards containing ``base``.

    Extra cards are drawn from ``candidates`` in increasing order.  Returns
    the set (base first) or ``None`` when no extension exists.
    """
    chosen = [int(c) for c in base]
    sums = 0
    for i, x in enumerate(chosen):
        for y in chosen[i + 1:]:
            sums |= 1 << (x ^ y)
    cand = 0
    taken = set(chosen)
    for y in candidates:
        if y in taken:
            continue
        if any((sums >> (y ^ s)) & 1 for s in chosen):
            continue
        cand |= 1 << y

    def dfs(cand: int, sums: int) -> bool:
        if len(chosen) >= target:
            return True
        while cand:
            if len(chosen) + bin(cand).count("1") < target:
                return False
            x = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            new = [x ^ s for s in chosen]
            nsums = sums
            for v in new:
                nsums |= 1 << v
            c2 = cand
            for s in chosen:
                for v in new:
                    c2 &= ~(1 << (v ^ s))
            for v in new:
                c2 &= ~(1 << (v ^ x))
            old = sums
            while old:
                v = (old & -old).bit_length() - 1
                old &= old - 1
                c2 &= ~(1 << (v ^ x))
            chosen.append(x)
            if dfs(c2, nsums):
                return True
            chosen.pop()
        return False

    return list(chosen) if dfs(cand, sums) else None
