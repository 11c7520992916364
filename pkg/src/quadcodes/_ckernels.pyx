# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference versions."""

from libc.stdint cimport uint64_t
from libc.string cimport memset, memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def weight_distribution(gens, int length):
    cdef int k = len(gens)
    cdef uint64_t g[64]
    cdef long long counts[65]
    cdef uint64_t word = 0
    cdef uint64_t i, total
    cdef int j
    if k > 40 or length > 64:
        raise ValueError("weight_distribution supports k <= 40, length <= 64")
    for j in range(k):
        g[j] = <uint64_t>gens[j]
    memset(counts, 0, sizeof(counts))
    total = (<uint64_t>1) << k
    with nogil:
        counts[0] = 1
        for i in range(1, total):
            word ^= g[__builtin_ctzll(i)]
            counts[__builtin_popcountll(word)] += 1
    return [counts[j] for j in range(length + 1)]


cdef struct GridState:
    int size
    int grid[16]
    unsigned char used[256]
    int n_masks
    int mask_pos[64][16]
    int mask_len[64]
    long long total


cdef inline bint _leaf_ok(GridState* st) noexcept nogil:
    cdef int m, p, x
    for m in range(st.n_masks):
        x = 0
        for p in range(st.mask_len[m]):
            x ^= st.grid[st.mask_pos[m][p]]
        if x:
            return False
    return True


cdef inline void _place(GridState* st, int col, int c) noexcept nogil:
    cdef int forced
    if st.used[c]:
        return
    forced = st.grid[col] ^ st.grid[4 + col] ^ c
    if forced == c or st.used[forced]:
        return
    st.used[c] = 1
    st.used[forced] = 1
    st.grid[8 + col] = c
    st.grid[12 + col] = forced
    _row2(st, col + 1)
    st.used[c] = 0
    st.used[forced] = 0


cdef void _row2(GridState* st, int col) noexcept nogil:
    cdef int c
    if col == 4:
        if _leaf_ok(st):
            st.total += 1
    elif col == 3:
        _place(st, 3, st.grid[8] ^ st.grid[9] ^ st.grid[10])
    else:
        for c in range(st.size):
            _place(st, col, c)


cdef void _row1(GridState* st) noexcept nogil:
    cdef int b0, b1, b2, b3, size = st.size
    for b0 in range(size):
        if st.used[b0]:
            continue
        st.used[b0] = 1
        for b1 in range(size):
            if st.used[b1]:
                continue
            st.used[b1] = 1
            for b2 in range(size):
                if st.used[b2]:
                    continue
                b3 = b0 ^ b1 ^ b2
                if st.used[b3]:
                    continue
                st.used[b2] = 1
                st.used[b3] = 1
                st.grid[4] = b0
                st.grid[5] = b1
                st.grid[6] = b2
                st.grid[7] = b3
                _row2(st, 0)
                st.used[b2] = 0
                st.used[b3] = 0
            st.used[b1] = 0
        st.used[b0] = 0


def count_grids(int n, first, masks):
    cdef GridState st
    cdef int a0, a1, a2, a3, m, p, mask
    if n < 2 or n > 8:
        raise ValueError("count_grids supports 2 <= n <= 8")
    a0, a1, a2 = first
    a3 = a0 ^ a1 ^ a2
    st.size = 1 << n
    if len({a0, a1, a2, a3}) < 4 or max(a0, a1, a2) >= st.size:
        return 0
    masks = [int(x) for x in masks if x]
    if len(masks) > 64:
        raise ValueError("at most 64 masks")
    memset(st.used, 0, sizeof(st.used))
    memset(st.grid, 0, sizeof(st.grid))
    st.grid[0] = a0
    st.grid[1] = a1
    st.grid[2] = a2
    st.grid[3] = a3
    st.used[a0] = 1
    st.used[a1] = 1
    st.used[a2] = 1
    st.used[a3] = 1
    st.n_masks = len(masks)
    for m in range(st.n_masks):
        mask = masks[m]
        st.mask_len[m] = 0
        for p in range(16):
            if (mask >> p) & 1:
                st.mask_pos[m][st.mask_len[m]] = p
                st.mask_len[m] += 1
    st.total = 0
    with nogil:
        _row1(&st)
    return st.total


cdef enum:
    WORDS = 16          # 1024-bit card masks, n <= 10
    MAXSET = 128


cdef struct NoQuadState:
    int target
    int n_chosen
    int chosen[MAXSET]


cdef inline bint _get(const uint64_t* m, int i) noexcept nogil:
    return (m[i >> 6] >> (i & 63)) & 1


cdef inline void _clr(uint64_t* m, int i) noexcept nogil:
    m[i >> 6] &= ~((<uint64_t>1) << (i & 63))


cdef inline void _set(uint64_t* m, int i) noexcept nogil:
    m[i >> 6] |= (<uint64_t>1) << (i & 63)


cdef inline int _count(const uint64_t* m, int words) noexcept nogil:
    cdef int i, c = 0
    for i in range(words):
        c += __builtin_popcountll(m[i])
    return c


cdef bint _noquad_dfs(NoQuadState* st, uint64_t* cand, uint64_t* sums, int words) noexcept nogil:
    cdef uint64_t c2[WORDS]
    cdef uint64_t s2[WORDS]
    cdef int fresh[MAXSET]
    cdef int x, i, j, v, w, ns
    cdef uint64_t bits
    if st.n_chosen >= st.target:
        return True
    for w in range(words):
        while cand[w]:
            if st.n_chosen + _count(cand, words) < st.target:
                return False
            x = (w << 6) + __builtin_ctzll(cand[w])
            cand[w] &= cand[w] - 1
            ns = st.n_chosen
            memcpy(c2, cand, words * sizeof(uint64_t))
            memcpy(s2, sums, words * sizeof(uint64_t))
            for i in range(ns):
                fresh[i] = x ^ st.chosen[i]
                _set(s2, fresh[i])
            for i in range(ns):
                for j in range(ns):
                    _clr(c2, fresh[j] ^ st.chosen[i])
            for j in range(ns):
                _clr(c2, fresh[j] ^ x)
            for i in range(words):
                bits = sums[i]
                while bits:
                    v = (i << 6) + __builtin_ctzll(bits)
                    bits &= bits - 1
                    _clr(c2, v ^ x)
            st.chosen[ns] = x
            st.n_chosen = ns + 1
            if _noquad_dfs(st, c2, s2, words):
                return True
            st.n_chosen = ns
    return False


def extend_noquad(int n, base, candidates, int target):
    cdef NoQuadState st
    cdef uint64_t cand[WORDS]
    cdef uint64_t sums[WORDS]
    cdef int words, i, j, y
    cdef bint ok, found
    if n < 0 or n > 10:
        raise ValueError("extend_noquad supports n <= 10")
    if target > MAXSET or len(base) > MAXSET:
        raise ValueError("set size too large")
    words = max(1, (1 << n) // 64)
    memset(cand, 0, sizeof(cand))
    memset(sums, 0, sizeof(sums))
    st.target = target
    st.n_chosen = len(base)
    for i in range(st.n_chosen):
        st.chosen[i] = base[i]
    for i in range(st.n_chosen):
        for j in range(i + 1, st.n_chosen):
            _set(sums, st.chosen[i] ^ st.chosen[j])
    taken = set(base)
    for y in candidates:
        if y in taken:
            continue
        ok = True
        for i in range(st.n_chosen):
            if _get(sums, y ^ st.chosen[i]):
                ok = False
                break
        if ok:
            _set(cand, y)
    with nogil:
        found = _noquad_dfs(&st, cand, sums, words)
    if not found:
        return None
    return [st.chosen[i] for i in range(st.n_chosen)]
