# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Masks are held as ``uint64``; callers route graphs with more than 64
vertices to the pure-Python module.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

BACKEND = "cython"

ctypedef uint64_t mask_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(mask_t m) nogil:
    return __builtin_popcountll(m)


cdef inline int lowbit(mask_t m) nogil:
    return __builtin_ctzll(m)


cdef struct Adj:
    int n
    mask_t a[64]


cdef Adj _load(object adj) except *:
    cdef Adj g
    cdef int i
    g.n = len(adj)
    if g.n > 64:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(g.n):
        g.a[i] = <mask_t>adj[i]
    return g


cdef int _alpha(const Adj* g, mask_t mask) nogil:
    cdef int count = 0
    cdef mask_t m, low, bit
    cdef int v, d, maxd, maxv, without, with_v
    cdef bint reduced
    while mask:
        m = mask
        maxd = -1
        maxv = -1
        reduced = False
        while m:
            v = lowbit(m)
            low = (<mask_t>1) << v
            m ^= low
            d = popc(g.a[v] & mask)
            if d <= 1:
                count += 1
                mask &= ~(low | g.a[v])
                reduced = True
                break
            if d > maxd:
                maxd = d
                maxv = v
        if reduced:
            continue
        bit = (<mask_t>1) << maxv
        without = _alpha(g, mask & ~bit)
        with_v = 1 + _alpha(g, mask & ~(bit | g.a[maxv]))
        return count + (without if without > with_v else with_v)
    return count


cdef inline mask_t _closed(const Adj* g, mask_t s) nogil:
    cdef mask_t out = s
    cdef mask_t m = s
    cdef int v
    while m:
        v = lowbit(m)
        out |= g.a[v]
        m &= m - 1
    return out


cdef inline bint _stable(const Adj* g, mask_t s) nogil:
    cdef mask_t m = s
    cdef int v
    while m:
        v = lowbit(m)
        if g.a[v] & s:
            return False
        m &= m - 1
    return True


def alpha(adj, mask):
    cdef Adj g = _load(adj)
    return _alpha(&g, <mask_t>mask)


def is_stable(adj, s):
    cdef Adj g = _load(adj)
    return _stable(&g, <mask_t>s)


def closed_nbhd(adj, s):
    cdef Adj g = _load(adj)
    return int(_closed(&g, <mask_t>s))


def is_local_max(adj, s):
    cdef Adj g = _load(adj)
    cdef mask_t sm = <mask_t>s
    if not _stable(&g, sm):
        return False
    return _alpha(&g, _closed(&g, sm)) == popc(sm)


cdef int _stable_rec(const Adj* g, mask_t s, mask_t cand, list out) except -1:
    cdef mask_t low, s2
    cdef int v
    while cand:
        v = lowbit(cand)
        low = (<mask_t>1) << v
        cand ^= low
        s2 = s | low
        out.append(s2)
        _stable_rec(g, s2, cand & ~g.a[v], out)
    return 0


def stable_masks(adj):
    cdef Adj g = _load(adj)
    cdef list out = []
    cdef mask_t full = ((<mask_t>1) << g.n) - 1 if g.n < 64 else ~(<mask_t>0)
    _stable_rec(&g, 0, full, out)
    return out


cdef int _psi_rec(const Adj* g, mask_t s, mask_t cand, mask_t nb, list out) except -1:
    cdef mask_t low, s2, nb2
    cdef int v
    while cand:
        v = lowbit(cand)
        low = (<mask_t>1) << v
        cand ^= low
        s2 = s | low
        nb2 = nb | low | g.a[v]
        if _alpha(g, nb2) == popc(s2):
            out.append(s2)
        _psi_rec(g, s2, cand & ~g.a[v], nb2, out)
    return 0


def psi_masks(adj):
    cdef Adj g = _load(adj)
    cdef list out = []
    cdef mask_t full = ((<mask_t>1) << g.n) - 1 if g.n < 64 else ~(<mask_t>0)
    _psi_rec(&g, 0, full, 0, out)
    return out


cdef int _max_stable_rec(const Adj* g, mask_t s, int size, mask_t cand, int target, list out) except -1:
    cdef mask_t low
    cdef int v
    if size == target:
        out.append(s)
        return 0
    while cand:
        if size + _alpha(g, cand) < target:
            return 0
        v = lowbit(cand)
        low = (<mask_t>1) << v
        cand ^= low
        _max_stable_rec(g, s | low, size + 1, cand & ~g.a[v], target, out)
    return 0


def max_stable_masks(adj, mask):
    cdef Adj g = _load(adj)
    cdef mask_t m = <mask_t>mask
    cdef int target = _alpha(&g, m)
    cdef list out = []
    if target == 0:
        return [0]
    _max_stable_rec(&g, 0, 0, m, target, out)
    return out


cdef int _mm(const Adj* g, mask_t m, dict memo) except -1:
    cdef object key = m
    cdef object hit = memo.get(key)
    if hit is not None:
        return <int>hit
    if (m & (m - 1)) == 0:
        return 0
    cdef int v = lowbit(m)
    cdef mask_t rest = m & (m - 1)
    cdef int best = _mm(g, rest, memo)
    cdef int cap = popc(m) // 2
    cdef mask_t nbrs = g.a[v] & rest
    cdef int w, cand
    while nbrs and best < cap:
        w = lowbit(nbrs)
        nbrs &= nbrs - 1
        cand = 1 + _mm(g, rest & ~((<mask_t>1) << w), memo)
        if cand > best:
            best = cand
    memo[key] = best
    return best


def matching_number(adj, mask):
    cdef Adj g = _load(adj)
    return _mm(&g, <mask_t>mask, {})


cdef int _mm_enum(const Adj* g, mask_t m, list pairs, int target, dict memo, list out) except -1:
    cdef int v, w
    cdef mask_t rest, nbrs
    if len(pairs) == target:
        out.append(list(pairs))
        return 0
    if len(pairs) + _mm(g, m, memo) < target:
        return 0
    v = lowbit(m)
    rest = m & (m - 1)
    nbrs = g.a[v] & rest
    while nbrs:
        w = lowbit(nbrs)
        nbrs &= nbrs - 1
        pairs.append((v, w))
        _mm_enum(g, rest & ~((<mask_t>1) << w), pairs, target, memo, out)
        pairs.pop()
    _mm_enum(g, rest, pairs, target, memo, out)
    return 0


def maximum_matching_pairs(adj, mask):
    cdef Adj g = _load(adj)
    cdef dict memo = {}
    cdef mask_t m = <mask_t>mask
    cdef int target = _mm(&g, m, memo)
    cdef list out = []
    _mm_enum(&g, m, [], target, memo, out)
    return out


cdef object _count_pm(const Adj* g, mask_t m, dict memo):
    cdef object key = m
    cdef object hit = memo.get(key)
    if hit is not None:
        return hit
    cdef int v = lowbit(m)
    cdef mask_t rest = m & (m - 1)
    cdef mask_t nbrs = g.a[v] & rest
    cdef int w
    total = 0
    while nbrs:
        w = lowbit(nbrs)
        nbrs &= nbrs - 1
        total += _count_pm(g, rest & ~((<mask_t>1) << w), memo)
    memo[key] = total
    return total


def count_perfect_matchings(adj, mask):
    cdef Adj g = _load(adj)
    cdef dict memo = {0: 1}
    return _count_pm(&g, <mask_t>mask, memo)


cdef int _cmp_mask(const void* a, const void* b) noexcept nogil:
    cdef mask_t x = (<const mask_t*>a)[0]
    cdef mask_t y = (<const mask_t*>b)[0]
    return (x > y) - (x < y)


cdef inline bint _member(const mask_t* arr, Py_ssize_t n, mask_t key) nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and arr[lo] == key


cdef mask_t* _sorted_copy(object masks, Py_ssize_t n) except NULL:
    cdef mask_t* arr = <mask_t*>malloc((n if n > 0 else 1) * sizeof(mask_t))
    cdef Py_ssize_t i
    if arr == NULL:
        raise MemoryError()
    for i in range(n):
        arr[i] = <mask_t>masks[i]
    qsort(arr, n, sizeof(mask_t), _cmp_mask)
    return arr


def accessibility_violation(masks):
    cdef Py_ssize_t n = len(masks), i
    cdef mask_t* arr = _sorted_copy(masks, n)
    cdef mask_t x, m, rest
    cdef bint ok
    try:
        for i in range(n):
            x = <mask_t>masks[i]
            m = x
            ok = False
            while m:
                rest = x & ~(m & (~m + 1))
                m &= m - 1
                if rest == 0 or _member(arr, n, rest):
                    ok = True
                    break
            if not ok:
                return i
        return -1
    finally:
        free(arr)


def exchange_violation(masks):
    cdef Py_ssize_t n = len(masks), i, j
    cdef mask_t* arr = _sorted_copy(masks, n)
    cdef mask_t* seq = <mask_t*>malloc((n if n > 0 else 1) * sizeof(mask_t))
    cdef int* sizes = <int*>malloc((n if n > 0 else 1) * sizeof(int))
    cdef mask_t x, y, d, low
    cdef bint ok
    cdef int sx
    if seq == NULL or sizes == NULL:
        free(arr)
        free(seq)
        free(sizes)
        raise MemoryError()
    try:
        for i in range(n):
            seq[i] = <mask_t>masks[i]
            sizes[i] = popc(seq[i])
        for i in range(n):
            x = seq[i]
            sx = sizes[i]
            for j in range(n):
                if sizes[j] != sx - 1:
                    continue
                y = seq[j]
                d = x & ~y
                ok = False
                while d:
                    low = d & (~d + 1)
                    d ^= low
                    if _member(arr, n, y | low):
                        ok = True
                        break
                if not ok:
                    return (i, j)
        return None
    finally:
        free(arr)
        free(seq)
        free(sizes)
