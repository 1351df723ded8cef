# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirror of ``superpatterns._kernels_py``; ``superpatterns.kernels`` selects
one of the two at import time.  See the pure twin for the semantics; the
implementations here are kept line-for-line comparable.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef bint _embed(const int* pat, Py_ssize_t k, const int* host, Py_ssize_t m,
                 Py_ssize_t* pos):
    """Fill pos with the lex-min embedding positions; 0 when none exists."""
    cdef Py_ssize_t i = 0, start = 0, p, limit, j, found
    cdef int lo, hi, v
    if k == 0:
        return 1
    if k > m:
        return 0
    while True:
        lo = 0
        hi = <int>m + 1
        for j in range(i):
            v = host[pos[j]]
            if pat[j] < pat[i]:
                if v > lo:
                    lo = v
            elif v < hi:
                hi = v
        limit = m - (k - i - 1)
        found = -1
        p = start
        while p < limit:
            v = host[p]
            if lo < v and v < hi:
                found = p
                break
            p += 1
        if found >= 0:
            pos[i] = found
            i += 1
            if i == k:
                return 1
            start = found + 1
        else:
            i -= 1
            if i < 0:
                return 0
            start = pos[i] + 1


cdef int* _to_ints(seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>malloc(n * sizeof(int) if n > 0 else sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


def lex_min_embedding(pattern, host):
    cdef Py_ssize_t k = len(pattern), m = len(host), i
    if k == 0:
        return ()
    if k > m:
        return None
    cdef int* pat = _to_ints(pattern, k)
    cdef int* hst = _to_ints(host, m)
    cdef Py_ssize_t* pos = <Py_ssize_t*>malloc(k * sizeof(Py_ssize_t))
    if pos == NULL:
        free(pat)
        free(hst)
        raise MemoryError()
    try:
        if _embed(pat, k, hst, m, pos):
            return tuple(pos[i] for i in range(k))
        return None
    finally:
        free(pat)
        free(hst)
        free(pos)


def contains(pattern, host):
    return lex_min_embedding(pattern, host) is not None


def greedy_layer_indices(pattern_sizes, host_sizes):
    cdef Py_ssize_t nh = len(host_sizes), j = 0
    cdef int s
    out = []
    for s in pattern_sizes:
        while j < nh and host_sizes[j] < s:
            j += 1
        if j == nh:
            return None
        out.append(j)
        j += 1
    return tuple(out)


def composition_at_rank(m, rank):
    if m == 0:
        return ()
    cdef Py_ssize_t mm = m, i
    cdef unsigned long long mask = ((<unsigned long long>1 << (mm - 1)) - 1) - <unsigned long long>rank
    parts = []
    cdef int cur = 1
    for i in range(mm - 1):
        if (mask >> (mm - 2 - i)) & 1:
            parts.append(cur)
            cur = 1
        else:
            cur += 1
    parts.append(cur)
    return tuple(parts)


def permutation_at_rank(m, rank):
    vals = list(range(1, m + 1))
    out = []
    f = 1
    for i in range(2, m + 1):
        f *= i
    r = rank
    for i in range(m, 0, -1):
        f //= i
        d, r = divmod(r, f)
        out.append(vals.pop(d))
    return tuple(out)


cdef bint _next_perm_c(int* a, Py_ssize_t n):
    cdef Py_ssize_t i = n - 2, j, lo, hi
    cdef int tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1
        hi -= 1
    return 1


cdef bint _greedy_fits_c(const int* pat, Py_ssize_t kp, const int* parts, Py_ssize_t nh):
    cdef Py_ssize_t j = 0, t
    for t in range(kp):
        while j < nh and parts[j] < pat[t]:
            j += 1
        if j == nh:
            return 0
        j += 1
    return 1


cdef struct FlatPats:
    int* data
    Py_ssize_t* off
    Py_ssize_t count


cdef FlatPats _flatten(patterns) except *:
    cdef FlatPats fp
    cdef Py_ssize_t total = 0, i, j, w
    for p in patterns:
        total += len(p)
    fp.count = len(patterns)
    fp.data = <int*>malloc(total * sizeof(int) if total > 0 else sizeof(int))
    fp.off = <Py_ssize_t*>malloc((fp.count + 1) * sizeof(Py_ssize_t))
    if fp.data == NULL or fp.off == NULL:
        if fp.data != NULL:
            free(fp.data)
        if fp.off != NULL:
            free(fp.off)
        raise MemoryError()
    w = 0
    for i in range(fp.count):
        fp.off[i] = w
        p = patterns[i]
        for j in range(len(p)):
            fp.data[w] = p[j]
            w += 1
    fp.off[fp.count] = w
    return fp


def scan_layered(m, pattern_profiles, rank_lo, rank_hi):
    cdef Py_ssize_t mm = m
    if mm == 0:
        ok0 = all(len(p) == 0 for p in pattern_profiles)
        if rank_lo == 0 and rank_hi > 0 and ok0:
            return (0, 1)
        return (-1, rank_hi - rank_lo)
    if mm > 62:
        raise ValueError("composition rank space exceeds 62-bit masks")
    cdef FlatPats fp = _flatten(pattern_profiles)
    cdef int* parts = <int*>malloc(mm * sizeof(int))
    if parts == NULL:
        free(fp.data)
        free(fp.off)
        raise MemoryError()
    cdef unsigned long long lo = rank_lo, hi = rank_hi, r, mask
    cdef unsigned long long full = (<unsigned long long>1 << (mm - 1)) - 1
    cdef Py_ssize_t i, t, nparts
    cdef int cur
    cdef bint ok
    try:
        r = lo
        while r < hi:
            mask = full - r
            nparts = 0
            cur = 1
            for i in range(mm - 1):
                if (mask >> (mm - 2 - i)) & 1:
                    parts[nparts] = cur
                    nparts += 1
                    cur = 1
                else:
                    cur += 1
            parts[nparts] = cur
            nparts += 1
            ok = 1
            for t in range(fp.count):
                if not _greedy_fits_c(fp.data + fp.off[t], fp.off[t + 1] - fp.off[t],
                                      parts, nparts):
                    ok = 0
                    break
            if ok:
                return (<long long>r, <long long>(r - lo + 1))
            r += 1
        return (-1, <long long>(hi - lo))
    finally:
        free(parts)
        free(fp.data)
        free(fp.off)


def scan_all_perms(m, patterns, rank_lo, rank_hi):
    cdef Py_ssize_t mm = m
    if mm == 0:
        ok0 = all(len(p) == 0 for p in patterns)
        if rank_lo == 0 and rank_hi > 0 and ok0:
            return (0, 1)
        return (-1, rank_hi - rank_lo)
    cdef FlatPats fp = _flatten(patterns)
    start = permutation_at_rank(m, rank_lo)
    cdef int* perm = _to_ints(start, mm)
    cdef Py_ssize_t* pos = <Py_ssize_t*>malloc(mm * sizeof(Py_ssize_t))
    if pos == NULL:
        free(perm)
        free(fp.data)
        free(fp.off)
        raise MemoryError()
    cdef unsigned long long lo = rank_lo, hi = rank_hi, r
    cdef Py_ssize_t t
    cdef bint ok
    try:
        r = lo
        while r < hi:
            ok = 1
            for t in range(fp.count):
                if not _embed(fp.data + fp.off[t], fp.off[t + 1] - fp.off[t],
                              perm, mm, pos):
                    ok = 0
                    break
            if ok:
                return (<long long>r, <long long>(r - lo + 1))
            r += 1
            if r < hi:
                _next_perm_c(perm, mm)
        return (-1, <long long>(hi - lo))
    finally:
        free(perm)
        free(pos)
        free(fp.data)
        free(fp.off)


def scan_perm_list(candidates, patterns, lo, hi):
    cdef FlatPats fp = _flatten(patterns)
    cdef Py_ssize_t idx, t, mm, i, cap = 0
    cdef int* host = NULL
    cdef Py_ssize_t* pos = NULL
    cdef bint ok
    try:
        for idx in range(lo, hi):
            cand = candidates[idx]
            mm = len(cand)
            if mm > cap:
                if host != NULL:
                    free(host)
                if pos != NULL:
                    free(pos)
                cap = mm if mm > 0 else 1
                host = <int*>malloc(cap * sizeof(int))
                pos = <Py_ssize_t*>malloc(cap * sizeof(Py_ssize_t))
                if host == NULL or pos == NULL:
                    raise MemoryError()
            for i in range(mm):
                host[i] = cand[i]
            ok = 1
            for t in range(fp.count):
                if not _embed(fp.data + fp.off[t], fp.off[t + 1] - fp.off[t],
                              host, mm, pos):
                    ok = 0
                    break
            if ok:
                return (idx, idx - lo + 1)
        return (-1, hi - lo)
    finally:
        if host != NULL:
            free(host)
        if pos != NULL:
            free(pos)
        free(fp.data)
        free(fp.off)
