"""Pure-Python kernels for the hot inner loops.

This module mirrors the compiled extension ``superpatterns._kernels``;
``superpatterns.kernels`` selects one of the two at import time.  Both expose
the same functions with the same semantics, so every caller (and the parity
tests) can treat them interchangeably.

Conventions local to the kernels: positions and ranks are 0-based, values in
one-line notation are 1-based, and candidates within a length are ordered by
rank (compositions in lexicographic order, permutations of 1..m in
lexicographic one-line order).  The public modules own the 1-based reporting
convention.
"""

from __future__ import annotations

import math

BACKEND = "python"


def lex_min_embedding(pattern, host):
    """Positions (0-based) of the lexicographically smallest embedding.

    Depth-first matching of pattern entries left to right over host
    positions, pruning by remaining-length feasibility and by the value
    window implied by already-matched entries.  Trying positions in
    increasing order makes the first complete match the lexicographically
    smallest one.  Returns None when the pattern does not embed.
    """
    k = len(pattern)
    m = len(host)
    if k == 0:
        return ()
    if k > m:
        return None
    pos = [0] * k
    i = 0
    start = 0
    while True:
        # Value window for pattern[i] given the matched prefix.
        lo = 0
        hi = m + 1
        for j in range(i):
            v = host[pos[j]]
            if pattern[j] < pattern[i]:
                if v > lo:
                    lo = v
            elif v < hi:
                hi = v
        limit = m - (k - i - 1)  # leave room for the unmatched suffix
        found = -1
        for p in range(start, limit):
            if lo < host[p] < hi:
                found = p
                break
        if found >= 0:
            pos[i] = found
            i += 1
            if i == k:
                return tuple(pos)
            start = found + 1
        else:
            i -= 1
            if i < 0:
                return None
            start = pos[i] + 1


def contains(pattern, host):
    """True iff the pattern embeds into the host."""
    return lex_min_embedding(pattern, host) is not None


def greedy_layer_indices(pattern_sizes, host_sizes):
    """Greedy left-to-right layer matching on layer-size profiles.

    Each pattern layer of size s consumes the first not-yet-passed host
    layer of size >= s.  Returns the 0-based host layer indices (strictly
    increasing) or None when some pattern layer cannot be placed.
    """
    out = []
    j = 0
    nh = len(host_sizes)
    for s in pattern_sizes:
        while j < nh and host_sizes[j] < s:
            j += 1
        if j == nh:
            return None
        out.append(j)
        j += 1
    return tuple(out)


def composition_at_rank(m, rank):
    """The rank-th composition of m, compositions ordered lexicographically.

    Compositions of m correspond to cut sets of {1..m-1}; reading the cut
    bits most-significant-first, lexicographic order of compositions is
    descending order of the bit value, hence the complement below.
    """
    if m == 0:
        return ()
    mask = ((1 << (m - 1)) - 1) - rank
    parts = []
    cur = 1
    for i in range(m - 1):
        if (mask >> (m - 2 - i)) & 1:
            parts.append(cur)
            cur = 1
        else:
            cur += 1
    parts.append(cur)
    return tuple(parts)


def permutation_at_rank(m, rank):
    """The rank-th permutation of 1..m in lexicographic one-line order."""
    vals = list(range(1, m + 1))
    out = []
    f = math.factorial(m)
    r = rank
    for i in range(m, 0, -1):
        f //= i
        d, r = divmod(r, f)
        out.append(vals.pop(d))
    return tuple(out)


def _next_permutation(a):
    """Advance list a to its lexicographic successor in place."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = a[:i:-1]
    return True


def _greedy_fits(pattern_sizes, parts):
    j = 0
    nh = len(parts)
    for s in pattern_sizes:
        while j < nh and parts[j] < s:
            j += 1
        if j == nh:
            return False
        j += 1
    return True


def scan_layered(m, pattern_profiles, rank_lo, rank_hi):
    """Scan compositions of m by rank for one whose layered permutation
    contains every pattern profile (greedy layer matching).

    Returns (witness_rank, scanned); witness_rank is -1 when the range is
    exhausted, in which case scanned == rank_hi - rank_lo.
    """
    if m == 0:
        ok = all(len(p) == 0 for p in pattern_profiles)
        if rank_lo == 0 and rank_hi > 0 and ok:
            return (0, 1)
        return (-1, rank_hi - rank_lo)
    full = (1 << (m - 1)) - 1
    for r in range(rank_lo, rank_hi):
        mask = full - r
        parts = []
        cur = 1
        for i in range(m - 1):
            if (mask >> (m - 2 - i)) & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        ok = True
        for pat in pattern_profiles:
            if not _greedy_fits(pat, parts):
                ok = False
                break
        if ok:
            return (r, r - rank_lo + 1)
    return (-1, rank_hi - rank_lo)


def scan_all_perms(m, patterns, rank_lo, rank_hi):
    """Scan permutations of 1..m by lexicographic rank for one containing
    every pattern (one-line tuples).  Same return contract as scan_layered.
    """
    if m == 0:
        ok = all(len(p) == 0 for p in patterns)
        if rank_lo == 0 and rank_hi > 0 and ok:
            return (0, 1)
        return (-1, rank_hi - rank_lo)
    perm = list(permutation_at_rank(m, rank_lo))
    r = rank_lo
    while r < rank_hi:
        t = tuple(perm)
        ok = True
        for pat in patterns:
            if lex_min_embedding(pat, t) is None:
                ok = False
                break
        if ok:
            return (r, r - rank_lo + 1)
        r += 1
        if r < rank_hi:
            _next_permutation(perm)
    return (-1, rank_hi - rank_lo)


def scan_perm_list(candidates, patterns, lo, hi):
    """Scan candidates[lo:hi] (one-line tuples) for one containing every
    pattern.  Same return contract as scan_layered, with list indices in
    place of ranks.
    """
    for idx in range(lo, hi):
        cand = candidates[idx]
        ok = True
        for pat in patterns:
            if lex_min_embedding(pat, cand) is None:
                ok = False
                break
        if ok:
            return (idx, idx - lo + 1)
    return (-1, hi - lo)
