"""Compiled inner loops. Everything here is sequential and index-heavy."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def kasai_adjacent_lcp(sym, order, inv):
    """lcp of order-neighbouring suffixes: adj[t] = lcp(order[t], order[t+1]).

    Walks positions left to right reusing the previous match length, so the
    total number of symbol comparisons is linear.
    """
    n = len(sym)
    adj = np.zeros(max(n - 1, 0), np.int32)
    match = 0
    for i in range(n):
        r = inv[i]
        if r > 0:
            j = order[r - 1]
            while i + match < n and j + match < n and sym[i + match] == sym[j + match]:
                match += 1
            adj[r - 1] = match
            if match > 0:
                match -= 1
        else:
            match = 0
    return adj


@njit(cache=True)
def lyn_scan(rank):
    """Longest-Lyndon-factor lengths from suffix ranks, right to left.

    At position i, factors to the right are repeatedly absorbed while the
    suffix at i ranks below the suffix at the absorption point. Returns the
    table and the number of rank comparisons executed (at most 2n-2: each
    absorption removes a factor, each position stops at most once).
    """
    n = len(rank)
    lyn = np.ones(n, np.int64)
    comparisons = 0
    for i in range(n - 2, -1, -1):
        j = i + 1
        ri = rank[i]
        while j < n:
            comparisons += 1
            if ri < rank[j]:
                lyn[i] += lyn[j]
                j += lyn[j]
            else:
                break
    return lyn, comparisons


@njit(cache=True)
def rmq_min(tab, logt, lo, hi):
    """Minimum of the level-0 row over inclusive positions [lo, hi]."""
    k = logt[hi - lo + 1]
    a = tab[k, lo]
    b = tab[k, hi - (1 << k) + 1]
    return a if a < b else b


@njit(cache=True)
def runs_scan(lyn, inv_f, tab_f, inv_r, tab_r, logt, n):
    """One detection pass over all positions.

    For each i the longest Lyndon factor [i, i+lyn[i]-1] is extended by the
    longest common extensions to the left and right of its borders; a run
    is recorded when the extensions cover one full period. Returns the
    candidate extension lengths for every position plus the recorded
    (start, end, period) triples.
    """
    starts = np.empty(n, np.int64)
    ends = np.empty(n, np.int64)
    periods = np.empty(n, np.int64)
    ells = np.zeros(n, np.int64)
    rs = np.zeros(n, np.int64)
    cnt = 0
    for i in range(n):
        period = lyn[i]
        j = i + period
        if i == 0:
            ell = 0
        else:
            # common suffix of prefixes ending at i-1 and j-1, via the
            # reversed-word index at mirrored positions
            p = n - i
            q = n - j
            if p == q:
                ell = n - p
            else:
                a = inv_r[p]
                b = inv_r[q]
                if a > b:
                    a, b = b, a
                ell = rmq_min(tab_r, logt, a, b - 1)
        if j == n:
            r = 0
        else:
            a = inv_f[i]
            b = inv_f[j]
            if a > b:
                a, b = b, a
            r = rmq_min(tab_f, logt, a, b - 1)
        ells[i] = ell
        rs[i] = r
        if ell + r >= period:
            starts[cnt] = i - ell
            ends[cnt] = j + r - 1
            periods[cnt] = period
            cnt += 1
    return starts[:cnt], ends[:cnt], periods[:cnt], ells, rs
