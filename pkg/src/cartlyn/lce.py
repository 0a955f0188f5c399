"""Constant-time longest-common-extension queries.

The index keeps, for the word and for its reversal, the suffix order, the
array of longest common prefixes of order-adjacent suffixes, and a doubling
(sparse) range-minimum table over that array. A rightward query becomes a
range minimum between the two suffix ranks; a leftward query is a rightward
query on the reversed word at mirrored positions.

Only symbol equality matters here, so indexes built under the normal and
the inverted alphabet ordering answer every query identically.
"""
from __future__ import annotations

import numpy as np

from ._kernels import kasai_adjacent_lcp
from .errors import OutOfRangeError
from .suffix import rank_and_order_arrays
from .word import NORMAL, AlphabetOrdering, Word


def _build_rmq(adj: np.ndarray) -> np.ndarray:
    """Sparse min table: tab[k, p] = min(adj[p .. p + 2^k - 1])."""
    m = len(adj)
    if m == 0:
        return np.zeros((1, 1), np.int32)
    levels = m.bit_length()
    tab = np.empty((levels, m), np.int32)
    tab[0] = adj
    width = 1
    for lev in range(1, levels):
        span = m - 2 * width + 1
        np.minimum(tab[lev - 1, :span], tab[lev - 1, width : width + span], out=tab[lev, :span])
        width <<= 1
    return tab


def _build_log_table(m: int) -> np.ndarray:
    """logt[s] = floor(log2 s) for spans 1..m."""
    logt = np.zeros(max(m, 1) + 1, np.int64)
    level = 1
    p = 2
    while p <= m:
        logt[p : min(2 * p, m + 1)] = level
        p <<= 1
        level += 1
    return logt


class LceIndex:
    """Preprocessed structure answering extension queries in O(1).

    Construction costs one suffix sort of the word and one of its
    reversal plus O(n log n) table space.
    """

    def __init__(self, y: Word, ordering: AlphabetOrdering = NORMAL, *, _forward=None):
        n = y.n
        self.n = n
        self.ordering = ordering
        sym = np.frombuffer(y.symbols, dtype=np.uint8)
        # callers that already sorted the suffixes may pass the arrays in
        inv_f, order_f = _forward if _forward is not None else rank_and_order_arrays(y)
        self._inv_f = inv_f
        self._tab_f = _build_rmq(kasai_adjacent_lcp(sym, order_f, inv_f))
        rword = Word(y.symbols[::-1])
        rsym = np.frombuffer(rword.symbols, dtype=np.uint8)
        inv_r, order_r = rank_and_order_arrays(rword)
        self._inv_r = inv_r
        self._tab_r = _build_rmq(kasai_adjacent_lcp(rsym, order_r, inv_r))
        self._logt = _build_log_table(n - 1)
        for arr in (self._inv_f, self._tab_f, self._inv_r, self._tab_r, self._logt):
            arr.setflags(write=False)  # queries are safe to share across threads

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise OutOfRangeError(f"positions ({i}, {j}) outside word of length {self.n}")

    def right(self, i: int, j: int) -> int:
        """Length of the longest common prefix of the suffixes at i and j."""
        self._check(i, j)
        if i == j:
            return self.n - i
        a = int(self._inv_f[i])
        b = int(self._inv_f[j])
        if a > b:
            a, b = b, a
        k = int(self._logt[b - a])
        row = self._tab_f[k]
        return int(min(row[a], row[b - (1 << k)]))

    def left(self, i: int, j: int) -> int:
        """Length of the longest common suffix of the prefixes ending at i and j."""
        self._check(i, j)
        if i == j:
            return i + 1
        p = self.n - 1 - i
        q = self.n - 1 - j
        a = int(self._inv_r[p])
        b = int(self._inv_r[q])
        if a > b:
            a, b = b, a
        k = int(self._logt[b - a])
        row = self._tab_r[k]
        return int(min(row[a], row[b - (1 << k)]))

    def _scan_arrays(self):
        """Raw arrays consumed by the compiled run-detection pass."""
        return self._inv_f, self._tab_f, self._inv_r, self._tab_r, self._logt


def build_lce(y: Word, ordering: AlphabetOrdering = NORMAL) -> LceIndex:
    """Build the extension index for y; see LceIndex."""
    return LceIndex(y, ordering)


def lce_right(index: LceIndex, i: int, j: int) -> int:
    return index.right(i, j)


def lce_left(index: LceIndex, i: int, j: int) -> int:
    return index.left(i, j)
