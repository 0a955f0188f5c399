"""Suffix sorting: the rank of every suffix in lexicographic order."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAPermutationError
from .word import NORMAL, AlphabetOrdering, Word


@dataclass(frozen=True)
class RankTable:
    """Permutation of 0..n-1: rank[i] < rank[j] iff suffix i < suffix j."""

    values: tuple[int, ...]
    ordering: AlphabetOrdering = NORMAL

    @property
    def n(self) -> int:
        return len(self.values)


def _doubling_ranks(key0: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dense suffix ranks and the sorted suffix order by prefix doubling.

    Each round sorts on (rank of first half, rank of second half) packed
    into one integer key, doubling the compared prefix width, and stops as
    soon as all ranks are distinct. A suffix running out of symbols gets
    the smallest second-half key, so proper prefixes sort first. Overall
    O(n log n) with O(n) rounds work done by radix argsort.
    """
    n = len(key0)
    order = np.argsort(key0, kind="stable")
    keys = key0[order]
    boundary = np.empty(n, np.bool_)
    boundary[0] = True
    boundary[1:] = keys[1:] != keys[:-1]
    rank = np.empty(n, np.int64)
    rank[order] = np.cumsum(boundary) - 1
    width = 1
    while rank[order[-1]] != n - 1:
        tail = np.zeros(n, np.int64)
        tail[: n - width] = rank[width:] + 1
        combined = rank * np.int64(n + 1) + tail
        order = np.argsort(combined, kind="stable")
        keys = combined[order]
        boundary[0] = True
        boundary[1:] = keys[1:] != keys[:-1]
        rank = np.empty(n, np.int64)
        rank[order] = np.cumsum(boundary) - 1
        width <<= 1
    return rank, order


def _initial_key(y: Word, ordering: AlphabetOrdering) -> np.ndarray:
    sym = np.frombuffer(y.symbols, dtype=np.uint8).astype(np.int64)
    if ordering is NORMAL:
        return sym
    return 255 - sym


def rank_table(y: Word, ordering: AlphabetOrdering = NORMAL) -> RankTable:
    """Rank of each suffix of y under the given alphabet ordering.

    The ordering enters only through the first-round sort keys; the word
    itself is never rewritten.
    """
    rank, _ = _doubling_ranks(_initial_key(y, ordering))
    return RankTable(values=tuple(rank.tolist()), ordering=ordering)


def rank_and_order_arrays(
    y: Word, ordering: AlphabetOrdering = NORMAL
) -> tuple[np.ndarray, np.ndarray]:
    """Suffix ranks and sorted suffix order as int64 arrays."""
    return _doubling_ranks(_initial_key(y, ordering))


def suffix_order(r: RankTable) -> tuple[int, ...]:
    """Positions sorted by suffix: the inverse permutation of the ranks."""
    n = r.n
    out = [-1] * n
    for i, k in enumerate(r.values):
        if not 0 <= k < n or out[k] != -1:
            raise NotAPermutationError("rank table is not a permutation of 0..n-1")
        out[k] = i
    return tuple(out)


def check_permutation(values: tuple[int, ...]) -> bool:
    """True when values is a permutation of 0..len-1."""
    n = len(values)
    seen = bytearray(n)
    for v in values:
        if not 0 <= v < n or seen[v]:
            return False
        seen[v] = 1
    return True
