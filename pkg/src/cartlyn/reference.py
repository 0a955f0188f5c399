"""Brute-force oracles, each the most literal reading of a definition.

These deliberately share no algorithmic code with the main modules; they
exist so that every fast construction can be checked against an
independent computation. Nothing here is optimized.
"""
from __future__ import annotations

from typing import Literal

from .cartesian import NnsTable, PosTree
from .errors import OutOfRangeError
from .lyndon import LynTable
from .suffix import RankTable
from .word import NORMAL, AlphabetOrdering, NumSeq, Word

_INVERT = bytes(255 - c for c in range(256))


def _keyed(b: bytes, ordering: AlphabetOrdering) -> bytes:
    return b if ordering is NORMAL else b.translate(_INVERT)


def naive_nns(x: NumSeq) -> NnsTable:
    """Scan right of every position for the first strictly smaller value."""
    n = x.n
    vals = x.values
    out = []
    for i in range(n):
        j = i + 1
        while j < n and vals[j] >= vals[i]:
            j += 1
        out.append(j)
    return NnsTable(values=tuple(out))


def naive_cartesian(x: NumSeq) -> PosTree:
    """Recursive construction: root = rightmost minimum, recurse on both sides."""
    n = x.n
    vals = x.values
    parent: list = [None] * n
    left: list = [None] * n
    right: list = [None] * n

    def build(lo: int, hi: int) -> int:
        m = min(vals[lo : hi + 1])
        root = max(i for i in range(lo, hi + 1) if vals[i] == m)
        if lo < root:
            c = build(lo, root - 1)
            left[root] = c
            parent[c] = root
        if root < hi:
            c = build(root + 1, hi)
            right[root] = c
            parent[c] = root
        return root

    root = build(0, n - 1)
    return PosTree(parent=tuple(parent), left=tuple(left), right=tuple(right), root=root)


def _is_lyndon_bytes(w: bytes) -> bool:
    return all(w < w[k:] for k in range(1, len(w)))


def naive_lyn(y: Word, ordering: AlphabetOrdering = NORMAL) -> LynTable:
    """Test every factor with the Lyndon definition, keep the longest."""
    b = _keyed(y.symbols, ordering)
    n = len(b)
    out = []
    for i in range(n):
        best = max(l for l in range(1, n - i + 1) if _is_lyndon_bytes(b[i : i + l]))
        out.append(best)
    return LynTable(values=tuple(out))


def naive_rank(y: Word, ordering: AlphabetOrdering = NORMAL) -> RankTable:
    """Sort all suffixes by direct comparison, rank = sorted position."""
    b = _keyed(y.symbols, ordering)
    n = len(b)
    order = sorted(range(n), key=lambda i: b[i:])
    rank = [0] * n
    for k, i in enumerate(order):
        rank[i] = k
    return RankTable(values=tuple(rank), ordering=ordering)


def naive_lce(y: Word, i: int, j: int, direction: Literal["right", "left"]) -> int:
    """Symbol-by-symbol extension scan."""
    b = y.symbols
    n = len(b)
    if not (0 <= i < n and 0 <= j < n):
        raise OutOfRangeError(f"positions ({i}, {j}) outside word of length {n}")
    length = 0
    if direction == "right":
        while i + length < n and j + length < n and b[i + length] == b[j + length]:
            length += 1
    elif direction == "left":
        while i - length >= 0 and j - length >= 0 and b[i - length] == b[j - length]:
            length += 1
    else:
        raise ValueError(f"unknown direction: {direction!r}")
    return length
