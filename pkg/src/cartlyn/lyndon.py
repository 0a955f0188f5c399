"""Lyndon predicates, tables, trees, forests and the Chen-Fox-Lyndon cover.

A Lyndon word is strictly smaller than all of its proper non-empty
suffixes. The table construction scans right to left and grows the factor
at position i by absorbing whole factors to its right while the current
factor compares below the next one; the comparison is either done on the
factor letters directly (simple, worst-case quadratic) or in constant time
through suffix ranks (linear overall).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from ._kernels import lyn_scan
from .errors import NotLyndonError, RankMismatchError, TableMismatchError
from .suffix import RankTable, check_permutation, rank_table
from .word import NORMAL, AlphabetOrdering, Word, compare_words


@dataclass(frozen=True)
class LynTable:
    """lyn[i] = length of the longest Lyndon factor starting at i."""

    values: tuple[int, ...]
    comparisons: Optional[int] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class LyndonTree:
    """Full binary parse tree of a Lyndon word.

    Node ids 0..n-1 are the leaves in position order; ids n..2n-2 are the
    internal nodes. Every node spans the inclusive factor interval
    [first, last]; an internal node concatenates its children, where the
    right child is the smallest proper non-empty suffix of the node's
    factor. Trees extracted from a forest keep absolute intervals.
    """

    n_leaves: int
    root: int
    parent: tuple[Optional[int], ...]
    left: tuple[Optional[int], ...]
    right: tuple[Optional[int], ...]
    first: tuple[int, ...]
    last: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.parent)

    def is_leaf(self, node: int) -> bool:
        return node < self.n_leaves

    def span(self) -> tuple[int, int]:
        """Absolute interval covered by the whole tree."""
        return self.first[self.root], self.last[self.root]

    def leaves_inorder(self) -> list[int]:
        out = []
        stack = []
        node: Optional[int] = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = self.left[node]
            node = stack.pop()
            if self.is_leaf(node):
                out.append(node)
            node = self.right[node]
        return out


def is_lyndon(w: Word, ordering: AlphabetOrdering = NORMAL) -> bool:
    """True iff w is smaller than every proper non-empty suffix of itself."""
    b = w.symbols
    return all(compare_words(b, b[k:], ordering) < 0 for k in range(1, len(b)))


def lyndon_table_letters(y: Word, ordering: AlphabetOrdering = NORMAL) -> LynTable:
    """Longest-Lyndon-factor table by direct letter comparison.

    Factor against factor, symbol by symbol; simple but quadratic on
    inputs like a^k b a^k c where long factors keep being re-compared.
    """
    n = y.n
    b = y.symbols
    lyn = [1] * n
    for i in range(n - 2, -1, -1):
        j = i + 1
        while j < n and compare_words(b[i:j], b[j : j + lyn[j]], ordering) < 0:
            lyn[i] += lyn[j]
            j += lyn[j]
    return LynTable(values=tuple(lyn))


def lyndon_table_ranked(y: Word, r: RankTable) -> LynTable:
    """Longest-Lyndon-factor table driven by suffix ranks.

    Identical output to the letter variant; each factor comparison is one
    rank comparison, at most 2n-2 of them (count reported on the table).
    """
    if r.n != y.n:
        raise RankMismatchError(f"rank table length {r.n} != word length {y.n}")
    if not check_permutation(r.values):
        raise RankMismatchError("rank table is not a permutation of 0..n-1")
    rank_arr = np.fromiter(r.values, np.int64, count=y.n)
    lyn, comparisons = lyn_scan(rank_arr)
    return LynTable(values=tuple(lyn.tolist()), comparisons=int(comparisons))


class _Arena:
    """Growable node store for parse trees over one word."""

    def __init__(self, n: int):
        self.parent: list[Optional[int]] = [None] * n
        self.left: list[Optional[int]] = [None] * n
        self.right: list[Optional[int]] = [None] * n
        self.first = list(range(n))
        self.last = list(range(n))

    def merge(self, u: int, v: int) -> int:
        node = len(self.parent)
        self.parent.append(None)
        self.left.append(u)
        self.right.append(v)
        self.first.append(self.first[u])
        self.last.append(self.last[v])
        self.parent[u] = node
        self.parent[v] = node
        return node


def _build_phrase_stack(
    y: Word, ordering: AlphabetOrdering, cmp: Literal["letters", "ranks"]
) -> tuple[_Arena, list[int]]:
    """Right-to-left factor merging over the whole word.

    The stack holds the parse trees of the factors to the right of the
    scan position, leftmost on top. When the scan ends the stack contains
    one tree per factor of the Chen-Fox-Lyndon cover.
    """
    n = y.n
    b = y.symbols
    arena = _Arena(n)
    ranks: Optional[tuple[int, ...]] = None
    if cmp == "ranks":
        ranks = rank_table(y, ordering).values
    elif cmp != "letters":
        raise ValueError(f"unknown comparison strategy: {cmp!r}")
    stack: list[int] = []
    first, last = arena.first, arena.last
    for i in range(n - 1, -1, -1):
        u = i
        while stack:
            v = stack[-1]
            if ranks is not None:
                smaller = ranks[first[u]] < ranks[first[v]]
            else:
                fu = b[first[u] : last[u] + 1]
                fv = b[first[v] : last[v] + 1]
                smaller = compare_words(fu, fv, ordering) < 0
            if not smaller:
                break
            stack.pop()
            u = arena.merge(u, v)
        stack.append(u)
    return arena, stack


def _extract_tree(arena: _Arena, root: int, n_leaves_total: int) -> LyndonTree:
    """Copy one arena subtree into a standalone tree.

    Leaves are renumbered to 0..m-1 by position, internal nodes to
    m..2m-2 in first-visit order; intervals stay absolute.
    """
    base = arena.first[root]
    m = arena.last[root] - base + 1
    ids: dict[int, int] = {}
    next_internal = m
    order: list[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        if v < n_leaves_total:
            ids[v] = v - base
        else:
            ids[v] = next_internal
            next_internal += 1
            stack.append(arena.right[v])  # type: ignore[arg-type]
            stack.append(arena.left[v])  # type: ignore[arg-type]
        order.append(v)
    count = 2 * m - 1
    parent: list[Optional[int]] = [None] * count
    left: list[Optional[int]] = [None] * count
    right: list[Optional[int]] = [None] * count
    first = [0] * count
    last = [0] * count
    for v in order:
        w = ids[v]
        first[w] = arena.first[v]
        last[w] = arena.last[v]
        if v >= n_leaves_total:
            lc, rc = ids[arena.left[v]], ids[arena.right[v]]
            left[w], right[w] = lc, rc
            parent[lc] = w
            parent[rc] = w
    return LyndonTree(
        n_leaves=m,
        root=ids[root],
        parent=tuple(parent),
        left=tuple(left),
        right=tuple(right),
        first=tuple(first),
        last=tuple(last),
    )


def lyndon_tree(
    y: Word,
    ordering: AlphabetOrdering = NORMAL,
    cmp: Literal["letters", "ranks"] = "ranks",
) -> LyndonTree:
    """Parse tree of a Lyndon word: n leaves, n-1 internal nodes.

    Refuses words that are not Lyndon under the given ordering; prepend a
    symbol smaller than every occurring symbol first if needed.
    """
    if not is_lyndon(y, ordering):
        raise NotLyndonError("input word is not a Lyndon word under this ordering")
    arena, stack = _build_phrase_stack(y, ordering, cmp)
    assert len(stack) == 1
    return _extract_tree(arena, stack[0], y.n)


def lyndon_forest(y: Word, ordering: AlphabetOrdering = NORMAL) -> list[LyndonTree]:
    """One parse tree per factor of the Chen-Fox-Lyndon cover, in order."""
    arena, stack = _build_phrase_stack(y, ordering, "ranks")
    return [_extract_tree(arena, root, y.n) for root in reversed(stack)]


def cfl_factorize(y: Word, lt: LynTable) -> list[tuple[int, int]]:
    """Chen-Fox-Lyndon cover as inclusive intervals.

    Greedy walk: the factor at p has length lyn[p] and the next factor
    starts right after it. Factors come out lexicographically
    non-increasing.
    """
    n = y.n
    if lt.n != n:
        raise TableMismatchError(f"table length {lt.n} != word length {n}")
    for i, v in enumerate(lt.values):
        if not 1 <= v <= n - i:
            raise TableMismatchError(f"lyn[{i}] = {v} outside 1..{n - i}")
    out = []
    p = 0
    while p < n:
        q = p + lt.values[p]
        out.append((p, q - 1))
        p = q
    return out


def tree_to_dot(t: LyndonTree, y: Word) -> str:
    """Graphviz rendering; internal nodes carry their interval and, when
    short enough, the factor text."""
    lines = ["digraph lyndontree {", "  node [shape=box];"]
    for v in range(t.node_count):
        f, l = t.first[v], t.last[v]
        if t.is_leaf(v):
            label = f"{f}:{y.symbols[f:f + 1].decode('latin-1')}"
            lines.append(f'  n{v} [shape=oval, label="{label}"];')
        else:
            label = f"[{f},{l}]"
            if l - f + 1 <= 32:
                label += " " + y.factor(f, l).decode("latin-1")
            lines.append(f'  n{v} [label="{label}"];')
    for v in range(t.node_count):
        if t.left[v] is not None:
            lines.append(f"  n{v} -> n{t.left[v]};")
        if t.right[v] is not None:
            lines.append(f"  n{v} -> n{t.right[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
