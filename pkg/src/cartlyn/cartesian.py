"""Cartesian trees and next-nearest-smaller tables for number sequences.

Both constructions run right to left and share the same climbing step: to
place position i, walk up from position i+1 until a strictly smaller value
is found. A virtual sentinel below every value sits at position n; it is
never stored and never compared against, it only terminates climbs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InconsistentTreeError
from .word import NumSeq


@dataclass(frozen=True)
class PosTree:
    """Binary tree whose nodes are the positions 0..n-1.

    Stored as flat parent/left/right arrays. A Cartesian tree over a
    sequence additionally satisfies the min-heap property on values and
    yields 0..n-1 in symmetric traversal order.
    """

    parent: tuple[Optional[int], ...]
    left: tuple[Optional[int], ...]
    right: tuple[Optional[int], ...]
    root: int
    comparisons: Optional[int] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.parent)

    def inorder(self) -> list[int]:
        """Positions in symmetric traversal order (iterative)."""
        out: list[int] = []
        stack: list[int] = []
        node: Optional[int] = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = self.left[node]
                if len(stack) > self.n:
                    raise InconsistentTreeError("left-child cycle detected")
            node = stack.pop()
            out.append(node)
            if len(out) > self.n:
                raise InconsistentTreeError("traversal cycle detected")
            node = self.right[node]
        return out

    def validate(self, values: Optional[Sequence[int]] = None) -> None:
        """Check structural invariants; raise InconsistentTreeError otherwise.

        When values are given the min-heap property is checked as well.
        """
        n = self.n
        if not (len(self.left) == len(self.right) == n):
            raise InconsistentTreeError("parent/left/right lengths differ")
        if not (0 <= self.root < n):
            raise InconsistentTreeError(f"root {self.root} out of range")
        if self.parent[self.root] is not None:
            raise InconsistentTreeError("root must have no parent")
        for p in range(n):
            c = self.left[p]
            if c is not None and (not 0 <= c < p or self.parent[c] != p):
                raise InconsistentTreeError(f"bad left link {p}->{c}")
            c = self.right[p]
            if c is not None and (not p < c < n or self.parent[c] != p):
                raise InconsistentTreeError(f"bad right link {p}->{c}")
        for c in range(n):
            p = self.parent[c]
            if p is None:
                if c != self.root:
                    raise InconsistentTreeError(f"node {c} is detached")
                continue
            if not 0 <= p < n or (self.left[p] != c and self.right[p] != c):
                raise InconsistentTreeError(f"parent link {c}->{p} not mirrored")
        if self.inorder() != list(range(n)):
            raise InconsistentTreeError("symmetric order is not 0..n-1")
        if values is not None:
            if len(values) != n:
                raise InconsistentTreeError("value sequence length differs from tree")
            for c in range(n):
                p = self.parent[c]
                if p is not None and values[p] > values[c]:
                    raise InconsistentTreeError(f"heap violation at {c}")


@dataclass(frozen=True)
class NnsTable:
    """nns[i] = smallest j > i with x[j] < x[i], or n when none exists."""

    values: tuple[int, ...]
    comparisons: Optional[int] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.values)


def build_cartesian(x: NumSeq) -> PosTree:
    """Cartesian tree of a number sequence, built right to left.

    Position i climbs the leftmost path from i+1 while x[i] is strictly
    below the path value, then is attached as a left child there. Equal
    values stop the climb, so the rightmost of equal values ends up the
    ancestor. Executes at most 2n-2 value comparisons, reported on the
    returned tree.
    """
    n = x.n
    vals = x.values
    parent: list[Optional[int]] = [None] * (n + 1)
    left: list[Optional[int]] = [None] * (n + 1)
    right: list[Optional[int]] = [None] * n
    comparisons = 0
    for i in range(n - 1, -1, -1):
        s = i + 1
        while s != n:
            comparisons += 1
            if vals[i] < vals[s]:
                s = parent[s]  # type: ignore[assignment]
            else:
                break
        old = left[s]
        right[i] = old
        if old is not None:
            parent[old] = i
        left[s] = i
        parent[i] = s
    root = left[n]
    assert root is not None
    parent[root] = None
    return PosTree(
        parent=tuple(parent[:n]),
        left=tuple(left[:n]),
        right=tuple(right),
        root=root,
        comparisons=comparisons,
    )


def nns_table(x: NumSeq) -> NnsTable:
    """Next-nearest-smaller table of a number sequence.

    Chases already computed nns links instead of scanning: every value
    skipped over is at least as large as the values it summarizes, so no
    strictly smaller element can hide inside a jump. At most 2n-2 value
    comparisons in total.
    """
    n = x.n
    vals = x.values
    nns = [n] * n
    comparisons = 0
    for i in range(n - 2, -1, -1):
        j = i + 1
        while j != n:
            comparisons += 1
            if vals[j] < vals[i]:
                break
            j = nns[j]
        nns[i] = j
    return NnsTable(values=tuple(nns), comparisons=comparisons)


def nns_from_tree(t: PosTree, x: NumSeq) -> NnsTable:
    """Read the nns table off a Cartesian tree.

    For distinct values this is the parent for a left child and the
    nearest right-lying ancestor for a right child; with equal values the
    climb additionally skips equal-valued ancestors. Must reproduce
    nns_table(x) exactly.
    """
    if t.n != x.n:
        raise InconsistentTreeError("tree size differs from sequence length")
    t.validate(x.values)
    n = x.n
    vals = x.values
    out = []
    for i in range(n):
        j = t.parent[i]
        while j is not None and not (j > i and vals[j] < vals[i]):
            j = t.parent[j]
        out.append(n if j is None else j)
    return NnsTable(values=tuple(out))


def tree_to_dot(t: PosTree, x: Optional[NumSeq] = None) -> str:
    """Graphviz rendering with nodes labelled ``position:value``."""
    lines = ["digraph postree {", "  node [shape=oval];"]
    for i in range(t.n):
        label = f"{i}:{x.values[i]}" if x is not None else str(i)
        lines.append(f'  n{i} [label="{label}"];')
    for p in range(t.n):
        if t.left[p] is not None:
            lines.append(f"  n{p} -> n{t.left[p]} [label=L];")
        if t.right[p] is not None:
            lines.append(f"  n{p} -> n{t.right[p]} [label=R];")
    lines.append("}")
    return "\n".join(lines) + "\n"
