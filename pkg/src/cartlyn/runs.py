"""Run (maximal periodicity) detection.

A run is an occurrence whose length is at least twice its smallest period
and that cannot be extended in either direction with that period. Every run
is anchored by a position whose longest Lyndon factor, under the natural or
the inverted alphabet ordering, is one period of the run; the detection
pass therefore extends each longest Lyndon factor by longest common
extensions and keeps the interval when the extensions cover a full period.
Running both orderings and joining the results yields exactly the runs.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._kernels import lyn_scan, runs_scan
from .errors import CartlynError, IndexMismatchError
from .lce import LceIndex
from .lyndon import lyndon_table_ranked
from .suffix import RankTable, rank_and_order_arrays
from .word import INVERTED, NORMAL, AlphabetOrdering, Word


class Run(NamedTuple):
    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class RunCandidate(NamedTuple):
    """Extension record at one position: the longest Lyndon factor starts
    at position with length lyn and extends left_ext/right_ext symbols
    beyond its borders. It yields a run iff left_ext + right_ext >= lyn."""

    position: int
    lyn: int
    left_ext: int
    right_ext: int


def _check_inputs(y: Word, ordering: AlphabetOrdering, r: RankTable, index: LceIndex) -> None:
    if r.n != y.n:
        raise IndexMismatchError(f"rank table built for length {r.n}, word has {y.n}")
    if r.ordering is not ordering:
        raise IndexMismatchError(
            f"rank table built for {r.ordering.value} ordering, pass uses {ordering.value}"
        )
    if index.n != y.n:
        raise IndexMismatchError(f"extension index built for length {index.n}, word has {y.n}")


def _scan(y: Word, ordering: AlphabetOrdering, r: RankTable, index: LceIndex):
    _check_inputs(y, ordering, r, index)
    lt = lyndon_table_ranked(y, r)
    lyn_arr = np.fromiter(lt.values, np.int64, count=y.n)
    inv_f, tab_f, inv_r, tab_r, logt = index._scan_arrays()
    starts, ends, periods, ells, rs = runs_scan(lyn_arr, inv_f, tab_f, inv_r, tab_r, logt, y.n)
    return lt, starts, ends, periods, ells, rs


def _dedup(starts: np.ndarray, ends: np.ndarray, periods: np.ndarray) -> set[Run]:
    """Key candidates by (start, end); equal intervals must agree on the
    period, which is checked, not assumed."""
    if len(starts) == 0:
        return set()
    order = np.lexsort((ends, starts))
    s, e, p = starts[order], ends[order], periods[order]
    same = (s[1:] == s[:-1]) & (e[1:] == e[:-1])
    if not np.all(p[1:][same] == p[:-1][same]):
        raise CartlynError("duplicate run interval reported with differing periods")
    keep = np.ones(len(s), dtype=bool)
    keep[1:] = ~same
    return {
        Run(int(a), int(b), int(c))
        for a, b, c in zip(s[keep].tolist(), e[keep].tolist(), p[keep].tolist())
    }


def runs_pass(y: Word, ordering: AlphabetOrdering, r: RankTable, index: LceIndex) -> set[Run]:
    """Single-ordering detection pass, deduplicated by (start, end)."""
    _, starts, ends, periods, _, _ = _scan(y, ordering, r, index)
    return _dedup(starts, ends, periods)


def run_candidates(
    y: Word, ordering: AlphabetOrdering, r: RankTable, index: LceIndex
) -> list[RunCandidate]:
    """Extension record for every position of one detection pass."""
    lt, _, _, _, ells, rs = _scan(y, ordering, r, index)
    return [
        RunCandidate(i, lyn, int(ells[i]), int(rs[i]))
        for i, lyn in enumerate(lt.values)
    ]


def find_runs(y: Word, *, validate: bool = False) -> set[Run]:
    """All runs of y: union of the detection passes under both orderings.

    The suffix sort of the word is shared between the natural-ordering
    pass and the extension index, and the index itself is shared between
    passes since extensions depend on symbol equality only. With
    validate=True every reported run is re-checked against the definition
    (smallest period, twice-period length, maximality); this is quadratic
    per run and meant for tests.
    """
    inv_f, order_f = rank_and_order_arrays(y)
    index = LceIndex(y, _forward=(inv_f, order_f))
    scan_args = index._scan_arrays()
    parts = []
    for ordering in (NORMAL, INVERTED):
        rank_arr = inv_f if ordering is NORMAL else rank_and_order_arrays(y, ordering)[0]
        lyn_arr, _ = lyn_scan(rank_arr)
        starts, ends, periods, _, _ = runs_scan(lyn_arr, *scan_args, y.n)
        parts.append((starts, ends, periods))
    merged = _dedup(
        np.concatenate([p[0] for p in parts]),
        np.concatenate([p[1] for p in parts]),
        np.concatenate([p[2] for p in parts]),
    )
    if validate:
        for run in merged:
            _verify_run(y, run)
    return merged


def _smallest_period(w: bytes) -> int:
    n = len(w)
    for p in range(1, n + 1):
        if w[: n - p] == w[p:]:
            return p
    raise AssertionError("unreachable: n is always a period")


def _verify_run(y: Word, run: Run) -> None:
    w = y.factor(run.start, run.end)
    p = _smallest_period(w)
    if p != run.period:
        raise CartlynError(f"{run}: smallest period of the interval is {p}")
    if len(w) < 2 * p:
        raise CartlynError(f"{run}: shorter than twice its period")
    b = y.symbols
    if run.start > 0 and b[run.start - 1] == b[run.start - 1 + p]:
        raise CartlynError(f"{run}: extends to the left")
    if run.end < y.n - 1 and b[run.end + 1] == b[run.end + 1 - p]:
        raise CartlynError(f"{run}: extends to the right")


def naive_runs(y: Word) -> set[Run]:
    """Runs by the definition alone, as the verification oracle.

    Every factor gets its smallest period by direct testing; factors at
    least twice their period long are kept when maximal. Cubic-ish and
    intended for small inputs only.
    """
    b = y.symbols
    n = y.n
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            w = b[i : j + 1]
            p = _smallest_period(w)
            if j - i + 1 < 2 * p:
                continue
            if i > 0 and b[i - 1] == b[i - 1 + p]:
                continue
            if j < n - 1 and b[j + 1] == b[j + 1 - p]:
                continue
            out.add(Run(i, j, p))
    return out
