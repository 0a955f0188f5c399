"""Acceptance suite. Each criterion prints one PASS/FAIL line and fails the
test on any violation. Expected wall time for the whole module is a few
minutes; the scaling criterion alone processes words of 2^20 and 2^21
symbols."""
import functools
import itertools
import random
import time

import numpy as np
import pytest

from cartlyn import (
    INVERTED,
    NORMAL,
    NumSeq,
    Word,
    build_cartesian,
    build_lce,
    check_isomorphism,
    check_nns_lyn,
    check_prop1,
    find_runs,
    is_lyndon,
    lyndon_table_letters,
    lyndon_table_ranked,
    naive_runs,
    nns_from_tree,
    nns_table,
    rank_table,
)
from cartlyn.reference import naive_lce, naive_lyn, naive_nns, naive_rank

from helpers import (
    SAMPLE_LYN,
    SAMPLE_NNS,
    SAMPLE_PARENT_MAP,
    SAMPLE_RANK,
    SAMPLE_ROOT,
    SAMPLE_SEQ,
    SAMPLE_WORD,
    all_words,
    random_word,
)


@pytest.fixture
def report(capsys):
    def _report(num, label, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {num} ({label}): {status}"
        if detail:
            line += f"  [{detail}]"
        if failures:
            line += f"  first failure: {failures[0]}"
        with capsys.disabled():
            print(line, flush=True)
        assert not failures, line

    return _report


def _best_time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@functools.lru_cache(maxsize=1)
def _equivalence_corpus():
    """Criterion 3 corpus: exhaustive binary up to 12 plus 1000 random
    ternary words up to 64, as two blocks."""
    rng = random.Random(160309)
    exhaustive = tuple(all_words(12))
    randoms = tuple(random_word(rng, 64) for _ in range(1000))
    return exhaustive, randoms


def test_criterion_1_golden_tables(report):
    failures = []
    cases = [
        ("nns", lambda: nns_table(SAMPLE_SEQ).values, SAMPLE_NNS),
        (
            "lyn",
            lambda: lyndon_table_ranked(SAMPLE_WORD, rank_table(SAMPLE_WORD)).values,
            SAMPLE_LYN,
        ),
        ("ranks", lambda: rank_table(SAMPLE_WORD).values, SAMPLE_RANK),
    ]
    timings = []
    for name, fn, expected in cases:
        got = fn()  # also warms numpy/numba paths before timing
        if got != expected:
            failures.append(f"{name} emitted {got}")
            continue
        best = _best_time(fn)
        timings.append(f"{name} {best * 1e6:.0f}us")
        if best >= 1e-3:
            failures.append(f"{name} took {best * 1e3:.3f}ms (limit 1ms)")
    report(1, "golden tables, <1ms each", failures, detail=" ".join(timings))


def test_criterion_2_cartesian_golden(report):
    failures = []
    tree = build_cartesian(SAMPLE_SEQ)
    if tree.root != SAMPLE_ROOT:
        failures.append(f"root {tree.root} != {SAMPLE_ROOT}")
    edges = {c: p for c, p in enumerate(tree.parent) if p is not None}
    if edges != SAMPLE_PARENT_MAP:
        failures.append(f"parent map {edges}")
    report(2, "Cartesian tree edge list", failures)


def test_criterion_3_oracle_equivalence(report):
    t0 = time.perf_counter()
    failures = []
    exhaustive, randoms = _equivalence_corpus()
    for w in itertools.chain(exhaustive, randoms):
        r = rank_table(w)
        if r.values != naive_rank(w).values:
            failures.append(f"rank mismatch on {w.symbols!r}")
            break
        letters = lyndon_table_letters(w)
        ranked = lyndon_table_ranked(w, r)
        if not (letters.values == ranked.values == naive_lyn(w).values):
            failures.append(f"lyn mismatch on {w.symbols!r}")
            break
        x = NumSeq(tuple(w.symbols))
        direct = nns_table(x)
        if not (direct == naive_nns(x) == nns_from_tree(build_cartesian(x), x)):
            failures.append(f"nns mismatch on {w.symbols!r}")
            break
    rng = random.Random(271828)
    lce_pairs_checked = 0
    if not failures:
        for w in randoms:  # 10 pairs per word -> 10^4 pairs
            ix = build_lce(w)
            for _ in range(10):
                i = rng.randrange(w.n)
                j = rng.randrange(w.n)
                if ix.right(i, j) != naive_lce(w, i, j, "right") or ix.left(
                    i, j
                ) != naive_lce(w, i, j, "left"):
                    failures.append(f"lce mismatch on {w.symbols!r} at ({i},{j})")
                    break
                lce_pairs_checked += 1
            if failures:
                break
        if not failures and lce_pairs_checked < 10_000:
            failures.append(f"only {lce_pairs_checked} lce pairs sampled")
    elapsed = time.perf_counter() - t0
    if elapsed >= 120:
        failures.append(f"took {elapsed:.1f}s (budget 120s)")
    report(
        3,
        "table/lce oracle equivalence",
        failures,
        detail=f"{len(exhaustive) + len(randoms)} words, {lce_pairs_checked} lce pairs, {elapsed:.1f}s",
    )


def test_criterion_4_prefix_suffix_ordering(report):
    failures = []
    checked = 0
    words = list(all_words(6))
    for ordering in (NORMAL, INVERTED):
        lyndon_words = [u for u in words if is_lyndon(u, ordering)]
        for u in lyndon_words:
            for w in words:
                rep = check_prop1(u, w, ordering)
                checked += 1
                if not rep.passed:
                    failures.append(f"{rep.subject}: {rep.witness}")
    report(4, "prefix-suffix ordering equivalence", failures, detail=f"{checked} pairs")


def test_criterion_5_nns_lyn_identity(report):
    failures = []
    rng = random.Random(5050)
    words = list(all_words(14)) + [random_word(rng, 64) for _ in range(1000)]
    for w in words:
        rep = check_nns_lyn(w)
        if not rep.passed:
            failures.append(f"{rep.subject}: {rep.witness}")
            break
    report(5, "nns equals position plus lyn", failures, detail=f"{len(words)} words")


def test_criterion_6_tree_isomorphism(report):
    failures = []
    checked = 0
    for w in all_words(14):
        if w.n < 2 or not is_lyndon(w):
            continue
        rep = check_isomorphism(w)
        checked += 1
        if not rep.passed:
            failures.append(f"{rep.subject}: {rep.witness}")
            break
    report(6, "Lyndon/Cartesian isomorphism", failures, detail=f"{checked} Lyndon words")


def test_criterion_7_runs_correctness(report):
    failures = []
    rng = random.Random(700)
    words = list(all_words(12)) + [random_word(rng, 200) for _ in range(500)]
    for w in words:
        found = find_runs(w, validate=True)  # re-derives smallest periods
        if found != naive_runs(w):
            failures.append(f"runs mismatch on {w.symbols!r}")
            break
        if not len(found) < w.n:
            failures.append(f"{len(found)} runs on word of length {w.n}")
            break
        if any(r.length < 2 * r.period for r in found):
            failures.append(f"short run on {w.symbols!r}")
            break
    report(7, "runs equal the brute-force oracle", failures, detail=f"{len(words)} words")


def _random_binary_word(n, seed):
    bits = np.random.default_rng(seed).integers(0, 2, n, dtype=np.uint8)
    return Word((bits + ord("a")).tobytes())


def _pipeline_seconds(w):
    """End-to-end wall time of the three table commands on one word."""
    t0 = time.perf_counter()
    rank_table(w)
    lyndon_table_ranked(w, rank_table(w))
    find_runs(w)
    return time.perf_counter() - t0


def test_criterion_8_near_linear_scaling(report):
    _pipeline_seconds(_random_binary_word(1 << 10, 3))  # warm compiled kernels
    failures = []
    detail = ""
    for attempt in range(2):  # one retry absorbs scheduling noise
        t20 = _pipeline_seconds(_random_binary_word(1 << 20, 42))
        t21 = _pipeline_seconds(_random_binary_word(1 << 21, 43))
        ratio = t21 / t20
        detail = f"2^20: {t20:.2f}s, 2^21: {t21:.2f}s, ratio {ratio:.2f}"
        failures = []
        if t20 >= 10:
            failures.append(f"2^20 took {t20:.2f}s (limit 10s)")
        if ratio > 2.6:
            failures.append(f"ratio {ratio:.2f} (limit 2.6)")
        if not failures:
            break
    report(8, "near-linear scaling", failures, detail=detail)


def test_criterion_9_comparison_budgets(report):
    failures = []
    exhaustive, randoms = _equivalence_corpus()
    count = 0
    for w in itertools.chain(exhaustive, randoms):
        n = w.n
        budget = max(2 * n - 2, 0)
        tree = build_cartesian(NumSeq(tuple(w.symbols)))
        if tree.comparisons > budget:
            failures.append(f"cartesian used {tree.comparisons} > {budget} on {w.symbols!r}")
            break
        lt = lyndon_table_ranked(w, rank_table(w))
        if lt.comparisons > budget:
            failures.append(f"lyn used {lt.comparisons} > {budget} on {w.symbols!r}")
            break
        count += 1
    report(9, "at most 2n-2 comparisons", failures, detail=f"{count} inputs")
