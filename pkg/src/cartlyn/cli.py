"""Command-line interface.

Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 on
success, 1 on usage or input errors, 2 when a verification check fails.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional, Sequence

from . import equivalence, lyndon, reference, runs as runs_mod
from .cartesian import build_cartesian, nns_table, tree_to_dot
from .errors import CartlynError
from .lce import build_lce
from .lyndon import cfl_factorize, lyndon_table_ranked, lyndon_tree
from .suffix import rank_table
from .word import AlphabetOrdering, NumSeq, Word, ingest

_FRAGMENT_LIMIT = 32


class _UsageError(Exception):
    pass


def _add_input_flags(p: argparse.ArgumentParser, kind: str) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--input", metavar="FILE", help="read input from FILE, or - for stdin")
    if kind == "word":
        g.add_argument("--text", metavar="STR", help="literal word")
    else:
        g.add_argument("--ints", metavar="LIST", help="comma/space separated integers")


def _add_common_flags(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument(
        "--ordering",
        choices=["normal", "inverted"],
        default="normal",
        help="alphabet ordering (default normal)",
    )
    p.add_argument(
        "--format",
        choices=list(formats),
        default="json",
        help="output format (default json)",
    )
    p.add_argument("--oracle", action="store_true", help="force brute-force computation")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartlyn",
        description="Cartesian/Lyndon tree toolkit: tables, trees, extensions and runs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nns", help="next-nearest-smaller table of a number sequence")
    _add_input_flags(p, "ints")
    _add_common_flags(p, ["json", "tsv"])
    p.set_defaults(func=_cmd_nns)

    p = sub.add_parser("cartesian-tree", help="Cartesian tree of a number sequence")
    _add_input_flags(p, "ints")
    _add_common_flags(p, ["json", "dot"])
    p.set_defaults(func=_cmd_cartesian)

    p = sub.add_parser("ranks", help="suffix rank table of a word")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json", "tsv"])
    p.set_defaults(func=_cmd_ranks)

    p = sub.add_parser("lyn", help="longest-Lyndon-factor table of a word")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json", "tsv"])
    p.set_defaults(func=_cmd_lyn)

    p = sub.add_parser("lyndon-tree", help="Lyndon tree of a Lyndon word")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json", "dot"])
    p.add_argument("--prepend", metavar="SYMBOL", help="prepend one symbol before parsing")
    p.add_argument(
        "--cmp",
        choices=["letters", "ranks"],
        default="ranks",
        help="factor comparison strategy (default ranks)",
    )
    p.set_defaults(func=_cmd_lyndon_tree)

    p = sub.add_parser("cfl", help="Chen-Fox-Lyndon factorisation of a word")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json", "tsv"])
    p.set_defaults(func=_cmd_cfl)

    p = sub.add_parser("runs", help="all maximal periodicities of a word")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json", "tsv"])
    p.add_argument("--trace", action="store_true", help="also emit per-position candidates")
    p.set_defaults(func=_cmd_runs)

    p = sub.add_parser("verify", help="run the structural equivalence checks")
    _add_input_flags(p, "word")
    _add_common_flags(p, ["json"])
    p.add_argument("--suite", action="store_true", help="run the built-in exhaustive suites")
    p.set_defaults(func=_cmd_verify)

    return parser


def _read_payload(args) -> bytes:
    if args.input == "-":
        return sys.stdin.buffer.read()
    if args.input:
        with open(args.input, "rb") as fh:
            return fh.read()
    raise _UsageError("no input given; use --input, --text or --ints")


def _get_word(args) -> Word:
    if getattr(args, "text", None) is not None:
        w = ingest(args.text.encode("utf-8"), "text")
    else:
        w = ingest(_read_payload(args), "text")
    assert isinstance(w, Word)
    return w


def _get_seq(args) -> NumSeq:
    if getattr(args, "ints", None) is not None:
        s = ingest(args.ints.encode("ascii"), "integers")
    else:
        s = ingest(_read_payload(args), "integers")
    assert isinstance(s, NumSeq)
    return s


def _get_ordering(args) -> AlphabetOrdering:
    return AlphabetOrdering(args.ordering)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_table(values: Sequence[int], fmt: str) -> None:
    if fmt == "tsv":
        _emit("\t".join(str(v) for v in values))
    else:
        _emit(json.dumps({"n": len(values), "values": list(values)}))


def _pos_tree_payload(t) -> dict:
    return {
        "root": t.root,
        "parent": list(t.parent),
        "left": list(t.left),
        "right": list(t.right),
    }


def _cmd_nns(args) -> int:
    x = _get_seq(args)
    table = reference.naive_nns(x) if args.oracle else nns_table(x)
    _emit_table(table.values, args.format)
    return 0


def _cmd_cartesian(args) -> int:
    x = _get_seq(args)
    tree = reference.naive_cartesian(x) if args.oracle else build_cartesian(x)
    if args.format == "dot":
        _emit(tree_to_dot(tree, x))
    else:
        _emit(json.dumps(_pos_tree_payload(tree)))
    return 0


def _cmd_ranks(args) -> int:
    y = _get_word(args)
    ordering = _get_ordering(args)
    table = reference.naive_rank(y, ordering) if args.oracle else rank_table(y, ordering)
    _emit_table(table.values, args.format)
    return 0


def _cmd_lyn(args) -> int:
    y = _get_word(args)
    ordering = _get_ordering(args)
    if args.oracle:
        table = reference.naive_lyn(y, ordering)
    else:
        table = lyndon_table_ranked(y, rank_table(y, ordering))
    _emit_table(table.values, args.format)
    return 0


def _cmd_lyndon_tree(args) -> int:
    y = _get_word(args)
    if args.prepend is not None:
        sym = args.prepend.encode("utf-8")
        if len(sym) != 1:
            raise _UsageError("--prepend takes exactly one byte symbol")
        y = Word(sym + y.symbols)
    ordering = _get_ordering(args)
    tree = lyndon_tree(y, ordering, cmp=args.cmp)
    if args.format == "dot":
        _emit(lyndon.tree_to_dot(tree, y))
    else:
        payload = {
            "root": tree.root,
            "parent": list(tree.parent),
            "left": list(tree.left),
            "right": list(tree.right),
            "interval": [[tree.first[v], tree.last[v]] for v in range(tree.node_count)],
        }
        _emit(json.dumps(payload))
    return 0


def _cmd_cfl(args) -> int:
    y = _get_word(args)
    ordering = _get_ordering(args)
    if args.oracle:
        table = reference.naive_lyn(y, ordering)
    else:
        table = lyndon_table_ranked(y, rank_table(y, ordering))
    factors = cfl_factorize(y, table)
    if args.format == "tsv":
        _emit("\n".join(f"{a}\t{b}" for a, b in factors))
    else:
        payload = []
        for a, b in factors:
            item: dict = {"start": a, "end": b, "length": b - a + 1}
            if b - a + 1 <= _FRAGMENT_LIMIT:
                item["text"] = y.factor(a, b).decode("latin-1")
            payload.append(item)
        _emit(json.dumps(payload))
    return 0


def _run_payload(y: Word, found) -> list:
    payload = []
    for r in sorted(found):
        item: dict = {"start": r.start, "end": r.end, "period": r.period, "length": r.length}
        if r.length <= _FRAGMENT_LIMIT:
            item["fragment"] = y.factor(r.start, r.end).decode("latin-1")
        payload.append(item)
    return payload


def _cmd_runs(args) -> int:
    y = _get_word(args)
    if args.oracle and args.trace:
        raise _UsageError("--trace requires the extension-based path, not --oracle")
    if args.oracle:
        found = runs_mod.naive_runs(y)
        trace = None
    elif args.trace:
        index = build_lce(y)
        found = set()
        trace = []
        for ordering in (AlphabetOrdering.NORMAL, AlphabetOrdering.INVERTED):
            r = rank_table(y, ordering)
            found |= runs_mod.runs_pass(y, ordering, r, index)
            trace.append(
                {
                    "ordering": ordering.value,
                    "candidates": [
                        {"position": c.position, "lyn": c.lyn,
                         "left_ext": c.left_ext, "right_ext": c.right_ext}
                        for c in runs_mod.run_candidates(y, ordering, r, index)
                    ],
                }
            )
    else:
        found = runs_mod.find_runs(y)
        trace = None
    if args.format == "tsv":
        _emit("\n".join(f"{r.start}\t{r.end}\t{r.period}\t{r.length}" for r in sorted(found)))
    elif trace is not None:
        _emit(json.dumps({"runs": _run_payload(y, found), "passes": trace}))
    else:
        _emit(json.dumps(_run_payload(y, found)))
    return 0


def _verify_suite(ordering: AlphabetOrdering) -> list:
    """Small exhaustive binary suites for all three checks."""
    reports = []
    words = [
        Word(bytes(t))
        for n in range(1, 6)
        for t in itertools.product(b"ab", repeat=n)
    ]
    lyndon_words = [w for w in words if lyndon.is_lyndon(w, ordering)]
    for u in lyndon_words:
        for w in words:
            reports.append(equivalence.check_prop1(u, w, ordering))
    for n in range(1, 11):
        for t in itertools.product(b"ab", repeat=n):
            y = Word(bytes(t))
            reports.append(equivalence.check_nns_lyn(y, ordering))
            if y.n >= 2 and lyndon.is_lyndon(y, ordering):
                reports.append(equivalence.check_isomorphism(y, ordering))
    return reports


def _cmd_verify(args) -> int:
    ordering = _get_ordering(args)
    if args.suite:
        reports = _verify_suite(ordering)
    else:
        y = _get_word(args)
        reports = [equivalence.check_nns_lyn(y, ordering)]
        if y.n >= 2 and lyndon.is_lyndon(y, ordering):
            reports.append(equivalence.check_isomorphism(y, ordering))
        for n in range(1, 4):
            for t in itertools.product(sorted(set(y.symbols)), repeat=n):
                u = Word(bytes(t))
                if lyndon.is_lyndon(u, ordering):
                    reports.append(equivalence.check_prop1(u, y, ordering))
    failures = [r for r in reports if not r.passed]
    payload = {
        "checks": len(reports),
        "failures": [
            {"check": r.check, "subject": r.subject, "witness": r.witness} for r in failures
        ],
        "passed": not failures,
    }
    _emit(json.dumps(payload))
    return 2 if failures else 0


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (_UsageError, CartlynError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
