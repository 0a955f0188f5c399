"""Cartesian trees, Lyndon trees and runs over byte words.

One toolkit for the tightly related structures: next-nearest-smaller
tables and Cartesian trees of number sequences, Lyndon tables/trees and
the Chen-Fox-Lyndon cover of words, suffix ranks, constant-time longest
common extensions, and detection of all maximal periodicities. Brute-force
oracles and structural equivalence checks are part of the public surface.
"""
from .cartesian import NnsTable, PosTree, build_cartesian, nns_from_tree, nns_table
from .equivalence import (
    VerificationReport,
    check_isomorphism,
    check_nns_lyn,
    check_prop1,
    internal_projection,
)
from .errors import (
    CartlynError,
    EmptyInputError,
    IndexMismatchError,
    InconsistentTreeError,
    MalformedIntegerError,
    NotAPermutationError,
    NotLyndonError,
    OutOfRangeError,
    RankMismatchError,
    SingleLeafError,
    TableMismatchError,
)
from .lce import LceIndex, build_lce, lce_left, lce_right
from .lyndon import (
    LyndonTree,
    LynTable,
    cfl_factorize,
    is_lyndon,
    lyndon_forest,
    lyndon_table_letters,
    lyndon_table_ranked,
    lyndon_tree,
)
from .runs import Run, RunCandidate, find_runs, naive_runs, run_candidates, runs_pass
from .suffix import RankTable, rank_table, suffix_order
from .word import (
    INVERTED,
    NORMAL,
    AlphabetOrdering,
    NumSeq,
    Word,
    compare_symbols,
    compare_words,
    ingest,
    serialize,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetOrdering",
    "CartlynError",
    "EmptyInputError",
    "INVERTED",
    "IndexMismatchError",
    "InconsistentTreeError",
    "LceIndex",
    "LynTable",
    "LyndonTree",
    "MalformedIntegerError",
    "NORMAL",
    "NnsTable",
    "NotAPermutationError",
    "NotLyndonError",
    "NumSeq",
    "OutOfRangeError",
    "PosTree",
    "RankMismatchError",
    "RankTable",
    "Run",
    "RunCandidate",
    "SingleLeafError",
    "TableMismatchError",
    "VerificationReport",
    "Word",
    "build_cartesian",
    "build_lce",
    "cfl_factorize",
    "check_isomorphism",
    "check_nns_lyn",
    "check_prop1",
    "compare_symbols",
    "compare_words",
    "find_runs",
    "ingest",
    "internal_projection",
    "is_lyndon",
    "lce_left",
    "lce_right",
    "lyndon_forest",
    "lyndon_table_letters",
    "lyndon_table_ranked",
    "lyndon_tree",
    "naive_runs",
    "nns_from_tree",
    "nns_table",
    "rank_table",
    "run_candidates",
    "runs_pass",
    "serialize",
    "suffix_order",
]
