"""Executable bridges between the word-side and the sequence-side structures.

Three checks, each computing both sides independently and comparing:

* prefix-against-suffix ordering: for Lyndon u and any w with first
  Chen-Fox-Lyndon factor v, u < v holds exactly when uw < w;
* the next-nearest-smaller table of the suffix ranks equals position plus
  longest-Lyndon-factor length;
* the Lyndon tree restricted to its internal nodes is the Cartesian tree
  of the suffix ranks at positions 1..n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cartesian import PosTree, build_cartesian, nns_table
from .errors import NotLyndonError, SingleLeafError
from .lyndon import LyndonTree, cfl_factorize, is_lyndon, lyndon_table_letters, lyndon_tree
from .suffix import rank_table
from .word import NORMAL, AlphabetOrdering, NumSeq, Word, compare_words


@dataclass(frozen=True)
class VerificationReport:
    check: str
    subject: str
    passed: bool
    witness: Optional[str] = None

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("failing report requires a witness")


def check_prop1(u: Word, w: Word, ordering: AlphabetOrdering = NORMAL) -> VerificationReport:
    """Check (u < v) == (uw < w) for v = first Chen-Fox-Lyndon factor of w."""
    if not is_lyndon(u, ordering):
        raise NotLyndonError(f"u = {u.to_text()!r} is not Lyndon under {ordering.value}")
    first, last = cfl_factorize(w, lyndon_table_letters(w, ordering))[0]
    v = w.factor(first, last)
    local = compare_words(u.symbols, v, ordering) < 0
    global_ = compare_words(u.symbols + w.symbols, w.symbols, ordering) < 0
    subject = f"u={u.to_text()!r} w={w.to_text()!r} ({ordering.value})"
    if local == global_:
        return VerificationReport("prefix-suffix-ordering", subject, True)
    return VerificationReport(
        "prefix-suffix-ordering",
        subject,
        False,
        witness=f"v={v!r}: u<v is {local} but uw<w is {global_}",
    )


def check_nns_lyn(y: Word, ordering: AlphabetOrdering = NORMAL) -> VerificationReport:
    """Check nns(ranks)[i] == i + lyn[i] for every position.

    The two sides come from independent routes: the Lyndon table by letter
    comparisons, the nns table from the rank sequence viewed as numbers.
    """
    lyn = lyndon_table_letters(y, ordering).values
    ranks = rank_table(y, ordering).values
    nns = nns_table(NumSeq(ranks)).values
    subject = f"{_clip(y)} ({ordering.value})"
    for i in range(y.n):
        if nns[i] != i + lyn[i]:
            return VerificationReport(
                "nns-lyn-identity",
                subject,
                False,
                witness=f"i={i}: nns={nns[i]} but i+lyn={i + lyn[i]}",
            )
    return VerificationReport("nns-lyn-identity", subject, True)


def internal_projection(t: LyndonTree) -> PosTree:
    """Tree on the internal nodes only, as positions 0..n-2.

    Each internal node is identified by the start of its right child's
    factor, giving the labels 1..n-1 exactly once; label k maps to
    position k-1. The projected tree is validated before it is returned.
    """
    m = t.n_leaves
    if m < 2:
        raise SingleLeafError("single-leaf tree has no internal nodes")
    base = t.first[t.root]
    count = m - 1
    parent: list = [None] * count
    left: list = [None] * count
    right: list = [None] * count

    def label(v: int) -> int:
        return t.first[t.right[v]] - base  # 1..m-1

    for v in range(m, t.node_count):
        lab = label(v)
        for child, side in ((t.left[v], left), (t.right[v], right)):
            if child is not None and not t.is_leaf(child):
                clab = label(child)
                side[lab - 1] = clab - 1
                parent[clab - 1] = lab - 1
    proj = PosTree(
        parent=tuple(parent),
        left=tuple(left),
        right=tuple(right),
        root=label(t.root) - 1,
    )
    proj.validate()
    return proj


def check_isomorphism(y: Word, ordering: AlphabetOrdering = NORMAL) -> VerificationReport:
    """Compare the internal projection of the Lyndon tree against the
    Cartesian tree of the suffix ranks at positions 1..n-1."""
    if not is_lyndon(y, ordering):
        raise NotLyndonError(f"{_clip(y)} is not Lyndon under {ordering.value}")
    proj = internal_projection(lyndon_tree(y, ordering, cmp="ranks"))
    ranks = rank_table(y, ordering).values
    assert len(set(ranks)) == len(ranks)  # permutation: the tie rule stays dormant
    cart = build_cartesian(NumSeq(ranks[1:]))
    subject = f"{_clip(y)} ({ordering.value})"
    if proj == cart:
        return VerificationReport("lyndon-cartesian-isomorphism", subject, True)
    return VerificationReport(
        "lyndon-cartesian-isomorphism",
        subject,
        False,
        witness=(
            f"projection root={proj.root} left={proj.left} right={proj.right}; "
            f"cartesian root={cart.root} left={cart.left} right={cart.right}"
        ),
    )


def _clip(y: Word, limit: int = 48) -> str:
    text = y.to_text()
    return repr(text if len(text) <= limit else text[:limit] + "...")
