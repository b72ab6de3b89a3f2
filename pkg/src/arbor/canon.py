"""Canonical codes for rooted (optionally labeled) and unrooted trees, and
isomorphism decision with an explicit, verified witness.

Two trees receive equal codes iff they are isomorphic; byte-string ascending
sort is the single tie-breaking rule everywhere.
"""

from __future__ import annotations

from typing import Sequence

from arbor import _kernels
from arbor.trees import (
    CenterVertex,
    RootedTree,
    UnrootedTree,
    center,
    root_at,
    subdivide_edge,
)


def code_rooted(t: RootedTree, labels: Sequence[int] | None = None) -> bytes:
    """Canonical code; unlabeled vertices count as label 0.

    Invariant under any renumbering of the input presentation, and injective
    on isomorphism classes of (labeled) rooted trees.
    """
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != t.n:
            raise ValueError(f"labels cover {len(labels)} vertices, tree has {t.n}")
        if any(l < 0 for l in labels):
            raise ValueError("labels must be non-negative")
    return _kernels.rooted_code(t.parent, labels)


def code_unrooted(t: UnrootedTree) -> bytes:
    """Center-based canonical code for unrooted trees."""
    c = center(t)
    if isinstance(c, CenterVertex):
        rooted, _ = root_at(t, c.v)
        return b"V:" + code_rooted(rooted)
    side_u, _ = root_at(t, c.u, banned=c.v)
    side_v, _ = root_at(t, c.v, banned=c.u)
    a, b = sorted((code_rooted(side_u), code_rooted(side_v)))
    return b"E:" + a + b


def _match_rooted(t1, t2, codes1, codes2, v1, v2, out):
    out[v1] = v2
    kids1 = sorted(t1.children[v1], key=lambda c: codes1[c])
    kids2 = sorted(t2.children[v2], key=lambda c: codes2[c])
    for c1, c2 in zip(kids1, kids2):
        _match_rooted(t1, t2, codes1, codes2, c1, c2, out)


def _subtree_code_table(t: RootedTree, labels) -> list[bytes]:
    if labels is None:
        labels = (0,) * t.n
    codes = [b""] * t.n
    for v in range(t.n - 1, -1, -1):
        parts = sorted(codes[c] for c in t.children[v])
        codes[v] = b"(%d|" % labels[v] + b"".join(parts) + b")"
    return codes


def iso_witness_rooted(
    t1: RootedTree,
    t2: RootedTree,
    labels1: Sequence[int] | None = None,
    labels2: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Root-preserving isomorphism t1 -> t2, or None when the codes differ.

    The witness is found by recursive matching of equal child codes and is
    verified before being returned.
    """
    codes1 = _subtree_code_table(t1, labels1)
    codes2 = _subtree_code_table(t2, labels2)
    if codes1[0] != codes2[0]:
        return None
    out = [0] * t1.n
    _match_rooted(t1, t2, codes1, codes2, 0, 0, out)
    witness = tuple(out)
    if not verify_rooted_witness(t1, t2, witness):
        raise AssertionError("rooted witness failed verification")
    return witness


def verify_rooted_witness(t1: RootedTree, t2: RootedTree, mapping: Sequence[int]) -> bool:
    if t1.n != t2.n or len(mapping) != t1.n:
        return False
    if sorted(mapping) != list(range(t1.n)):
        return False
    if mapping[0] != 0:
        return False
    return all(mapping[t1.parent[v]] == t2.parent[mapping[v]] for v in range(1, t1.n))


def verify_unrooted_witness(t1: UnrootedTree, t2: UnrootedTree, mapping: Sequence[int]) -> bool:
    if t1.n != t2.n or len(mapping) != t1.n:
        return False
    if sorted(mapping) != list(range(t1.n)):
        return False
    mapped = frozenset(
        (mapping[u], mapping[v]) if mapping[u] < mapping[v] else (mapping[v], mapping[u])
        for u, v in t1.edges
    )
    return mapped == t2.edges


def iso_witness_unrooted(t1: UnrootedTree, t2: UnrootedTree) -> tuple[int, ...] | None:
    """Isomorphism t1 -> t2, or None.  Reduces to the rooted case at the
    center (subdividing first when the center is an edge)."""
    c1, c2 = center(t1), center(t2)
    if type(c1) is not type(c2):
        return None
    if isinstance(c1, CenterVertex):
        r1, back1 = root_at(t1, c1.v)
        r2, back2 = root_at(t2, c2.v)
        w = iso_witness_rooted(r1, r2)
        if w is None:
            return None
        mapping = [0] * t1.n
        for new1, old1 in enumerate(back1):
            mapping[old1] = back2[w[new1]]
    else:
        s1, _ = subdivide_edge(t1, (c1.u, c1.v))
        s2, _ = subdivide_edge(t2, (c2.u, c2.v))
        r1, back1 = root_at(s1, t1.n)
        r2, back2 = root_at(s2, t2.n)
        w = iso_witness_rooted(r1, r2)
        if w is None:
            return None
        mapping = [0] * t1.n
        for new1, old1 in enumerate(back1):
            if old1 == t1.n:
                continue
            mapping[old1] = back2[w[new1]]
    witness = tuple(mapping)
    if not verify_unrooted_witness(t1, t2, witness):
        raise AssertionError("unrooted witness failed verification")
    return witness


def iso_witness(t1, t2):
    """Isomorphism witness for a pair of rooted or a pair of unrooted trees;
    None means not isomorphic."""
    if isinstance(t1, RootedTree) and isinstance(t2, RootedTree):
        return iso_witness_rooted(t1, t2)
    if isinstance(t1, UnrootedTree) and isinstance(t2, UnrootedTree):
        return iso_witness_unrooted(t1, t2)
    raise TypeError("iso_witness needs two trees of the same kind")
