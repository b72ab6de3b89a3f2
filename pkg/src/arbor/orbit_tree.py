"""Labeled orbit trees and exact conjugacy decision for automorphisms of
finite trees, with conjugator witness lifting.

The orbit tree of a rooted-tree automorphism has one vertex per orbit, a
child relation induced by the parent relation of the underlying tree, and
each orbit labeled with its cardinality.  Code equality of labeled orbit
trees decides conjugacy exactly; a YES is always backed by an explicitly
constructed and verified conjugator.

Unrooted automorphisms reduce to the rooted case at the center: root at a
center vertex, or subdivide a center edge and root at the midpoint.  An
automorphism swapping the center edge is never conjugate to one fixing both
its endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from arbor.autom import TreeAutomorphism, conjugate, inverse, perm_orbits
from arbor.canon import code_rooted, iso_witness_rooted
from arbor.trees import (
    CenterVertex,
    RootedTree,
    center,
    root_at,
    subdivide_edge,
)


@dataclass(frozen=True)
class LabeledOrbitTree:
    """Orbit tree with cardinality labels.

    `orbits[i]` lists the vertices housed by orbit-tree vertex i, anchored at
    the minimum vertex and in iteration order; `labels[i] == len(orbits[i])`.
    """

    tree: RootedTree
    labels: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    def code(self) -> bytes:
        return code_rooted(self.tree, self.labels)


def orbit_tree(phi: TreeAutomorphism) -> LabeledOrbitTree:
    """Orbit tree of an automorphism of a rooted tree."""
    t = phi.tree
    if not isinstance(t, RootedTree):
        raise TypeError("orbit_tree expects an automorphism of a rooted tree")
    raw = perm_orbits(phi.perm)
    depths = t.depths
    # depth is constant on each orbit; order orbits by (depth, anchor)
    order = sorted(range(len(raw)), key=lambda i: (depths[raw[i][0]], raw[i][0]))
    orbits = tuple(raw[i] for i in order)
    of = {}
    for idx, orbit in enumerate(orbits):
        for v in orbit:
            of[v] = idx
    parent = [-1] * len(orbits)
    for idx, orbit in enumerate(orbits[1:], start=1):
        parent[idx] = of[t.parent[orbit[0]]]
    ot = RootedTree(tuple(parent))
    return LabeledOrbitTree(ot, tuple(len(o) for o in orbits), orbits)


def _swaps_center_edge(phi: TreeAutomorphism, u: int, v: int) -> bool:
    return phi.perm[u] == v


def _to_rooted_form(phi: TreeAutomorphism) -> tuple[TreeAutomorphism, tuple[int, ...]]:
    """Automorphism of an unrooted tree as an automorphism of the canonical
    rooted form (rooted at the center, through the subdivided midpoint when
    the center is an edge).  Returns it with the new->old vertex table."""
    t = phi.tree
    c = center(t)
    if isinstance(c, CenterVertex):
        rooted, back = root_at(t, c.v)
        old_to_new = {old: new for new, old in enumerate(back)}
        perm = tuple(old_to_new[phi.perm[back[i]]] for i in range(t.n))
        return TreeAutomorphism(rooted, perm), back
    sub, mid = subdivide_edge(t, (c.u, c.v))
    rooted, back = root_at(sub, mid)
    old_to_new = {old: new for new, old in enumerate(back)}
    ext = list(phi.perm) + [mid]
    perm = tuple(old_to_new[ext[back[i]]] for i in range(sub.n))
    return TreeAutomorphism(rooted, perm), back


def conj_decide(phi: TreeAutomorphism, psi: TreeAutomorphism) -> bool:
    """YES iff some isomorphism of the underlying trees conjugates phi to
    psi.  The two automorphisms may live on different trees of the same
    kind; on the same tree this is conjugacy in its automorphism group."""
    rooted1 = isinstance(phi.tree, RootedTree)
    rooted2 = isinstance(psi.tree, RootedTree)
    if rooted1 != rooted2:
        raise ValueError("mismatched tree kinds")
    if not rooted1:
        c1, c2 = center(phi.tree), center(psi.tree)
        if type(c1) is not type(c2):
            return False
        if not isinstance(c1, CenterVertex):
            if _swaps_center_edge(phi, c1.u, c1.v) != _swaps_center_edge(psi, c2.u, c2.v):
                return False
        phi, _ = _to_rooted_form(phi)
        psi, _ = _to_rooted_form(psi)
    return orbit_tree(phi).code() == orbit_tree(psi).code()


def _lift_rooted(phi: TreeAutomorphism, psi: TreeAutomorphism) -> tuple[int, ...]:
    ot1, ot2 = orbit_tree(phi), orbit_tree(psi)
    match = iso_witness_rooted(ot1.tree, ot2.tree, ot1.labels, ot2.labels)
    if match is None:
        raise ValueError("lift_witness called on non-conjugate automorphisms")
    t1, t2 = phi.tree, psi.tree
    alpha = [-1] * t1.n
    # orbit-tree vertices are in (depth, anchor) order, so parents come first
    for idx, orbit in enumerate(ot1.orbits):
        target = ot2.orbits[match[idx]]
        anchor = orbit[0]
        if idx == 0:
            y0 = target[0]  # both root orbits are {root}
        else:
            q = alpha[t1.parent[anchor]]
            y0 = next(y for y in target if t2.parent[y] == q)
        x, y = anchor, y0
        for _ in range(len(orbit)):
            alpha[x] = y
            x = phi.perm[x]
            y = psi.perm[y]
    return tuple(alpha)


def _check_conjugates(phi, psi, alpha: Sequence[int]) -> bool:
    n = phi.tree.n
    if sorted(alpha) != list(range(n)):
        return False
    return all(alpha[phi.perm[x]] == psi.perm[alpha[x]] for x in range(n))


def lift_witness(phi: TreeAutomorphism, psi: TreeAutomorphism):
    """Conjugator built top-down along matched orbits; requires
    conj_decide(phi, psi).

    Same underlying tree: returns the conjugating TreeAutomorphism.
    Different trees: returns the conjugating vertex bijection as a tuple.
    The result is verified before return; a verification failure is an
    internal bug, not an expected condition.
    """
    rooted1 = isinstance(phi.tree, RootedTree)
    if rooted1 != isinstance(psi.tree, RootedTree):
        raise ValueError("mismatched tree kinds")
    if rooted1:
        alpha = _lift_rooted(phi, psi)
        if not _check_conjugates(phi, psi, alpha):
            raise RuntimeError("internal consistency failure in witness lift")
        if phi.tree == psi.tree:
            return TreeAutomorphism(phi.tree, alpha)
        return alpha
    c1, c2 = center(phi.tree), center(psi.tree)
    if type(c1) is not type(c2):
        raise ValueError("lift_witness called on non-conjugate automorphisms")
    if not isinstance(c1, CenterVertex):
        if _swaps_center_edge(phi, c1.u, c1.v) != _swaps_center_edge(psi, c2.u, c2.v):
            raise ValueError("lift_witness called on non-conjugate automorphisms")
    rphi, back1 = _to_rooted_form(phi)
    rpsi, back2 = _to_rooted_form(psi)
    ralpha = _lift_rooted(rphi, rpsi)
    n = phi.tree.n
    alpha = [-1] * n
    new1 = {old: new for new, old in enumerate(back1)}
    for old in range(n):
        img = back2[ralpha[new1[old]]]
        alpha[old] = img
    alpha = tuple(alpha)
    if not _check_conjugates(phi, psi, alpha):
        raise RuntimeError("internal consistency failure in witness lift")
    if phi.tree == psi.tree:
        return TreeAutomorphism(phi.tree, alpha)
    return alpha


def verify_conjugator(phi: TreeAutomorphism, psi: TreeAutomorphism, alpha) -> bool:
    """Check alpha o phi o alpha^-1 == psi via the group operations."""
    if isinstance(alpha, TreeAutomorphism):
        return conjugate(alpha, phi).perm == psi.perm and inverse(alpha) is not None
    return _check_conjugates(phi, psi, alpha)
