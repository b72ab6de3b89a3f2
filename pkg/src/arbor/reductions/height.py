"""Nested multiset invariant for automorphisms of bounded-height uniform
trees: at height 1 the cycle type of the leaf permutation, above that the
multiset of (orbit length, invariant of the return map on one representative
branch) over the orbits of depth-1 branches.

Equality of the invariant decides conjugacy exactly at desk scale; the
acceptance suite checks this against the brute-force oracle.
"""

from __future__ import annotations

from arbor.autom import TreeAutomorphism, perm_orbits
from arbor.trees import RootedTree, build_uniform_rooted


def uniform_shape(t: RootedTree) -> tuple[int, int]:
    """(height, width) of a uniform tree; rejects non-uniform input."""
    h = t.height
    w = len(t.children[0])
    expected, _ = build_uniform_rooted(h, w) if h >= 0 and w >= 1 else (None, None)
    if expected is None or expected.parent != t.parent:
        raise ValueError("not a breadth-first uniform bounded-height tree")
    return h, w


def height_invariant(phi: TreeAutomorphism):
    """Conjugacy invariant of an automorphism of the (height, width)
    uniform tree, serialized canonically by sorting."""
    t = phi.tree
    if not isinstance(t, RootedTree):
        raise TypeError("height_invariant expects a rooted automorphism")
    h, w = uniform_shape(t)
    return _invariant(t, phi.perm, h, w)


def _subtree_ids(t: RootedTree, root: int) -> list[int]:
    out = [root]
    i = 0
    while i < len(out):
        out.extend(t.children[out[i]])
        i += 1
    return out


def _invariant(t: RootedTree, perm, h: int, w: int):
    if h == 0:
        return ()
    if h == 1:
        # cycle type of the leaf permutation (the fixed root is not counted)
        leaves = t.children[0]
        local = {v: i for i, v in enumerate(leaves)}
        counts: dict[int, int] = {}
        for orbit in perm_orbits([local[perm[v]] for v in leaves]):
            counts[len(orbit)] = counts.get(len(orbit), 0) + 1
        return tuple(sorted(counts.items()))
    top = list(t.children[0])
    entries = []
    sub_tree, _ = build_uniform_rooted(h - 1, w)
    for orbit in perm_orbits([_child_index(t, perm, c) for c in top]):
        length = len(orbit)
        rep = top[orbit[0]]
        ids = _subtree_ids(t, rep)
        local = {v: i for i, v in enumerate(ids)}
        # return map: perm^length restricted to the representative branch
        ret = []
        for v in ids:
            x = v
            for _ in range(length):
                x = perm[x]
            ret.append(local[x])
        entries.append((length, _invariant(sub_tree, tuple(ret), h - 1, w)))
    return tuple(sorted(entries))


def _child_index(t: RootedTree, perm, child: int) -> int:
    return t.children[0].index(perm[child])
