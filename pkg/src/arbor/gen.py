"""Exhaustive and seeded-random tree generators for the oracle suites.

The exhaustive generators produce one representative per isomorphism class
using nested-tuple shapes (children sorted recursively), a mechanism kept
separate from the byte-string canonical codes they are used to test.
"""

from __future__ import annotations

import random
from functools import cache

from arbor.trees import (
    CenterVertex,
    RootedTree,
    UnrootedTree,
    center,
    edge,
    root_at,
    to_unrooted,
)

Shape = tuple  # nested tuples: a shape is the sorted tuple of child shapes


@cache
def rooted_shapes(n: int) -> tuple[Shape, ...]:
    """All rooted tree shapes on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return ((),)
    options: list[tuple[int, Shape]] = []
    for size in range(1, n):
        for sh in rooted_shapes(size):
            options.append((size, sh))
    out: list[Shape] = []

    def rec(remaining, min_idx, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(min_idx, len(options)):
            size, sh = options[idx]
            if size <= remaining:
                acc.append(sh)
                rec(remaining - size, idx, acc)
                acc.pop()

    rec(n - 1, 0, [])
    return tuple(out)


def shape_to_rooted(shape: Shape) -> RootedTree:
    """Preorder numbering of a shape; parent[i] < i holds by construction."""
    parent = [-1]

    def walk(sh, me):
        for child in sh:
            cid = len(parent)
            parent.append(me)
            walk(child, cid)

    walk(shape, 0)
    return RootedTree(tuple(parent))


def rooted_shape_of(t: RootedTree, v: int = 0) -> Shape:
    return tuple(sorted(rooted_shape_of(t, c) for c in t.children[v]))


def all_rooted_trees(max_n: int) -> list[RootedTree]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(shape_to_rooted(sh) for sh in rooted_shapes(n))
    return out


def _free_key(t: UnrootedTree):
    c = center(t)
    if isinstance(c, CenterVertex):
        rooted, _ = root_at(t, c.v)
        return ("V", rooted_shape_of(rooted))
    side_u, _ = root_at(t, c.u, banned=c.v)
    side_v, _ = root_at(t, c.v, banned=c.u)
    return ("E", tuple(sorted((rooted_shape_of(side_u), rooted_shape_of(side_v)))))


def all_free_trees(max_n: int) -> list[UnrootedTree]:
    """One representative per unrooted isomorphism class, deduplicated by a
    center-anchored shape key."""
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        for sh in rooted_shapes(n):
            t = to_unrooted(shape_to_rooted(sh))
            key = _free_key(t)
            if key not in seen:
                seen.add(key)
                out.append(t)
    return out


# --- seeded random generators ----------------------------------------------


def random_rooted_tree(rng: random.Random, max_n: int, min_n: int = 1) -> RootedTree:
    n = rng.randint(min_n, max_n)
    parent = [-1] + [rng.randrange(i) for i in range(1, n)]
    return RootedTree(tuple(parent))


def reshuffled_copy(t: RootedTree, rng: random.Random) -> RootedTree:
    """An isomorphic rooted tree presented with renumbered vertices (random
    recursive child order, renumbered breadth-first)."""
    order = {v: rng.random() for v in range(t.n)}
    new_to_old = [0]
    parent = [-1]
    old_to_new = {0: 0}
    queue = [0]
    while queue:
        ov = queue.pop(0)
        kids = sorted(t.children[ov], key=lambda c: order[c])
        for ok in kids:
            old_to_new[ok] = len(new_to_old)
            parent.append(old_to_new[ov])
            new_to_old.append(ok)
            queue.append(ok)
    return RootedTree(tuple(parent))


def random_unrooted_tree(rng: random.Random, max_n: int, min_n: int = 1) -> UnrootedTree:
    t = random_rooted_tree(rng, max_n, min_n)
    u = to_unrooted(t)
    relabel = list(range(u.n))
    rng.shuffle(relabel)
    return UnrootedTree(
        u.n, frozenset(edge(relabel[a], relabel[b]) for a, b in u.edges)
    )


def random_degree13_tree(rng: random.Random, max_n: int) -> UnrootedTree:
    """Random tree in which every vertex has degree 1 or 3 (n is even; grown
    by repeatedly giving a leaf two fresh children)."""
    if max_n < 2:
        raise ValueError("need max_n >= 2")
    steps = rng.randint(0, (max_n - 2) // 2)
    edges = {(0, 1)}
    leaves = [0, 1]
    n = 2
    for _ in range(steps):
        v = leaves.pop(rng.randrange(len(leaves)))
        for _ in range(2):
            edges.add(edge(v, n))
            leaves.append(n)
            n += 1
    return UnrootedTree(n, frozenset(edges))


def random_doubled_tree(rng: random.Random, max_side: int):
    """Two copies of a random rooted tree joined root-to-root: the generic
    finite tree admitting an edge-inverting automorphism.  Returns the tree
    and the inverting involution."""
    side = random_rooted_tree(rng, max_side)
    m = side.n
    edges = {(0, m)}
    for v in range(1, m):
        edges.add(edge(v, side.parent[v]))
        edges.add(edge(v + m, side.parent[v] + m))
    t = UnrootedTree(2 * m, frozenset(edges))
    swap = tuple((v + m) % (2 * m) for v in range(2 * m))
    return t, swap
