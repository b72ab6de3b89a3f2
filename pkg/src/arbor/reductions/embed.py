"""Embeddings of trees into larger ambients whose automorphism fixes exactly
the embedded image, plus the transfer from edge-inverting automorphisms to
rooted ones.

The attached "moving furniture" is always a truncated infinitely-branching
tree carrying the first-coordinate pair swap: an involution that moves every
vertex except its root.  Truncation keeps the attached copies two-wide
internally; widths beyond the pairing only inflate the ambient without
changing what the fixed-point set or the conjugacy decision can see.
"""

from __future__ import annotations

from dataclasses import dataclass

from arbor.autom import TreeAutomorphism
from arbor.trees import (
    OMEGA,
    RootedTree,
    UnrootedTree,
    build_uniform_rooted,
    edge,
    root_at,
    subdivide_edge,
)


@dataclass(frozen=True)
class EmbeddedPair:
    """A source tree embedded in an ambient tree together with an ambient
    automorphism whose fixed-point set is exactly the embedded image."""

    source: RootedTree | UnrootedTree
    ambient: RootedTree | UnrootedTree
    embedding: tuple[int, ...]
    phi: TreeAutomorphism

    def __post_init__(self):
        emb = tuple(self.embedding)
        object.__setattr__(self, "embedding", emb)
        if self.phi.tree != self.ambient:
            raise ValueError("phi must act on the ambient tree")
        if len(emb) != self.source.n or len(set(emb)) != len(emb):
            raise ValueError("embedding must inject the source vertex set")
        src, amb = self.source, self.ambient
        if isinstance(src, RootedTree):
            for v in range(1, src.n):
                if not _ambient_adjacent(amb, emb[v], emb[src.parent[v]]):
                    raise ValueError("embedding does not preserve source edges")
        else:
            for u, v in src.edges:
                if not _ambient_adjacent(amb, emb[u], emb[v]):
                    raise ValueError("embedding does not preserve source edges")
        if self.phi.fixed_vertices() != frozenset(emb):
            raise ValueError("fixed-point set must equal the embedded image exactly")


def _ambient_adjacent(amb, a, b) -> bool:
    if isinstance(amb, RootedTree):
        return amb.parent[a] == b or amb.parent[b] == a
    return amb.has_edge(a, b)


def sigma_aut(depth: int, width: int) -> TreeAutomorphism:
    """First-coordinate pair swap (2k <-> 2k+1) on the (depth, width)
    truncation of the infinitely branching rooted tree: an involution whose
    only fixed point is the root."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if width < 2 or width % 2 != 0:
        raise ValueError("width must be even and >= 2")
    tree, paths = build_uniform_rooted(depth, width)
    index = {p: i for i, p in enumerate(paths)}
    perm = [0] * tree.n
    for i, p in enumerate(paths):
        perm[i] = i if not p else index[(p[0] ^ 1,) + p[1:]]
    return TreeAutomorphism(tree, tuple(perm))


def phi_rooted(t: RootedTree, depth: int | None = None, width: int | None = None) -> EmbeddedPair:
    """Embed a rooted tree so that a fixed-point-free pair swap runs on the
    copies attached at every vertex.

    Original children of an embedded vertex sit at odd child slots 2i+1;
    each vertex also grows a fresh two-branch attached copy at even slots 0
    and 2, extended two-wide down to the ambient depth.  The automorphism
    fixes the embedded tree and swaps the two branches of every attached
    copy rigidly.
    """
    h = t.height
    maxb = t.branching()
    if depth is None:
        depth = h + 2
    if depth < h + 2:
        raise ValueError(f"depth {depth} < height + 2 = {h + 2}")
    if width is None:
        width = max(2 * maxb + 2, 4)
    if width % 2 != 0 or width < 2 * maxb + 2:
        raise ValueError(f"width must be even and >= {2 * maxb + 2}")

    # vertices are slot paths; embedded vertex x sits at path(x)
    path_of = [()] * t.n
    for v in range(1, t.n):
        p = t.parent[v]
        slot = 2 * t.children[p].index(v) + 1
        path_of[v] = path_of[p] + (slot,)

    vertices = set(path_of)

    def grow(base, at_depth):
        # two fresh branches, two-wide below, down to the ambient depth
        frontier = []
        for slot in (0, 2):
            q = base + (slot,)
            vertices.add(q)
            frontier.append(q)
        d = at_depth + 1
        while d < depth:
            nxt = []
            for q in frontier:
                for c in (0, 1):
                    nq = q + (c,)
                    vertices.add(nq)
                    nxt.append(nq)
            frontier = nxt
            d += 1

    for v in range(t.n):
        grow(path_of[v], t.depths[v])

    order = sorted(vertices, key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(order)}
    parent = [-1] * len(order)
    for p, i in index.items():
        if p:
            parent[i] = index[p[:-1]]
    ambient = RootedTree(tuple(parent))

    embedded = set(path_of)
    swap_top = {0: 2, 2: 0}
    perm = [0] * len(order)
    for p, i in index.items():
        if p in embedded:
            perm[i] = i
            continue
        # walk down to the deepest embedded prefix; the next slot is the
        # copy branch that gets swapped
        cut = len(p)
        while p[:cut] not in embedded:
            cut -= 1
        q = p[:cut] + (swap_top[p[cut]],) + p[cut + 1 :]
        perm[i] = index[q]
    phi = TreeAutomorphism(ambient, tuple(perm))
    embedding = tuple(index[path_of[v]] for v in range(t.n))
    return EmbeddedPair(t, ambient, embedding, phi)


def phi_unrooted(
    t: UnrootedTree,
    degree,
    radius: int = 3,
    width: int | None = None,
) -> EmbeddedPair:
    """Embed an unrooted tree in a window of a regular ambient and return
    the automorphism fixing exactly the image.

    Finite degree n >= 3 requires every vertex of t to have degree 1 or n;
    each leaf then grows an (n-1)-branching attached copy (branch count
    rounded down to even so the top-level pair swap is fixed-point free).
    Degree OMEGA accepts any tree and hangs `width` fresh attached copies on
    every vertex, swapped rigidly in consecutive pairs.
    """
    if radius < 1:
        raise ValueError("insufficient radius: need >= 1")
    n0 = t.n
    edges = {e for e in t.edges}
    nxt = n0
    moved_pairs: list[tuple[list[int], list[int]]] = []

    def attach_copy(owner: int, branches: int, inner: int, depth: int) -> list[list[int]]:
        """Attach `branches` fresh children to owner, each continuing with
        `inner` children per vertex to the given depth; returns the vertex
        lists of the branches in attachment order (each in BFS order)."""
        nonlocal nxt
        out = []
        for _ in range(branches):
            root = nxt
            nxt += 1
            edges.add(edge(owner, root))
            branch = [root]
            frontier = [root]
            for _ in range(depth - 1):
                nf = []
                for v in frontier:
                    for _ in range(inner):
                        edges.add(edge(v, nxt))
                        branch.append(nxt)
                        nf.append(nxt)
                        nxt += 1
                frontier = nf
            out.append(branch)
        return out

    if degree is OMEGA:
        w = 2 if width is None else width
        if w < 2 or w % 2 != 0:
            raise ValueError("OMEGA embedding needs an even width >= 2")
        for v in range(n0):
            branches = attach_copy(v, w, w, radius)
            for k in range(0, w, 2):
                moved_pairs.append((branches[k], branches[k + 1]))
    else:
        if not isinstance(degree, int) or degree < 3:
            raise ValueError("finite degree must be an integer >= 3")
        bad = [v for v in range(n0) if t.degree(v) not in (1, degree)]
        if bad:
            raise ValueError(f"vertex {bad[0]} has degree {t.degree(bad[0])}, need 1 or {degree}")
        m = 2 * ((degree - 1) // 2)
        leaves = [v for v in range(n0) if t.degree(v) == 1]
        for v in leaves:
            branches = attach_copy(v, m, degree - 1, radius)
            for k in range(0, m, 2):
                moved_pairs.append((branches[k], branches[k + 1]))

    ambient = UnrootedTree(nxt, frozenset(edges))
    perm = list(range(nxt))
    for a, b in moved_pairs:
        for x, y in zip(a, b):
            perm[x] = y
            perm[y] = x
    phi = TreeAutomorphism(ambient, tuple(perm))
    return EmbeddedPair(t, ambient, tuple(range(n0)), phi)


def invert_to_rooted(phi: TreeAutomorphism) -> TreeAutomorphism:
    """Transfer an edge-inverting automorphism of an unrooted tree to an
    automorphism of the rooted tree obtained by subdividing the inverted
    edge and rooting at the midpoint."""
    t = phi.tree
    if not isinstance(t, UnrootedTree):
        raise TypeError("invert_to_rooted expects an unrooted automorphism")
    inverted = None
    for u, v in sorted(t.edges):
        if phi.perm[u] == v and phi.perm[v] == u:
            inverted = (u, v)
            break
    if inverted is None:
        raise ValueError("automorphism does not invert any edge (not type (a))")
    sub, mid = subdivide_edge(t, inverted)
    rooted, back = root_at(sub, mid)
    old_to_new = {old: new for new, old in enumerate(back)}
    ext = list(phi.perm) + [mid]
    perm = tuple(old_to_new[ext[back[i]]] for i in range(sub.n))
    return TreeAutomorphism(rooted, perm)
