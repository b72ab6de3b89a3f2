"""Finite tree data model: rooted trees as parent arrays, unrooted trees as
edge sets, regular-tree truncations, and the structural primitives the rest
of the library is built on (centers, rooting, subdivision, induced subtrees).

All values are immutable after construction and all functions are pure.

Text formats (LF line endings, single spaces):

    rooted <n>          unrooted <n>
    <child> <parent>    <u> <v>        (u < v, lines sorted as strings)
    ...                 ...

Vertices are dense integers 0..n-1. Rooted trees are topologically numbered:
vertex 0 is the root and parent[i] < i for every other vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class _Omega:
    """Sentinel for unbounded branching degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"


OMEGA = _Omega()


class FormatError(ValueError):
    """Malformed tree/automorphism text, with the offending 1-based line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _check_connected_acyclic(n, edges):
    """Validate that `edges` is a tree on 0..n-1; returns adjacency lists."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if len(edges) != n - 1:
        raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(u)
    if count != n:
        raise ValueError("edge set is disconnected or cyclic")
    return adj


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree given by its parent array; parent[0] is -1."""

    parent: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.parent)
        object.__setattr__(self, "parent", p)
        if len(p) < 1:
            raise ValueError("empty trees are rejected (n >= 1)")
        if p[0] != -1:
            raise ValueError("parent[0] must be -1 (vertex 0 is the root)")
        for i in range(1, len(p)):
            if not 0 <= p[i] < i:
                raise ValueError(f"parent[{i}] = {p[i]} violates 0 <= parent < child")

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids = [[] for _ in range(self.n)]
        for v in range(1, self.n):
            kids[self.parent[v]].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        d = [0] * self.n
        for v in range(1, self.n):
            d[v] = d[self.parent[v]] + 1
        return tuple(d)

    @property
    def height(self) -> int:
        return max(self.depths)

    def branching(self) -> int:
        """Maximum number of children over all vertices."""
        return max(len(k) for k in self.children)


def edge(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered edge to (min, max)."""
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UnrootedTree:
    """Unrooted tree on vertices 0..n-1 given by its edge set."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        es = frozenset(edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", es)
        if self.n < 1:
            raise ValueError("empty trees are rejected (n >= 1)")
        for u, v in es:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        _check_connected_acyclic(self.n, es)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        a = [[] for _ in range(self.n)]
        for u, v in self.edges:
            a[u].append(v)
            a[v].append(u)
        return tuple(tuple(sorted(x)) for x in a)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges


@dataclass(frozen=True)
class CenterVertex:
    v: int


@dataclass(frozen=True)
class CenterEdge:
    u: int
    v: int


def center(t: UnrootedTree) -> CenterVertex | CenterEdge:
    """Center by iterated leaf removal; a vertex or an edge, and invariant
    under every automorphism of t."""
    n = t.n
    if n == 1:
        return CenterVertex(0)
    deg = [t.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = [False] * n
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        for v in layer:
            for u in t.adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    rest = sorted(v for v in range(n) if not removed[v])
    if len(rest) == 1:
        return CenterVertex(rest[0])
    u, v = rest
    if not t.has_edge(u, v):
        raise AssertionError("two-vertex core must be an edge")
    return CenterEdge(u, v)


def subdivide_edge(t: UnrootedTree, e: tuple[int, int]) -> tuple[UnrootedTree, int]:
    """Replace edge e by two edges through a fresh midpoint vertex (id n)."""
    e = edge(*e)
    if e not in t.edges:
        raise ValueError(f"{e} is not an edge of the tree")
    mid = t.n
    es = set(t.edges)
    es.remove(e)
    es.add(edge(e[0], mid))
    es.add(edge(e[1], mid))
    return UnrootedTree(t.n + 1, frozenset(es)), mid


def root_at(
    t: UnrootedTree, root: int, banned: int | None = None
) -> tuple[RootedTree, tuple[int, ...]]:
    """Root t at `root`, renumbering by BFS (neighbors in increasing order).

    With `banned` set, the branch through that neighbor of the root is cut
    off (used for the two sides of a center edge).  Returns the rooted tree
    and the new->old vertex table.
    """
    new_to_old = [root]
    old_to_new = {root: 0}
    parent = [-1]
    queue = deque([root])
    while queue:
        ov = queue.popleft()
        for ou in t.adj[ov]:
            if ou in old_to_new:
                continue
            if ov == root and ou == banned:
                continue
            old_to_new[ou] = len(new_to_old)
            new_to_old.append(ou)
            parent.append(old_to_new[ov])
            queue.append(ou)
    return RootedTree(tuple(parent)), tuple(new_to_old)


def to_unrooted(t: RootedTree) -> UnrootedTree:
    """Forget the root."""
    return UnrootedTree(t.n, frozenset(edge(v, t.parent[v]) for v in range(1, t.n)))


def induced_subtree(
    t: UnrootedTree, vertices: Iterable[int]
) -> tuple[UnrootedTree, tuple[int, ...]]:
    """Induced subgraph on `vertices`, which must be nonempty and connected.

    Returns the renumbered tree (ids in sorted old-vertex order) and the
    new->old table.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("empty vertex set")
    old_to_new = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    es = frozenset(e for e in t.edges if e[0] in keep and e[1] in keep)
    sub = UnrootedTree(len(vs), frozenset(edge(old_to_new[u], old_to_new[v]) for u, v in es))
    return sub, tuple(vs)


def is_connected_in(t: UnrootedTree, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in t.adj[v]:
            if u in vs and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == vs


@dataclass(frozen=True)
class RegularTruncation:
    """Radius-R ball around vertex 0 of the degree-n regular tree.

    For degree OMEGA the branching is capped by `width`; for finite degree
    `width` equals the degree.  Vertices are numbered breadth-first with
    children in increasing direction-label order, so every ball B(0, r) is
    an id prefix.
    """

    base: UnrootedTree
    degree: int | _Omega
    width: int
    radius: int

    @property
    def basepoint(self) -> int:
        return 0

    @cached_property
    def parents(self) -> tuple[int, ...]:
        par = [-1] * self.base.n
        seen = [False] * self.base.n
        seen[0] = True
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.base.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    par[u] = v
                    queue.append(u)
        return tuple(par)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        d = [0] * self.base.n
        for v in range(1, self.base.n):
            d[v] = d[self.parents[v]] + 1
        return tuple(d)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids = [[] for _ in range(self.base.n)]
        for v in range(1, self.base.n):
            kids[self.parents[v]].append(v)
        return tuple(tuple(sorted(k)) for k in kids)

    def ball_size(self, r: int) -> int:
        """Number of vertices within distance r of the basepoint."""
        if r >= self.radius:
            return self.base.n
        d = self.depths
        size = 0
        while size < len(d) and d[size] <= r:
            size += 1
        return size

    def distance(self, u: int, v: int) -> int:
        d = 0
        du, dv = self.depths[u], self.depths[v]
        while du > dv:
            u = self.parents[u]
            du -= 1
            d += 1
        while dv > du:
            v = self.parents[v]
            dv -= 1
            d += 1
        while u != v:
            u = self.parents[u]
            v = self.parents[v]
            d += 2
        return d


def truncate_regular(degree, radius: int, width: int | None = None) -> RegularTruncation:
    """Build B(basepoint, radius) of the degree-n regular tree (or of the
    width-w shadow when degree is OMEGA)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if degree is OMEGA:
        if width is None or width < 1:
            raise ValueError("OMEGA truncation needs width >= 1")
        w = width
    else:
        if not isinstance(degree, int) or degree < 3:
            raise ValueError("finite degree must be an integer >= 3")
        if width is not None and width != degree:
            raise ValueError("width must equal degree for finite degrees")
        w = degree
    edges = set()
    count = 1
    frontier = [0]
    for depth in range(radius):
        nxt = []
        branch = w if depth == 0 else w - 1
        for v in frontier:
            for _ in range(branch):
                edges.add(edge(v, count))
                nxt.append(count)
                count += 1
        frontier = nxt
    base = UnrootedTree(count, frozenset(edges))
    return RegularTruncation(base, degree, w, radius)


# --- text format -----------------------------------------------------------


def serialize_tree(t: RootedTree | UnrootedTree) -> str:
    if isinstance(t, RootedTree):
        lines = [f"rooted {t.n}"]
        lines += [f"{v} {t.parent[v]}" for v in range(1, t.n)]
        return "\n".join(lines) + "\n"
    lines = sorted(f"{u} {v}" for u, v in t.edges)
    return "\n".join([f"unrooted {t.n}"] + lines) + "\n"


def _split_lines(text: str | bytes) -> list[str]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return [ln for ln in text.split("\n") if ln.strip() != ""]


def _int_fields(ln: str, lineno: int, count: int) -> list[int]:
    parts = ln.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} fields, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer field in {ln!r}", lineno) from None


def parse_tree(text: str | bytes) -> RootedTree | UnrootedTree:
    """Parse either tree format; the header selects the kind."""
    lines = _split_lines(text)
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("rooted", "unrooted"):
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"malformed vertex count {head[1]!r}", 1) from None
    if n < 1:
        raise FormatError("vertex count must be >= 1", 1)
    if len(lines) != n:
        raise FormatError(f"expected {n - 1} edge lines, got {len(lines) - 1}", len(lines))
    if head[0] == "rooted":
        parent = [-1] * n
        seen = set()
        for i, ln in enumerate(lines[1:], start=2):
            c, p = _int_fields(ln, i, 2)
            if not 1 <= c < n:
                raise FormatError(f"child index {c} out of range", i)
            if c in seen:
                raise FormatError(f"duplicate child {c}", i)
            if not 0 <= p < n:
                raise FormatError(f"parent index {p} out of range", i)
            if p >= c:
                raise FormatError(f"parent {p} not less than child {c}", i)
            seen.add(c)
            parent[c] = p
        return RootedTree(tuple(parent))
    edges = set()
    for i, ln in enumerate(lines[1:], start=2):
        u, v = _int_fields(ln, i, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range in edge ({u},{v})", i)
        if u >= v:
            raise FormatError(f"edge ({u},{v}) must have u < v", i)
        if (u, v) in edges:
            raise FormatError(f"duplicate edge ({u},{v})", i)
        edges.add((u, v))
    try:
        return UnrootedTree(n, frozenset(edges))
    except ValueError as exc:
        raise FormatError(str(exc), len(lines)) from None


def build_uniform_rooted(depth: int, width: int) -> tuple[RootedTree, tuple[tuple[int, ...], ...]]:
    """Truncation of the infinitely branching rooted tree: all sequences of
    length <= depth over 0..width-1, numbered breadth-first.  Also returns
    the id -> sequence table."""
    if depth < 0 or width < 1:
        raise ValueError("need depth >= 0 and width >= 1")
    paths = [()]
    parent = [-1]
    index = {(): 0}
    frontier = [()]
    for _ in range(depth):
        nxt = []
        for p in frontier:
            for c in range(width):
                q = p + (c,)
                index[q] = len(paths)
                parent.append(index[p])
                paths.append(q)
                nxt.append(q)
        frontier = nxt
    return RootedTree(tuple(parent)), tuple(paths)
