"""Type classification for automorphisms of regular trees presented on
balls: edge inversion, translation with amplitude, or elliptic with a fixed
subtree — plus Undetermined when a finite window genuinely cannot decide.

A ball presentation is an injective, adjacency-preserving partial map from
the radius-r ball around the basepoint into the radius-R ambient ball, with
every image of the (r-1)-ball keeping all its ambient neighbors in view.

File format:

    ballaut <degree> <r> <R>
    unrooted <n>           (the ambient ball, breadth-first numbering)
    ...
    map <m>
    <v> <image>            (m lines covering B(0, r))
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from arbor.autom import TreeAutomorphism
from arbor.trees import (
    OMEGA,
    FormatError,
    RegularTruncation,
    UnrootedTree,
    is_connected_in,
    parse_tree,
    serialize_tree,
    truncate_regular,
)


@dataclass(frozen=True)
class BallPresentation:
    """Partial automorphism of a regular tree, given on B(basepoint, r).

    `mapping[v]` is the image of v for the first ball_size(r) vertices
    (vertices are breadth-first numbered, so the domain is an id prefix).
    """

    ambient: RegularTruncation
    domain_radius: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        amb, r, m = self.ambient, self.domain_radius, self.mapping
        if not 0 <= r <= amb.radius:
            raise ValueError("domain radius out of range")
        size = amb.ball_size(r)
        if len(m) != size:
            raise ValueError(f"mapping covers {len(m)} vertices, domain has {size}")
        if len(set(m)) != size:
            raise ValueError("mapping is not injective")
        for img in m:
            if not 0 <= img < amb.base.n:
                raise ValueError(f"image {img} outside the ambient ball")
        for v in range(1, size):
            p = amb.parents[v]
            if not amb.base.has_edge(m[v], m[p]):
                raise ValueError(f"adjacency broken at edge ({p},{v})")
        interior = amb.ball_size(r - 1) if r >= 1 else 0
        for v in range(interior):
            if amb.depths[m[v]] > amb.radius - 1:
                raise ValueError(
                    f"image of interior vertex {v} sits on the ambient rim"
                )

    @property
    def domain_size(self) -> int:
        return self.ambient.ball_size(self.domain_radius)


def displacement(p: BallPresentation, v: int) -> int:
    """Tree distance between v and its image."""
    if not 0 <= v < p.domain_size:
        raise ValueError(f"vertex {v} outside the domain ball")
    return p.ambient.distance(v, p.mapping[v])


@dataclass(frozen=True)
class Inversion:
    edge: tuple[int, int]


@dataclass(frozen=True)
class Translation:
    amplitude: int
    axis: tuple[int, ...]

    def __post_init__(self):
        if self.amplitude < 1:
            raise ValueError("amplitude must be >= 1")


@dataclass(frozen=True)
class Elliptic:
    fixed: frozenset[int]

    def __post_init__(self):
        if not self.fixed:
            raise ValueError("elliptic fixed set must be nonempty")


@dataclass(frozen=True)
class Undetermined:
    reason: str


TypeVerdict = Inversion | Translation | Elliptic | Undetermined


def classify(p: BallPresentation) -> TypeVerdict:
    """Decide the type visible in the window.

    Checked in order: an inverted domain edge; a fixed domain vertex (the
    verdict then carries every fixed domain vertex, a connected set); a
    translation read off the displacement-minimizing path of the interior
    ball B(r-1).  Anything else is Undetermined with the limiting reason.
    """
    amb, m = p.ambient, p.mapping
    size = p.domain_size
    if p.domain_radius < 1:
        raise ValueError("classification needs domain radius >= 1")
    for v in range(1, size):
        u = amb.parents[v]
        if m[v] == u and m[u] == v:
            return Inversion((u, v))
    fixed = frozenset(v for v in range(size) if m[v] == v)
    if fixed:
        if not is_connected_in(amb.base, fixed):
            raise AssertionError("fixed set of a partial isometry must be connected")
        return Elliptic(fixed)
    interior = amb.ball_size(p.domain_radius - 1)
    disp = [amb.distance(v, m[v]) for v in range(interior)]
    k = min(disp)
    argmin = [v for v in range(interior) if disp[v] == k]
    if min(amb.depths[v] for v in argmin) >= p.domain_radius - 1:
        return Undetermined("minimum displacement only on the interior rim")
    # the argmin set of a translation is its axis: a path shifted by k
    inside = set(argmin)
    degs = {v: sum(1 for u in amb.base.adj[v] if u in inside) for v in argmin}
    if any(d > 2 for d in degs.values()) or sorted(degs.values()).count(1) != 2:
        return Undetermined("displacement-minimizing set is not a path segment")
    if not is_connected_in(amb.base, inside):
        return Undetermined("displacement-minimizing set is disconnected")
    start = min(v for v in argmin if degs[v] == 1)
    path = [start]
    prev = -1
    while True:
        nxt = [u for u in amb.base.adj[path[-1]] if u in inside and u != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    if len(path) < k + 1:
        return Undetermined("axis segment shorter than the shift")
    forward = all(
        m[path[i]] == path[i + k] for i in range(len(path) - k)
    )
    backward = all(
        m[path[i + k]] == path[i] for i in range(len(path) - k)
    )
    if not (forward or backward):
        return Undetermined("minimizing path is not shifted by the minimum")
    return Translation(k, tuple(path))


def fixed_subtree(obj: BallPresentation | TreeAutomorphism) -> frozenset[int]:
    """Fixed vertex set of an elliptic presentation (or of a full tree
    automorphism with at least one fixed point); always connected."""
    if isinstance(obj, TreeAutomorphism):
        fixed = obj.fixed_vertices()
        if not fixed:
            raise ValueError("automorphism has no fixed vertices")
        tree = obj.tree if isinstance(obj.tree, UnrootedTree) else None
        if tree is not None and not is_connected_in(tree, fixed):
            raise AssertionError("fixed set must be connected")
        return fixed
    verdict = classify(obj)
    if not isinstance(verdict, Elliptic):
        raise ValueError(f"fixed_subtree needs an elliptic presentation, got {verdict}")
    return verdict.fixed


# --- synthetic presentations -----------------------------------------------


def random_ball_aut(amb: RegularTruncation, rng: random.Random) -> tuple[int, ...]:
    """Automorphism of the whole ambient ball fixing the basepoint, built by
    recursive random children matching (depth-preserving)."""
    img = [0] * amb.base.n
    for v in range(amb.base.n):
        kids = list(amb.children[v])
        targets = list(amb.children[img[v]])
        rng.shuffle(targets)
        for a, b in zip(kids, targets):
            img[a] = b
    return tuple(img)


def _extend_random(
    amb: RegularTruncation,
    seed: dict[int, int],
    domain_radius: int,
    rng: random.Random,
) -> tuple[int, ...]:
    """Grow a partial isometry from seed pairs to all of B(0, r), choosing
    random neighbor matchings."""
    m = dict(seed)
    used = set(m.values())
    queue = sorted(m)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        if amb.depths[v] >= domain_radius:
            continue
        sources = [u for u in amb.base.adj[v] if u not in m]
        targets = [w for w in amb.base.adj[m[v]] if w not in used]
        if len(sources) > len(targets):
            raise AssertionError("ambient radius too small for the extension")
        rng.shuffle(targets)
        for u, w in zip(sources, targets):
            m[u] = w
            used.add(w)
            queue.append(u)
    size = amb.ball_size(domain_radius)
    return tuple(m[v] for v in range(size))


def synth_elliptic(degree: int, radius: int, rng: random.Random) -> BallPresentation:
    """Random depth-preserving automorphism of the full ball (fixes the
    basepoint, hence elliptic)."""
    amb = truncate_regular(degree, radius)
    return BallPresentation(amb, radius, random_ball_aut(amb, rng))


def synth_inversion(degree: int, r: int, rng: random.Random) -> BallPresentation:
    """Reflection across an edge at the basepoint, randomly extended; the
    ambient needs one extra ring (R = r + 1)."""
    if r < 1:
        raise ValueError("need r >= 1")
    amb = truncate_regular(degree, r + 1)
    c = rng.choice(amb.children[0])
    mapping = _extend_random(amb, {0: c, c: 0}, r, rng)
    return BallPresentation(amb, r, mapping)


def _spine(amb: RegularTruncation, length: int) -> dict[int, int]:
    """Positions -length..length of a geodesic through the basepoint."""
    pos = {0: 0}
    v = 0
    for i in range(1, length + 1):
        v = amb.children[v][0]
        pos[i] = v
    v = 0
    for i in range(1, length + 1):
        v = amb.children[v][1] if i == 1 else amb.children[v][0]
        pos[-i] = v
    return pos


def synth_translation(degree: int, k: int, r: int, rng: random.Random) -> BallPresentation:
    """Shift by k along a geodesic through the basepoint, randomly extended
    off the axis; the ambient needs k extra rings (R = r + k)."""
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    amb = truncate_regular(degree, r + k)
    pos = _spine(amb, r + k)
    seed = {pos[i]: pos[i + k] for i in range(-r, r + 1)}
    mapping = _extend_random(amb, seed, r, rng)
    return BallPresentation(amb, r, mapping)


def conjugate_presentation(p: BallPresentation, alpha: Sequence[int]) -> BallPresentation:
    """alpha o p o alpha^-1 for a full-ball automorphism alpha (as produced
    by random_ball_aut); the domain shape is preserved."""
    amb = p.ambient
    inv = [0] * amb.base.n
    for i, x in enumerate(alpha):
        inv[x] = i
    size = p.domain_size
    mapping = tuple(alpha[p.mapping[inv[v]]] for v in range(size))
    return BallPresentation(amb, p.domain_radius, mapping)


# --- text format -----------------------------------------------------------


def serialize_ballaut(p: BallPresentation) -> str:
    amb = p.ambient
    degree = "omega" if amb.degree is OMEGA else str(amb.degree)
    head = f"ballaut {degree} {p.domain_radius} {amb.radius}\n"
    body = serialize_tree(amb.base)
    lines = [f"map {p.domain_size}"]
    lines += [f"{v} {p.mapping[v]}" for v in range(p.domain_size)]
    return head + body + "\n".join(lines) + "\n"


def parse_ballaut(text: str | bytes) -> BallPresentation:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln for ln in text.split("\n") if ln.strip() != ""]
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ballaut":
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    try:
        r, big_r = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError("malformed radii", 1) from None
    tree_lines = lines[1:]
    if not tree_lines:
        raise FormatError("missing ambient tree", 2)
    tree_head = tree_lines[0].split()
    if len(tree_head) != 2 or tree_head[0] != "unrooted":
        raise FormatError("ambient tree must be in unrooted format", 2)
    n = int(tree_head[1])
    tree_text = "\n".join(tree_lines[: n])
    base = parse_tree(tree_text)
    if head[1] == "omega":
        degree, width = OMEGA, len(base.adj[0])
    else:
        try:
            degree = int(head[1])
        except ValueError:
            raise FormatError(f"malformed degree {head[1]!r}", 1) from None
        width = None
    expected = truncate_regular(degree, big_r, width)
    if base.edges != expected.base.edges or base.n != expected.base.n:
        raise FormatError(
            "ambient tree is not the breadth-first ball of the declared degree/radius", 2
        )
    rest = tree_lines[n:]
    if not rest:
        raise FormatError("missing map section", n + 2)
    map_head = rest[0].split()
    if len(map_head) != 2 or map_head[0] != "map":
        raise FormatError(f"malformed map header {rest[0]!r}", n + 2)
    m = int(map_head[1])
    if len(rest) != m + 1:
        raise FormatError(f"expected {m} map lines, got {len(rest) - 1}", n + 2)
    mapping = {}
    for i, ln in enumerate(rest[1:], start=n + 3):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"malformed map line {ln!r}", i)
        v, img = int(parts[0]), int(parts[1])
        if v in mapping:
            raise FormatError(f"duplicate map entry for {v}", i)
        mapping[v] = img
    size = expected.ball_size(r)
    if sorted(mapping) != list(range(size)):
        raise FormatError(f"map must cover exactly B(0, {r}) = 0..{size - 1}", n + 2)
    return BallPresentation(expected, r, tuple(mapping[v] for v in range(size)))
