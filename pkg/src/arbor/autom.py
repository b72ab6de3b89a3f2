"""Tree automorphism algebra: validation, composition, orbits, cycle types,
exhaustive enumeration, and the brute-force conjugacy oracle used as ground
truth by the test suites.

File format: header ``aut <n>`` then one line of n space-separated images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from arbor import _kernels
from arbor.trees import (
    CenterVertex,
    FormatError,
    RootedTree,
    UnrootedTree,
    center,
    edge,
    root_at,
    subdivide_edge,
)

DEFAULT_AUT_BOUND = 10


@dataclass(frozen=True)
class TreeAutomorphism:
    """Structure-preserving vertex permutation of a fixed tree.

    For rooted trees the root stays put.  Construction validates and reports
    the first violated constraint.
    """

    tree: RootedTree | UnrootedTree
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        t, p = self.tree, self.perm
        if len(p) != t.n:
            raise ValueError(f"permutation covers {len(p)} vertices, tree has {t.n}")
        if sorted(p) != list(range(t.n)):
            raise ValueError("not a bijection on 0..n-1")
        if isinstance(t, RootedTree):
            if p[0] != 0:
                raise ValueError("root moved")
            for v in range(1, t.n):
                if t.parent[p[v]] != p[t.parent[v]]:
                    raise ValueError(f"edge ({t.parent[v]},{v}) not preserved")
        else:
            for u, v in t.edges:
                if edge(p[u], p[v]) not in t.edges:
                    raise ValueError(f"edge ({u},{v}) not preserved")

    @property
    def n(self) -> int:
        return self.tree.n

    def __call__(self, v: int) -> int:
        return self.perm[v]

    def is_identity(self) -> bool:
        return all(self.perm[i] == i for i in range(self.n))

    def fixed_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.perm[v] == v)


def validate_aut(tree, perm) -> TreeAutomorphism:
    return TreeAutomorphism(tree, tuple(perm))


def identity_aut(tree) -> TreeAutomorphism:
    return TreeAutomorphism(tree, tuple(range(tree.n)))


def compose(a: TreeAutomorphism, b: TreeAutomorphism) -> TreeAutomorphism:
    """(a o b)[i] = a[b[i]]."""
    if a.tree != b.tree:
        raise ValueError("mismatched trees")
    return TreeAutomorphism(a.tree, tuple(a.perm[b.perm[i]] for i in range(a.n)))


def inverse(a: TreeAutomorphism) -> TreeAutomorphism:
    inv = [0] * a.n
    for i, x in enumerate(a.perm):
        inv[x] = i
    return TreeAutomorphism(a.tree, tuple(inv))


def conjugate(alpha: TreeAutomorphism, phi: TreeAutomorphism) -> TreeAutomorphism:
    """alpha o phi o alpha^-1."""
    return compose(compose(alpha, phi), inverse(alpha))


def perm_orbits(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Orbits of a bare permutation, each anchored at its minimum element and
    listed in iteration order; orbits sorted by minimum."""
    seen = [False] * len(perm)
    orbits = []
    for v in range(len(perm)):
        if seen[v]:
            continue
        orbit = []
        x = v
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = perm[x]
        orbits.append(tuple(orbit))
    return tuple(orbits)


def orbits(a: TreeAutomorphism) -> tuple[tuple[int, ...], ...]:
    return perm_orbits(a.perm)


def cycle_type(a: TreeAutomorphism) -> tuple[tuple[int, int], ...]:
    """Multiset of orbit lengths as (length, count) pairs sorted by length."""
    counts: dict[int, int] = {}
    for orbit in perm_orbits(a.perm):
        counts[len(orbit)] = counts.get(len(orbit), 0) + 1
    return tuple(sorted(counts.items()))


def _rooted_aut_perms(t: RootedTree) -> list[tuple[int, ...]]:
    return _kernels.rooted_auts(t.parent)


def enumerate_aut(tree, bound: int = DEFAULT_AUT_BOUND) -> list[TreeAutomorphism]:
    """All automorphisms, by backtracking over code-equal subtree matchings.

    Guarded by a vertex bound because the group can be huge; override the
    bound explicitly when you mean it.
    """
    if tree.n > bound:
        raise ValueError(f"size bound exceeded: {tree.n} > {bound}")
    if isinstance(tree, RootedTree):
        return [TreeAutomorphism(tree, p) for p in _rooted_aut_perms(tree)]
    c = center(tree)
    out = []
    if isinstance(c, CenterVertex):
        rooted, back = root_at(tree, c.v)
        old_to_new = [0] * tree.n
        for new, old in enumerate(back):
            old_to_new[old] = new
        for rp in _rooted_aut_perms(rooted):
            perm = [0] * tree.n
            for old in range(tree.n):
                perm[old] = back[rp[old_to_new[old]]]
            out.append(TreeAutomorphism(tree, tuple(perm)))
    else:
        sub, mid = subdivide_edge(tree, (c.u, c.v))
        rooted, back = root_at(sub, mid)
        old_to_new = [0] * sub.n
        for new, old in enumerate(back):
            old_to_new[old] = new
        for rp in _rooted_aut_perms(rooted):
            perm = [0] * tree.n
            for old in range(tree.n):
                perm[old] = back[rp[old_to_new[old]]]
            out.append(TreeAutomorphism(tree, tuple(perm)))
    return out


def conj_oracle(
    phi: TreeAutomorphism, psi: TreeAutomorphism, bound: int = DEFAULT_AUT_BOUND
) -> TreeAutomorphism | None:
    """Search the full automorphism group for alpha with alpha o phi o
    alpha^-1 = psi.  Ground truth for the fast deciders; None means not
    conjugate."""
    if phi.tree != psi.tree:
        raise ValueError("mismatched trees")
    for alpha in enumerate_aut(phi.tree, bound=bound):
        if conjugate(alpha, phi).perm == psi.perm:
            return alpha
    return None


def conjugacy_class_ids(perms: Sequence[tuple[int, ...]]) -> list[int]:
    """Class id per permutation for a full group given as raw tuples."""
    return _kernels.conj_classes(list(perms))


# --- text format -----------------------------------------------------------


def serialize_aut(perm: Sequence[int]) -> str:
    return f"aut {len(perm)}\n" + " ".join(str(x) for x in perm) + "\n"


def parse_aut(text: str | bytes) -> tuple[int, ...]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln for ln in text.split("\n") if ln.strip() != ""]
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "aut":
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"malformed count {head[1]!r}", 1) from None
    if len(lines) != 2:
        raise FormatError("expected exactly one image line", len(lines))
    try:
        perm = tuple(int(x) for x in lines[1].split())
    except ValueError:
        raise FormatError("non-integer image", 2) from None
    if len(perm) != n:
        raise FormatError(f"expected {n} images, got {len(perm)}", 2)
    return perm
