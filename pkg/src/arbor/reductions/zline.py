"""Finite windows of the decorated integer-line tree and the bijection
between subsets of the window and its spine-fixing involutions.

Each integer site carries a Y-shape (an upward stem forking into two
leaves); the two intermediate spine positions between consecutive sites
carry a 2-chain and a 1-chain pendant.  The asymmetric decoration pattern
kills reflections, so every automorphism of the infinite tree translates
the spine, and the spine-fixing ones are exactly the per-site Y-leaf swaps.

File format: header ``zset <lo> <hi> <count>`` then one integer per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from arbor.autom import TreeAutomorphism
from arbor.trees import FormatError, UnrootedTree, edge


@dataclass(frozen=True)
class IntegerWindow:
    """A subset of the integers [lo, hi]."""

    lo: int
    hi: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.lo > self.hi:
            raise ValueError("need lo <= hi")
        for x in self.members:
            if not self.lo <= x <= self.hi:
                raise ValueError(f"member {x} outside [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class ZWindow:
    """Window of the decorated line tree for sites lo..hi.

    site_spine[i - lo] is the spine vertex of site i; site_leaves[i - lo]
    the (left, right) Y-leaf pair.
    """

    tree: UnrootedTree
    lo: int
    hi: int
    spine: tuple[int, ...]
    site_spine: tuple[int, ...]
    site_mid: tuple[int, ...]
    site_leaves: tuple[tuple[int, int], ...]

    def sites(self) -> range:
        return range(self.lo, self.hi + 1)


def tz_build(lo: int, hi: int) -> ZWindow:
    """Build the window with sites lo..hi (three spine vertices per unit
    interval, decorated Y / 2-chain / 1-chain left to right)."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    edges: set[tuple[int, int]] = set()
    nxt = 0

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    spine: list[int] = []
    site_spine: list[int] = []
    site_mid: list[int] = []
    site_leaves: list[tuple[int, int]] = []

    def add_spine() -> int:
        v = fresh()
        if spine:
            edges.add(edge(spine[-1], v))
        spine.append(v)
        return v

    for site in range(lo, hi + 1):
        s = add_spine()
        mid = fresh()
        left, right = fresh(), fresh()
        edges.add(edge(s, mid))
        edges.add(edge(mid, left))
        edges.add(edge(mid, right))
        site_spine.append(s)
        site_mid.append(mid)
        site_leaves.append((left, right))
        if site == hi:
            break
        s2 = add_spine()
        c1, c2 = fresh(), fresh()
        edges.add(edge(s2, c1))
        edges.add(edge(c1, c2))
        s3 = add_spine()
        c3 = fresh()
        edges.add(edge(s3, c3))
    tree = UnrootedTree(nxt, frozenset(edges))
    return ZWindow(
        tree,
        lo,
        hi,
        tuple(spine),
        tuple(site_spine),
        tuple(site_mid),
        tuple(site_leaves),
    )


def tz_phi(zw: ZWindow, subset: IntegerWindow | Iterable[int]) -> TreeAutomorphism:
    """The involution swapping exactly the Y-leaf pairs at the given sites."""
    if isinstance(subset, IntegerWindow):
        if subset.lo < zw.lo or subset.hi > zw.hi:
            raise ValueError("integer window exceeds the built window")
        sites = subset.members
    else:
        sites = frozenset(subset)
    for s in sites:
        if not zw.lo <= s <= zw.hi:
            raise ValueError(f"site {s} outside the window [{zw.lo}, {zw.hi}]")
    perm = list(range(zw.tree.n))
    for s in sites:
        left, right = zw.site_leaves[s - zw.lo]
        perm[left], perm[right] = right, left
    return TreeAutomorphism(zw.tree, tuple(perm))


def tz_decode(zw: ZWindow, phi: TreeAutomorphism) -> IntegerWindow:
    """Invert tz_phi: read the swap set off a spine-fixing automorphism."""
    if phi.tree != zw.tree:
        raise ValueError("automorphism does not act on this window")
    for v in zw.spine:
        if phi.perm[v] != v:
            raise ValueError(
                f"spine vertex {v} moves: the automorphism induces a nontrivial "
                "translation and is not decodable on this window"
            )
    members = set()
    for site in zw.sites():
        left, right = zw.site_leaves[site - zw.lo]
        if phi.perm[left] == right:
            members.add(site)
        elif phi.perm[left] != left:
            raise AssertionError("Y-leaf maps outside its own site")
    return IntegerWindow(zw.lo, zw.hi, frozenset(members))


def tz_site_map(src: ZWindow, dst: ZWindow, offset: int) -> dict[int, int]:
    """Vertex correspondence src -> dst sending site i to site i + offset,
    defined on the overlap (including the decorations between overlapping
    sites)."""
    mapping: dict[int, int] = {}
    lo = max(src.lo, dst.lo - offset)
    hi = min(src.hi, dst.hi - offset)
    if lo > hi:
        return mapping
    for site in range(lo, hi + 1):
        i, j = site - src.lo, site + offset - dst.lo
        mapping[src.site_spine[i]] = dst.site_spine[j]
        mapping[src.site_mid[i]] = dst.site_mid[j]
        for a, b in zip(src.site_leaves[i], dst.site_leaves[j]):
            mapping[a] = b
        if site < hi:
            # intermediate spine vertices and their chains (allocated right
            # after their spine vertex) line up 1:1
            for off, chain_len in ((1, 2), (2, 1)):
                a = src.spine[3 * i + off]
                b = dst.spine[3 * j + off]
                for d in range(chain_len + 1):
                    mapping[a + d] = b + d
    return mapping


# --- text format -------------------------------------------------------------


def serialize_zset(window: IntegerWindow) -> str:
    lines = [f"zset {window.lo} {window.hi} {len(window.members)}"]
    lines += [str(x) for x in sorted(window.members)]
    return "\n".join(lines) + "\n"


def parse_zset(text: str | bytes) -> IntegerWindow:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln.strip() for ln in text.split("\n") if ln.strip() != ""]
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 4 or head[0] != "zset":
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    try:
        lo, hi, count = int(head[1]), int(head[2]), int(head[3])
    except ValueError:
        raise FormatError("malformed bounds/count", 1) from None
    if len(lines) != count + 1:
        raise FormatError(f"expected {count} members, got {len(lines) - 1}", len(lines))
    members = set()
    for i, ln in enumerate(lines[1:], start=2):
        try:
            members.add(int(ln))
        except ValueError:
            raise FormatError(f"non-integer member {ln!r}", i) from None
    try:
        return IntegerWindow(lo, hi, frozenset(members))
    except ValueError as exc:
        raise FormatError(str(exc), 1) from None
