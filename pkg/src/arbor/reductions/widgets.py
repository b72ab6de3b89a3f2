"""Coding of marked Cayley balls of the rank-2 free group as trees with all
degrees 1 or 3 (or 1 or n), and the decoder recovering the ball and the
marked subset from the bare tree.

Words are strings over a, b, A, B with A = a^-1, B = b^-1, always reduced.

Widget geometry (frozen; the n=3 vertex counts are 6 / 8 / 10 / 12):

* vertex widget for word u: path w0-w1-w2-w3 with ports in-a at w0, in-b at
  w1, out-a at w2, out-b at w3; w0 and w3 carry pendant leaves.  When u is
  in the coded set, w0's pendant leaf deepens into a cherry (an inner vertex
  carrying two leaves).
* a-edge widget: spine s0..s3 from source w2 to target w0, a pendant leaf
  per spine vertex, the s1 pendant deepened into a cherry.
* b-edge widget: spine s0..s4 from source w3 to target w1, pendant leaves,
  the s3 pendant deepened into a cherry.

The only adjacent vertex pairs in which neither member is adjacent to a
leaf sit inside vertex widgets: one such pair normally, two when the coded
word is in the set.  That local pattern anchors the decoder; spine length
plus the cherry position then recover each edge's label and direction.

For general n >= 3 every pendant leaf becomes n-2 leaves, cherries carry
n-1 leaves, and the leaf-free ports w1/w2 (and an in-set w0) are padded to
degree n with extra cherries, so all non-rim degrees are 1 or n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from arbor.trees import FormatError, UnrootedTree, edge

GENERATORS = "ab"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


class NotACoding(Exception):
    """The input tree does not match the widget-coding pattern."""


def reduce_word(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if ch not in INVERSE:
            raise ValueError(f"bad letter {ch!r}")
        if out and out[-1] == INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def is_reduced(word: str) -> bool:
    return all(ch in INVERSE for ch in word) and reduce_word(word) == word


def ball_words(radius: int) -> list[str]:
    """All reduced words of length <= radius, sorted by (length, word)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    out = [""]
    frontier = [""]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for ch in "abAB":
                if not w or w[-1] != INVERSE[ch]:
                    nxt.append(w + ch)
        frontier = sorted(nxt)
        out.extend(frontier)
    return out


def translate(g: str, words: Iterable[str]) -> frozenset[str]:
    """Left translation g . S."""
    return frozenset(reduce_word(g + w) for w in words)


@dataclass(frozen=True)
class GroupWordWindow:
    """A set of reduced words inside the radius-r ball."""

    radius: int
    members: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        for w in self.members:
            if not is_reduced(w):
                raise ValueError(f"word {w!r} is not reduced")
            if len(w) > self.radius:
                raise ValueError(f"word {w!r} longer than the radius")


@dataclass(frozen=True)
class WidgetCoding:
    """Encoder output: the coding tree, per-vertex provenance tags (with
    ':rim' marking port stubs missing their off-window connection), and the
    coded data for reference."""

    tree: UnrootedTree
    provenance: tuple[str, ...]
    words: tuple[str, ...]
    members: frozenset[str]

    def rim_vertices(self) -> frozenset[int]:
        return frozenset(v for v, tag in enumerate(self.provenance) if tag.endswith(":rim"))


@dataclass(frozen=True)
class DecodedCoding:
    """Decoder output: the recovered directed labeled ball and marked set."""

    words: frozenset[str]
    members: frozenset[str]
    edges: frozenset[tuple[str, str, str]]  # (source word, generator, target word)


def widget_encode(window: GroupWordWindow, leaf_mark: int = 3) -> WidgetCoding:
    """Code the radius-r Cayley ball with the window's members marked."""
    if window.radius < 1:
        raise ValueError("radius must be >= 1")
    return encode_words(window.members, ball_words(window.radius), leaf_mark)


def encode_words(
    members: Iterable[str], words: Iterable[str], leaf_mark: int = 3
) -> WidgetCoding:
    """Code an arbitrary connected word window (both endpoints of a Cayley
    edge must lie in `words` for the edge to be coded)."""
    n = leaf_mark
    if n < 3:
        raise ValueError("leaf multiplicity must be >= 3")
    words = sorted(set(words), key=lambda w: (len(w), w))
    members = frozenset(members)
    wordset = set(words)
    if not wordset:
        raise ValueError("empty window")
    for w in words:
        if not is_reduced(w):
            raise ValueError(f"word {w!r} is not reduced")
    if not members <= wordset:
        raise ValueError("members must lie inside the window")

    edges_out: set[tuple[int, int]] = set()
    tags: list[str] = []

    def new_vertex(tag: str) -> int:
        tags.append(tag)
        return len(tags) - 1

    def add_leaves(at: int, count: int, tag: str):
        for _ in range(count):
            leaf = new_vertex(tag)
            edges_out.add(edge(at, leaf))

    def add_cherry(at: int, tag: str) -> int:
        root = new_vertex(tag + ".root")
        edges_out.add(edge(at, root))
        add_leaves(root, n - 1, tag + ".leaf")
        return root

    ports: dict[str, tuple[int, int, int, int]] = {}
    for u in words:
        base = f"v:{u or 'e'}"
        w0 = new_vertex(base + ":w0")
        w1 = new_vertex(base + ":w1")
        w2 = new_vertex(base + ":w2")
        w3 = new_vertex(base + ":w3")
        edges_out |= {edge(w0, w1), edge(w1, w2), edge(w2, w3)}
        if u in members:
            for _ in range(n - 2):
                add_cherry(w0, base + ":mark")
        else:
            add_leaves(w0, n - 2, base + ":w0leaf")
        add_leaves(w3, n - 2, base + ":w3leaf")
        for v, role in ((w1, "w1pad"), (w2, "w2pad")):
            for _ in range(n - 3):
                add_cherry(v, f"{base}:{role}")
        ports[u] = (w0, w1, w2, w3)

    spine_len = {"a": 4, "b": 5}
    mark_at = {"a": 1, "b": 3}
    for u in words:
        for g in GENERATORS:
            v = reduce_word(u + g)
            if v not in wordset:
                continue
            base = f"e:{u or 'e'}>{g}"
            spine = [new_vertex(f"{base}:s{i}") for i in range(spine_len[g])]
            for i in range(len(spine) - 1):
                edges_out.add(edge(spine[i], spine[i + 1]))
            for i, s in enumerate(spine):
                if i == mark_at[g]:
                    for _ in range(n - 2):
                        add_cherry(s, f"{base}:mark")
                else:
                    add_leaves(s, n - 2, f"{base}:leaf")
            if g == "a":
                edges_out.add(edge(ports[u][2], spine[0]))
                edges_out.add(edge(spine[-1], ports[v][0]))
            else:
                edges_out.add(edge(ports[u][3], spine[0]))
                edges_out.add(edge(spine[-1], ports[v][1]))

    # flag port stubs whose off-window connection is missing
    for u in words:
        w0, w1, w2, w3 = ports[u]
        for g, port, suffix in (
            ("A", w0, "in-a"),
            ("B", w1, "in-b"),
            ("a", w2, "out-a"),
            ("b", w3, "out-b"),
        ):
            if reduce_word(u + g) not in wordset:
                tags[port] += ":rim"

    tree = UnrootedTree(len(tags), frozenset(edges_out))
    return WidgetCoding(tree, tuple(tags), tuple(words), members)


# --- decoding ---------------------------------------------------------------

# (internal path length, cherry position from this end) -> (generator,
# endpoint role at this end, endpoint role at the far end)
_TRACE_TABLE = {
    (5, 2): ("a", "src", "w1"),
    (5, 4): ("a", "tgt-w1", "w2"),
    (4, 2): ("a", "src", "w0"),
    (4, 3): ("a", "tgt-w0", "w2"),
    (6, 5): ("b", "src", "w1"),
    (6, 2): ("b", "tgt-w1", "w2"),
}


def widget_decode(t: UnrootedTree) -> DecodedCoding:
    """Recover the directed labeled ball and the marked set from a bare
    coding tree; raises NotACoding on any pattern mismatch."""
    n = max(t.degree(v) for v in range(t.n)) if t.n > 1 else 1
    if n < 3:
        raise NotACoding("no degree-3 structure present")
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    leaf_adjacent = {v for v in range(t.n) if any(u in leaves for u in t.adj[v])}

    def pendant_root(p: int, owner: int) -> bool:
        return all(y in leaves for y in t.adj[p] if y != owner)

    def pendant_kind(p: int, owner: int) -> str:
        kids = [y for y in t.adj[p] if y != owner]
        if not kids:
            return "leaf"
        if len(kids) == n - 1:
            return "cherry"
        return "other"

    claimed: dict[int, str] = {}

    def claim(v: int, role: str):
        if v in claimed:
            raise NotACoding(f"vertex {v} claimed twice ({claimed[v]} / {role})")
        claimed[v] = role

    def claim_pendant(p: int, owner: int, role: str):
        claim(p, role)
        for y in t.adj[p]:
            if y != owner:
                claim(y, role + ".leaf")

    # anchors: adjacent pairs with neither member adjacent to a leaf
    anchor_vertices = {
        v for v in range(t.n) if v not in leaves and v not in leaf_adjacent
    }
    pair_adj = {
        v: [u for u in t.adj[v] if u in anchor_vertices] for v in anchor_vertices
    }
    anchor_vertices = {v for v in anchor_vertices if pair_adj[v]}
    if not anchor_vertices:
        raise NotACoding("no vertex-widget anchor pattern found")

    # split anchor vertices into connected components (must be paths of 2/3)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for v in sorted(anchor_vertices):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in pair_adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(comp)

    widgets: list[dict] = []
    vertex_owner: dict[int, int] = {}
    for comp in comps:
        degs = {v: sum(1 for u in pair_adj[v] if u in comp) for v in comp}
        if len(comp) == 2:
            in_set = False
            ends = comp
        elif len(comp) == 3 and sorted(degs.values()) == [1, 1, 2]:
            in_set = True
            ends = [v for v in comp if degs[v] == 1]
        else:
            raise NotACoding("anchor component is not a 1- or 2-edge path")
        widget = {"in_set": in_set, "vertices": set(comp), "roles": {}}
        if in_set:
            middle = next(v for v in comp if degs[v] == 2)
            # w0 carries n-2 cherry pendants, w2 only its n-3 pads
            counts = {
                v: sum(
                    1
                    for p in t.adj[v]
                    if p not in widget["vertices"]
                    and pendant_root(p, v)
                    and pendant_kind(p, v) == "cherry"
                )
                for v in ends
            }
            ranked = sorted(ends, key=lambda v: counts[v])
            if counts[ranked[0]] == counts[ranked[1]]:
                raise NotACoding("marked widget lacks a unique cherry end")
            w0 = ranked[1]
            w2 = next(v for v in ends if v != w0)
            widget["roles"] = {"w0": w0, "w1": middle, "w2": w2}
            for p in t.adj[w0]:
                if p not in widget["vertices"] and pendant_root(p, w0):
                    if pendant_kind(p, w0) != "cherry":
                        raise NotACoding("marked w0 carries a non-cherry pendant")
                    claim_pendant(p, w0, "mark")
        for v in comp:
            claim(v, "anchor")
            vertex_owner[v] = len(widgets)
        widgets.append(widget)

    def walk(start: int, first: int):
        """Walk away from an anchor through non-pendant vertices until the
        next anchor vertex; returns (internals, end) or None on dead end."""
        internals = []
        prev, cur = start, first
        while True:
            if cur in anchor_vertices:
                return internals, cur
            internals.append(cur)
            nxt = [
                y
                for y in t.adj[cur]
                if y != prev and not (pendant_root(y, cur))
            ]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            if len(internals) > 8:
                return None

    traces = {}
    for widx, widget in enumerate(widgets):
        for v in sorted(widget["vertices"]):
            for first in t.adj[v]:
                if first in widget["vertices"]:
                    continue
                if pendant_root(first, v):
                    continue
                got = walk(v, first)
                if got is None:
                    raise NotACoding("trace from an anchor dead-ends mid-pattern")
                internals, end = got
                cherries = [
                    i + 1
                    for i, x in enumerate(internals)
                    if any(
                        pendant_root(p, x) and pendant_kind(p, x) == "cherry"
                        for p in t.adj[x]
                    )
                ]
                if len(cherries) != 1:
                    raise NotACoding("edge spine without a unique cherry mark")
                key = (len(internals), cherries[0])
                if key not in _TRACE_TABLE:
                    raise NotACoding(f"unrecognized spine signature {key}")
                traces[(v, first)] = (internals, end, _TRACE_TABLE[key])

    directed: dict[tuple[int, str], int] = {}
    consumed: set[tuple[int, int]] = set()
    for (v, first), (internals, end, (g, role_here, far_role)) in sorted(traces.items()):
        if (v, first) in consumed:
            continue
        back_key = (end, internals[-1] if internals else v)
        if back_key not in traces:
            raise NotACoding("one-sided spine trace")
        b_internals, b_end, (bg, b_role, _) = traces[back_key]
        if bg != g or b_end != v or list(reversed(b_internals)) != internals:
            raise NotACoding("inconsistent spine traces")
        if (role_here == "src") == (b_role == "src"):
            raise NotACoding("spine without exactly one source end")
        if role_here == "src":
            src_v, tgt_v, tgt_role = v, end, b_role
        else:
            src_v, tgt_v, tgt_role = end, v, role_here
        src_w = vertex_owner[src_v]
        tgt_w = vertex_owner[tgt_v]
        if tgt_role == "tgt-w0" and not widgets[tgt_w]["in_set"]:
            raise NotACoding("w0-terminated spine into an unmarked widget")
        for widget, vtx, role in (
            (widgets[src_w], src_v, "w2"),
            (widgets[tgt_w], tgt_v, "w0" if tgt_role == "tgt-w0" else "w1"),
        ):
            known = widget["roles"].get(role)
            if known is None:
                if vtx in widget["roles"].values():
                    raise NotACoding("conflicting port roles inside a widget")
                widget["roles"][role] = vtx
            elif known != vtx:
                raise NotACoding("conflicting port roles inside a widget")
        if (src_w, g) in directed:
            raise NotACoding("two outgoing edges with one label")
        directed[(src_w, g)] = tgt_w
        consumed.add((v, first))
        consumed.add(back_key)
        for x in internals:
            claim(x, f"spine:{g}")
            for p in t.adj[x]:
                if pendant_root(p, x) and p not in claimed and p not in anchor_vertices:
                    if p in vertex_owner:
                        continue
                    claim_pendant(p, x, f"spine:{g}.pendant")

    # pendants of anchor vertices (w0/w3 leaves, pads) and rim stubs
    for widx, widget in enumerate(widgets):
        for v in widget["vertices"]:
            for p in t.adj[v]:
                if p in claimed or p in anchor_vertices:
                    continue
                if pendant_root(p, v):
                    claim_pendant(p, v, "port-pendant")
                else:
                    raise NotACoding("untraceable non-pendant neighbor of an anchor")

    if set(claimed) != set(range(t.n)):
        raise NotACoding("stray vertices outside the widget pattern")

    # undirected widget graph; its unique center is the identity word
    k = len(widgets)
    wadj: list[set[int]] = [set() for _ in range(k)]
    for (src_w, g), tgt_w in directed.items():
        wadj[src_w].add(tgt_w)
        wadj[tgt_w].add(src_w)
    if k > 1 and any(not a for a in wadj):
        raise NotACoding("disconnected widget graph")

    def ecc(start: int) -> int:
        dist = {start: 0}
        queue = deque([start])
        far = 0
        while queue:
            x = queue.popleft()
            for y in wadj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    far = max(far, dist[y])
                    queue.append(y)
        if len(dist) != k:
            raise NotACoding("disconnected widget graph")
        return far

    eccs = [ecc(i) for i in range(k)]
    centers = [i for i in range(k) if eccs[i] == min(eccs)]
    if len(centers) != 1:
        raise NotACoding("recovered graph has no unique center")

    incoming: dict[int, list[tuple[int, str]]] = {i: [] for i in range(k)}
    for (src_w, g), tgt_w in directed.items():
        incoming[tgt_w].append((src_w, g))
    word_of: dict[int, str] = {centers[0]: ""}
    queue = deque([centers[0]])
    while queue:
        x = queue.popleft()
        neighbors = []
        for g in GENERATORS:
            y = directed.get((x, g))
            if y is not None:
                neighbors.append((y, reduce_word(word_of[x] + g)))
        for src_w, g in incoming[x]:
            neighbors.append((src_w, reduce_word(word_of[x] + INVERSE[g])))
        for y, w in neighbors:
            if y in word_of:
                if word_of[y] != w:
                    raise NotACoding("inconsistent word assignment")
            else:
                word_of[y] = w
                queue.append(y)
    if len(word_of) != k:
        raise NotACoding("unreachable widgets")

    words = frozenset(word_of.values())
    if len(words) != k:
        raise NotACoding("duplicate word assignment")
    members = frozenset(word_of[i] for i in range(k) if widgets[i]["in_set"])
    out_edges = frozenset(
        (word_of[s], g, word_of[tg]) for (s, g), tg in directed.items()
    )
    for u, g, v in out_edges:
        if reduce_word(u + g) != v:
            raise NotACoding("recovered edges disagree with the group structure")

    # soundness gate: the recovered data must code back to the same tree
    from arbor.canon import code_unrooted

    reencoded = encode_words(members, words, leaf_mark=n)
    if code_unrooted(reencoded.tree) != code_unrooted(t):
        raise NotACoding("tree differs from the canonical coding of its reading")
    return DecodedCoding(words, members, out_edges)


# --- text format -------------------------------------------------------------


def serialize_f2set(window: GroupWordWindow) -> str:
    ws = sorted(window.members, key=lambda w: (len(w), w))
    lines = [f"f2set {window.radius} {len(ws)}"]
    lines += [w if w else "e" for w in ws]
    return "\n".join(lines) + "\n"


def parse_f2set(text: str | bytes) -> GroupWordWindow:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln.strip() for ln in text.split("\n") if ln.strip() != ""]
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "f2set":
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    try:
        radius, count = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError("malformed radius/count", 1) from None
    if len(lines) != count + 1:
        raise FormatError(f"expected {count} words, got {len(lines) - 1}", len(lines))
    members = set()
    for i, ln in enumerate(lines[1:], start=2):
        w = "" if ln == "e" else ln
        if not is_reduced(w):
            raise FormatError(f"word {ln!r} is not reduced", i)
        members.add(w)
    try:
        return GroupWordWindow(radius, frozenset(members))
    except ValueError as exc:
        raise FormatError(str(exc), 1) from None
