"""Independent brute-force oracles.

Everything here deliberately avoids the canonical-code machinery: rooted
isomorphism is decided by backtracking child matching, unrooted isomorphism
by trying every root on one side, and automorphism groups by filtering all
n! permutations.  These are the reference answers the fast paths are tested
against, so keep them dumb.
"""

from __future__ import annotations

from itertools import permutations

from arbor.trees import RootedTree, UnrootedTree, edge


def _sub_sizes(t: RootedTree) -> list[int]:
    size = [1] * t.n
    for v in range(t.n - 1, 0, -1):
        size[t.parent[v]] += size[v]
    return size


def rooted_iso(t1: RootedTree, t2: RootedTree) -> bool:
    """Backtracking matching of children, memoized per vertex pair."""
    if t1.n != t2.n:
        return False
    size1, size2 = _sub_sizes(t1), _sub_sizes(t2)
    memo: dict[tuple[int, int], bool] = {}

    def feasible(v, w):
        key = (v, w)
        got = memo.get(key)
        if got is not None:
            return got
        kids1, kids2 = t1.children[v], t2.children[w]
        ok = False
        if len(kids1) == len(kids2) and size1[v] == size2[w]:
            used = [False] * len(kids2)

            def assign(i):
                if i == len(kids1):
                    return True
                for j in range(len(kids2)):
                    if not used[j] and feasible(kids1[i], kids2[j]):
                        used[j] = True
                        if assign(i + 1):
                            used[j] = False
                            return True
                        used[j] = False
                return False

            ok = assign(0)
        memo[key] = ok
        return ok

    return feasible(0, 0)


def _rooted_view_iso(t1: UnrootedTree, r1: int, t2: UnrootedTree, r2: int) -> bool:
    memo: dict[tuple[int, int, int, int], bool] = {}

    def feasible(v, pv, w, pw):
        key = (v, pv, w, pw)
        got = memo.get(key)
        if got is not None:
            return got
        kids1 = [u for u in t1.adj[v] if u != pv]
        kids2 = [u for u in t2.adj[w] if u != pw]
        ok = False
        if len(kids1) == len(kids2):
            used = [False] * len(kids2)

            def assign(i):
                if i == len(kids1):
                    return True
                for j in range(len(kids2)):
                    if not used[j] and feasible(kids1[i], v, kids2[j], w):
                        used[j] = True
                        if assign(i + 1):
                            used[j] = False
                            return True
                        used[j] = False
                return False

            ok = assign(0)
        memo[key] = ok
        return ok

    return feasible(r1, -1, r2, -1)


def unrooted_iso(t1: UnrootedTree, t2: UnrootedTree) -> bool:
    """Fix an arbitrary root in t1 and try every root in t2."""
    if t1.n != t2.n:
        return False
    return any(_rooted_view_iso(t1, 0, t2, r2) for r2 in range(t2.n))


def iso(t1, t2) -> bool:
    if isinstance(t1, RootedTree) and isinstance(t2, RootedTree):
        return rooted_iso(t1, t2)
    if isinstance(t1, UnrootedTree) and isinstance(t2, UnrootedTree):
        return unrooted_iso(t1, t2)
    raise TypeError("need two trees of the same kind")


def all_aut_perms_by_filter(tree) -> list[tuple[int, ...]]:
    """Every permutation of 0..n-1 that preserves the structure; the count
    oracle for the backtracking enumerator.  Factorial: keep n small."""
    n = tree.n
    out = []
    if isinstance(tree, RootedTree):
        for p in permutations(range(n)):
            if p[0] != 0:
                continue
            if all(p[tree.parent[v]] == tree.parent[p[v]] for v in range(1, n)):
                out.append(p)
    else:
        for p in permutations(range(n)):
            if all(edge(p[u], p[v]) in tree.edges for u, v in tree.edges):
                out.append(p)
    return out
