"""Pure-Python implementations of the hot kernels.

The compiled module arbor._speed mirrors these three functions exactly; the
active backend is picked in arbor._kernels.  Everything here works on plain
parent arrays and permutation tuples so both backends stay interchangeable.
"""

from __future__ import annotations

from itertools import permutations, product

BACKEND = "pure"


def rooted_code(parent, labels=None) -> bytes:
    """Canonical code of a rooted tree with optional vertex labels.

    code(v) = b"(" + decimal label + b"|" + children codes sorted ascending
    as byte strings + b")"; unlabeled vertices use label 0.
    """
    n = len(parent)
    if labels is None:
        labels = (0,) * n
    elif len(labels) != n:
        raise ValueError(f"labels cover {len(labels)} vertices, tree has {n}")
    kids = [[] for _ in range(n)]
    for v in range(1, n):
        kids[parent[v]].append(v)
    code: list[bytes] = [b""] * n
    for v in range(n - 1, -1, -1):
        parts = sorted(code[c] for c in kids[v])
        code[v] = b"(%d|" % labels[v] + b"".join(parts) + b")"
    return code[0]


def _subtree_codes(parent):
    n = len(parent)
    kids = [[] for _ in range(n)]
    for v in range(1, n):
        kids[parent[v]].append(v)
    code: list[bytes] = [b""] * n
    for v in range(n - 1, -1, -1):
        code[v] = b"(" + b"".join(sorted(code[c] for c in kids[v])) + b")"
    return kids, code


def rooted_auts(parent) -> list[tuple[int, ...]]:
    """All automorphisms (fixing the root) of a rooted parent-array tree,
    by backtracking over code-equal subtree matchings."""
    n = len(parent)
    kids, code = _subtree_codes(parent)
    memo: dict[tuple[int, int], list[list[tuple[int, int]]]] = {}

    def submaps(v, w):
        key = (v, w)
        got = memo.get(key)
        if got is not None:
            return got
        groups_v: dict[bytes, list[int]] = {}
        for c in kids[v]:
            groups_v.setdefault(code[c], []).append(c)
        groups_w: dict[bytes, list[int]] = {}
        for c in kids[w]:
            groups_w.setdefault(code[c], []).append(c)
        per_group = []
        for key_code in sorted(groups_v):
            gv = groups_v[key_code]
            gw = groups_w[key_code]
            opts = []
            for assignment in permutations(gw):
                for combo in product(*(submaps(gv[i], assignment[i]) for i in range(len(gv)))):
                    opts.append([p for part in combo for p in part])
            per_group.append(opts)
        out = []
        for sel in product(*per_group):
            merged = [(v, w)]
            for part in sel:
                merged.extend(part)
            out.append(merged)
        memo[key] = out
        return out

    result = []
    for pairs in submaps(0, 0):
        arr = [0] * n
        for s, d in pairs:
            arr[s] = d
        result.append(tuple(arr))
    return result


def conj_classes(perms) -> list[int]:
    """Partition a full permutation group (given as a list of tuples) into
    conjugacy classes; returns a class id per input index."""
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise ValueError("duplicate permutations")
    n = len(perms[0]) if perms else 0
    inverses = []
    for p in perms:
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        inverses.append(inv)
    ids = [-1] * len(perms)
    cid = 0
    for start in range(len(perms)):
        if ids[start] != -1:
            continue
        ids[start] = cid
        stack = [start]
        while stack:
            gi = stack.pop()
            g = perms[gi]
            for a, ainv in zip(perms, inverses):
                h = tuple(a[g[ainv[x]]] for x in range(n))
                hi = index.get(h)
                if hi is None:
                    raise ValueError("permutation list is not closed under conjugation")
                if ids[hi] == -1:
                    ids[hi] = cid
                    stack.append(hi)
        cid += 1
    return ids
