# cython: boundscheck=False, wraparound=False
"""Compiled twin of arbor._purekernels; same functions, same results."""

from itertools import permutations, product

from cpython.bytes cimport PyBytes_FromStringAndSize

BACKEND = "compiled"


def rooted_code(parent, labels=None):
    """Canonical code of a rooted tree with optional vertex labels."""
    cdef Py_ssize_t n = len(parent)
    cdef Py_ssize_t v
    if labels is None:
        labels = (0,) * n
    elif len(labels) != n:
        raise ValueError(f"labels cover {len(labels)} vertices, tree has {n}")
    kids = [[] for _ in range(n)]
    for v in range(1, n):
        kids[<Py_ssize_t> parent[v]].append(v)
    code = [b""] * n
    for v in range(n - 1, -1, -1):
        parts = sorted([code[c] for c in kids[v]])
        code[v] = b"(%d|" % labels[v] + b"".join(parts) + b")"
    return code[0]


def _subtree_codes(parent):
    cdef Py_ssize_t n = len(parent)
    cdef Py_ssize_t v
    kids = [[] for _ in range(n)]
    for v in range(1, n):
        kids[<Py_ssize_t> parent[v]].append(v)
    code = [b""] * n
    for v in range(n - 1, -1, -1):
        code[v] = b"(" + b"".join(sorted([code[c] for c in kids[v]])) + b")"
    return kids, code


def rooted_auts(parent):
    """All automorphisms (fixing the root) of a rooted parent-array tree."""
    cdef Py_ssize_t n = len(parent)
    kids, code = _subtree_codes(parent)
    memo = {}

    def submaps(v, w):
        key = (v, w)
        got = memo.get(key)
        if got is not None:
            return got
        groups_v = {}
        for c in kids[v]:
            groups_v.setdefault(code[c], []).append(c)
        groups_w = {}
        for c in kids[w]:
            groups_w.setdefault(code[c], []).append(c)
        per_group = []
        for key_code in sorted(groups_v):
            gv = groups_v[key_code]
            gw = groups_w[key_code]
            opts = []
            for assignment in permutations(gw):
                for combo in product(*[submaps(gv[i], assignment[i]) for i in range(len(gv))]):
                    merged = []
                    for part in combo:
                        merged.extend(part)
                    opts.append(merged)
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
    cdef Py_ssize_t s, d
    for pairs in submaps(0, 0):
        arr = [0] * n
        for s, d in pairs:
            arr[s] = d
        result.append(tuple(arr))
    return result


def conj_classes(perms):
    """Conjugacy-class ids for a full permutation group, via C buffers."""
    cdef Py_ssize_t m = len(perms)
    if m == 0:
        return []
    cdef Py_ssize_t n = len(perms[0])
    if n >= 256:
        from arbor import _purekernels
        return _purekernels.conj_classes(perms)
    cdef Py_ssize_t i, x, gi, hi
    index = {}
    cdef bytearray flat = bytearray(m * n)
    for i, p in enumerate(perms):
        if len(p) != n:
            raise ValueError("ragged permutation list")
        key = bytes(bytearray(p))
        if key in index:
            raise ValueError("duplicate permutations")
        index[key] = i
        for x in range(n):
            flat[i * n + x] = p[x]
    cdef unsigned char[::1] g = flat
    cdef bytearray flat_inv = bytearray(m * n)
    cdef unsigned char[::1] ginv = flat_inv
    for i in range(m):
        for x in range(n):
            ginv[i * n + g[i * n + x]] = <unsigned char> x
    cdef list ids = [-1] * m
    cdef list stack
    cdef int cid = 0
    cdef bytearray buf = bytearray(n)
    cdef unsigned char[::1] h = buf
    for start in range(m):
        if ids[start] != -1:
            continue
        ids[start] = cid
        stack = [start]
        while stack:
            gi = stack.pop()
            for i in range(m):
                for x in range(n):
                    h[x] = g[i * n + g[gi * n + ginv[i * n + x]]]
                got = index.get(bytes(buf))
                if got is None:
                    raise ValueError("permutation list is not closed under conjugation")
                hi = got
                if ids[hi] == -1:
                    ids[hi] = cid
                    stack.append(hi)
        cid += 1
    return ids
