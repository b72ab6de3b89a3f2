import random

import pytest

from arbor.autom import enumerate_aut
from arbor.reductions.zline import (
    IntegerWindow,
    parse_zset,
    serialize_zset,
    tz_build,
    tz_decode,
    tz_phi,
    tz_site_map,
)
from arbor.trees import FormatError


def test_window_shape():
    zw = tz_build(-2, 2)
    # 3 spine vertices per unit plus the final site
    assert len(zw.spine) == 13
    assert zw.tree.n == 9 * 4 + 4
    # each site spine vertex carries the Y: stem of degree 3 forking to two leaves
    for site in zw.sites():
        mid = zw.site_mid[site - zw.lo]
        left, right = zw.site_leaves[site - zw.lo]
        assert zw.tree.degree(mid) == 3
        assert zw.tree.degree(left) == 1 and zw.tree.degree(right) == 1


def test_empty_set_is_identity():
    zw = tz_build(-2, 2)
    assert tz_phi(zw, frozenset()).is_identity()


def test_singleton_swaps_exactly_its_site():
    zw = tz_build(-2, 2)
    phi = tz_phi(zw, {0})
    moved = sorted(v for v in range(zw.tree.n) if phi.perm[v] != v)
    assert moved == sorted(zw.site_leaves[2])


def test_phi_is_involution():
    rng = random.Random(79)
    zw = tz_build(-3, 3)
    for _ in range(20):
        members = frozenset(x for x in range(-3, 4) if rng.random() < 0.5)
        phi = tz_phi(zw, members)
        from arbor.autom import compose

        assert compose(phi, phi).is_identity()


def test_roundtrip_random_windows():
    rng = random.Random(83)
    for _ in range(100):
        zw = tz_build(-4, 4)
        members = frozenset(x for x in range(-4, 5) if rng.random() < 0.5)
        window = IntegerWindow(-4, 4, members)
        assert tz_decode(zw, tz_phi(zw, window)) == window


def test_decode_rejects_foreign_automorphism():
    zw1, zw2 = tz_build(0, 2), tz_build(0, 3)
    phi = tz_phi(zw2, {1})
    with pytest.raises(ValueError):
        tz_decode(zw1, phi)


def test_window_automorphisms_are_exactly_the_y_swaps():
    zw = tz_build(0, 1)
    G = enumerate_aut(zw.tree, bound=zw.tree.n)
    assert len(G) == 4
    decoded = {tuple(sorted(tz_decode(zw, g).members)) for g in G}
    assert decoded == {(), (0,), (1,), (0, 1)}


def test_shift_law_on_overlap():
    rng = random.Random(89)
    for _ in range(30):
        zw1, zw2 = tz_build(-3, 3), tz_build(-2, 4)
        members = frozenset(x for x in range(-3, 4) if rng.random() < 0.5)
        phi = tz_phi(zw1, members)
        psi = tz_phi(zw2, frozenset(x + 1 for x in members))
        smap = tz_site_map(zw1, zw2, 1)
        assert smap
        for v, sv in smap.items():
            img = phi.perm[v]
            if img in smap:
                assert smap[img] == psi.perm[sv]


def test_site_map_preserves_structure():
    zw1, zw2 = tz_build(0, 3), tz_build(1, 4)
    smap = tz_site_map(zw1, zw2, 1)
    for u, v in zw1.tree.edges:
        if u in smap and v in smap:
            assert zw2.tree.has_edge(smap[u], smap[v])


def test_zset_io():
    w = IntegerWindow(-4, 4, frozenset({-2, 0, 3}))
    text = serialize_zset(w)
    assert text.splitlines()[0] == "zset -4 4 3"
    assert parse_zset(text) == w
    with pytest.raises(FormatError):
        parse_zset("zset 0 2 1\n7")
    with pytest.raises(FormatError):
        parse_zset("zset 2 0 0")
