import random

import pytest

from arbor import bruteforce, gen
from arbor.autom import (
    compose,
    conj_oracle,
    conjugate,
    cycle_type,
    enumerate_aut,
    identity_aut,
    inverse,
    orbits,
    parse_aut,
    serialize_aut,
    validate_aut,
)
from arbor.trees import FormatError, RootedTree, UnrootedTree

EDGE = UnrootedTree(2, frozenset({(0, 1)}))
STAR3 = UnrootedTree(4, frozenset({(0, 1), (0, 2), (0, 3)}))


def test_validate_examples():
    assert validate_aut(EDGE, (1, 0)).perm == (1, 0)
    assert validate_aut(STAR3, (0, 1, 2, 3)).is_identity()
    with pytest.raises(ValueError, match="root moved"):
        validate_aut(RootedTree((-1, 0, 1)), (1, 0, 2))
    with pytest.raises(ValueError, match="bijection"):
        validate_aut(EDGE, (0, 0))
    with pytest.raises(ValueError, match="not preserved"):
        validate_aut(UnrootedTree(3, frozenset({(0, 1), (1, 2)})), (1, 0, 2))


def test_group_laws():
    rng = random.Random(1)
    for _ in range(50):
        t = gen.random_unrooted_tree(rng, 7)
        G = enumerate_aut(t)
        a = rng.choice(G)
        assert compose(a, identity_aut(t)).perm == a.perm
        assert compose(inverse(a), a).is_identity()
    swap = validate_aut(EDGE, (1, 0))
    assert compose(swap, swap).is_identity()


def test_orbit_examples():
    t = RootedTree((-1, 0, 0))
    ident = identity_aut(t)
    assert orbits(ident) == ((0,), (1,), (2,))
    swap = validate_aut(STAR3, (0, 2, 1, 3))
    assert orbits(swap) == ((0,), (1, 2), (3,))
    cyc = validate_aut(STAR3, (0, 2, 3, 1))
    assert orbits(cyc) == ((0,), (1, 2, 3))


def test_cycle_type_examples():
    t = RootedTree((-1, 0, 0))
    assert cycle_type(identity_aut(t)) == ((1, 3),)
    cyc = validate_aut(STAR3, (0, 2, 3, 1))
    assert cycle_type(cyc) == ((1, 1), (3, 1))


def test_enumerate_counts():
    assert len(enumerate_aut(EDGE)) == 2
    assert len(enumerate_aut(STAR3)) == 6
    assert len(enumerate_aut(RootedTree((-1, 0, 1)))) == 1
    for t in gen.all_rooted_trees(7):
        assert len(enumerate_aut(t)) == len(bruteforce.all_aut_perms_by_filter(t))
    for t in gen.all_free_trees(7):
        enum = sorted(a.perm for a in enumerate_aut(t))
        assert enum == sorted(bruteforce.all_aut_perms_by_filter(t))


def test_enumerate_closure():
    for t in gen.all_free_trees(6):
        G = enumerate_aut(t)
        perms = {g.perm for g in G}
        for a in G:
            assert inverse(a).perm in perms
            for b in G:
                assert compose(a, b).perm in perms


def test_enumerate_bound():
    path11 = RootedTree(tuple([-1] + list(range(10))))
    with pytest.raises(ValueError, match="size bound"):
        enumerate_aut(path11)
    assert len(enumerate_aut(path11, bound=11)) == 1


def test_conj_oracle_examples():
    swap12 = validate_aut(STAR3, (0, 2, 1, 3))
    swap23 = validate_aut(STAR3, (0, 1, 3, 2))
    cyc = validate_aut(STAR3, (0, 2, 3, 1))
    assert conj_oracle(swap12, swap12) is not None
    alpha = conj_oracle(swap12, swap23)
    assert alpha is not None
    assert conjugate(alpha, swap12).perm == swap23.perm
    assert conj_oracle(swap12, cyc) is None


def test_cycle_type_conjugation_invariant():
    rng = random.Random(9)
    for _ in range(100):
        t = gen.random_unrooted_tree(rng, 8)
        G = enumerate_aut(t)
        phi, alpha = rng.choice(G), rng.choice(G)
        assert cycle_type(conjugate(alpha, phi)) == cycle_type(phi)


def test_aut_io():
    text = serialize_aut((0, 2, 1, 3))
    assert text == "aut 4\n0 2 1 3\n"
    assert parse_aut(text) == (0, 2, 1, 3)
    with pytest.raises(FormatError):
        parse_aut("aut 3\n0 1")
    with pytest.raises(FormatError):
        parse_aut("perm 3\n0 1 2")
