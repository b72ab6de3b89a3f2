import random

import pytest
from hypothesis import given, strategies as st

from arbor import bruteforce, gen
from arbor.canon import (
    code_rooted,
    code_unrooted,
    iso_witness,
    verify_rooted_witness,
    verify_unrooted_witness,
)
from arbor.trees import RootedTree, UnrootedTree


def test_code_examples():
    assert code_rooted(RootedTree((-1,))) == b"(0|)"
    assert code_rooted(RootedTree((-1, 0, 0))) == b"(0|(0|)(0|))"
    path3 = code_rooted(RootedTree((-1, 0, 1)))
    cherry = code_rooted(RootedTree((-1, 0, 0)))
    assert path3 != cherry


def test_code_unrooted_examples():
    assert code_unrooted(UnrootedTree(1, frozenset())) == b"V:(0|)"
    assert code_unrooted(UnrootedTree(2, frozenset({(0, 1)}))) == b"E:(0|)(0|)"
    path5 = UnrootedTree(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4)}))
    star5 = UnrootedTree(5, frozenset({(0, 1), (0, 2), (0, 3), (0, 4)}))
    assert code_unrooted(path5) != code_unrooted(star5)


def test_all_three_unrooted_5_vertex_classes_distinct():
    trees = [t for t in gen.all_free_trees(5) if t.n == 5]
    assert len(trees) == 3
    codes = {code_unrooted(t) for t in trees}
    assert len(codes) == 3
    for t1 in trees:
        for t2 in trees:
            assert (t1 is t2) == bruteforce.unrooted_iso(t1, t2)


@given(st.integers(0, 10_000))
def test_code_invariant_under_presentation(seed):
    rng = random.Random(seed)
    t = gen.random_rooted_tree(rng, 9)
    assert code_rooted(gen.reshuffled_copy(t, rng)) == code_rooted(t)


def test_label_sensitivity():
    rng = random.Random(17)
    for _ in range(100):
        t = gen.random_rooted_tree(rng, 8)
        labels = [rng.randrange(5) for _ in range(t.n)]
        base = code_rooted(t, labels)
        v = rng.randrange(t.n)
        changed = list(labels)
        changed[v] += 1
        assert code_rooted(t, changed) != base


def test_labels_must_cover_all_vertices():
    with pytest.raises(ValueError):
        code_rooted(RootedTree((-1, 0)), [1])


def test_iso_witness_identity_and_sizes():
    t = RootedTree((-1, 0, 0, 1))
    w = iso_witness(t, t)
    assert w is not None and verify_rooted_witness(t, t, w)
    path3 = UnrootedTree(3, frozenset({(0, 1), (1, 2)}))
    star4 = UnrootedTree(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    assert iso_witness(path3, star4) is None


def test_iso_witness_relabeled_random_trees():
    rng = random.Random(23)
    for _ in range(100):
        t = gen.random_unrooted_tree(rng, 7, min_n=7)
        t2 = gen.random_unrooted_tree(rng, 7, min_n=7)
        w = iso_witness(t, t2)
        if w is None:
            assert not bruteforce.unrooted_iso(t, t2)
        else:
            assert verify_unrooted_witness(t, t2, w)
    # guaranteed-isomorphic pair via relabeling
    for _ in range(50):
        t = gen.random_unrooted_tree(rng, 7)
        relabel = list(range(t.n))
        rng.shuffle(relabel)
        t2 = UnrootedTree(
            t.n,
            frozenset(
                (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
                for a, b in t.edges
            ),
        )
        w = iso_witness(t, t2)
        assert w is not None and verify_unrooted_witness(t, t2, w)


def test_iso_witness_rooted_reshuffles():
    rng = random.Random(29)
    for _ in range(100):
        t = gen.random_rooted_tree(rng, 8)
        t2 = gen.reshuffled_copy(t, rng)
        w = iso_witness(t, t2)
        assert w is not None and verify_rooted_witness(t, t2, w)


def test_iso_witness_mixed_kinds_rejected():
    with pytest.raises(TypeError):
        iso_witness(RootedTree((-1,)), UnrootedTree(1, frozenset()))
