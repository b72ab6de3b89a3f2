import random

import pytest

from arbor import canon, gen
from arbor.reductions.widgets import (
    INVERSE,
    GroupWordWindow,
    NotACoding,
    ball_words,
    encode_words,
    is_reduced,
    parse_f2set,
    reduce_word,
    serialize_f2set,
    translate,
    widget_decode,
    widget_encode,
)
from arbor.trees import FormatError


def test_word_utilities():
    assert reduce_word("aA") == ""
    assert reduce_word("abBA") == ""
    assert reduce_word("abb") == "abb"
    assert is_reduced("aB") and not is_reduced("aAb")
    assert len(ball_words(0)) == 1
    assert len(ball_words(1)) == 5
    assert len(ball_words(2)) == 17
    assert translate("a", {"A"}) == frozenset({""})


def test_window_validation():
    GroupWordWindow(2, frozenset({"ab", ""}))
    with pytest.raises(ValueError):
        GroupWordWindow(1, frozenset({"ab"}))
    with pytest.raises(ValueError):
        GroupWordWindow(2, frozenset({"aA"}))


def test_frozen_widget_sizes():
    assert encode_words(set(), {""}).tree.n == 6
    assert encode_words({""}, {""}).tree.n == 8
    assert encode_words(set(), {"", "a"}).tree.n == 22  # 6 + 6 + 10
    assert encode_words(set(), {"", "b"}).tree.n == 24  # 6 + 6 + 12


def test_membership_is_local():
    empty = widget_encode(GroupWordWindow(1, frozenset()))
    marked = widget_encode(GroupWordWindow(1, frozenset({""})))
    assert marked.tree.n == empty.tree.n + 2
    assert widget_decode(empty.tree).members == frozenset()
    assert widget_decode(marked.tree).members == frozenset({""})


def test_degrees_one_or_three_off_rim():
    rng = random.Random(61)
    for _ in range(20):
        words = ball_words(2)
        members = frozenset(w for w in words if rng.random() < 0.5)
        coding = widget_encode(GroupWordWindow(2, members))
        rim = coding.rim_vertices()
        for v in range(coding.tree.n):
            if v not in rim:
                assert coding.tree.degree(v) in (1, 3)
            else:
                assert coding.tree.degree(v) == 2


def test_roundtrip_radius_1_and_2():
    rng = random.Random(67)
    for radius in (1, 2):
        words = ball_words(radius)
        for _ in range(20):
            members = frozenset(w for w in words if rng.random() < 0.4)
            coding = widget_encode(GroupWordWindow(radius, members))
            decoded = widget_decode(coding.tree)
            assert decoded.members == members
            assert decoded.words == frozenset(words)
            for u, g, v in decoded.edges:
                assert reduce_word(u + g) == v


def test_roundtrip_examples():
    assert widget_decode(widget_encode(GroupWordWindow(2, frozenset())).tree).members == frozenset()
    s = frozenset({"a", "B"})
    assert widget_decode(widget_encode(GroupWordWindow(2, s)).tree).members == s


def test_decoder_rejects_random_trees():
    rng = random.Random(71)
    for _ in range(100):
        t = gen.random_unrooted_tree(rng, 12, min_n=12)
        with pytest.raises(NotACoding):
            widget_decode(t)


def test_decoder_rejects_tampered_coding():
    coding = widget_encode(GroupWordWindow(1, frozenset({"a"})))
    t = coding.tree
    # graft an extra lean onto some internal vertex: degree pattern breaks
    from arbor.trees import UnrootedTree, edge

    internal = next(v for v in range(t.n) if t.degree(v) == 3)
    tampered = UnrootedTree(t.n + 1, t.edges | {edge(internal, t.n)})
    with pytest.raises(NotACoding):
        widget_decode(tampered)


def test_generator_translation_equivariance():
    rng = random.Random(73)
    words = ball_words(2)
    interior = ball_words(1)
    for _ in range(10):
        members = frozenset(w for w in words if rng.random() < 0.5)
        for g in "abAB":
            left = encode_words(translate(g, members) & set(interior), interior)
            shifted = frozenset(reduce_word(INVERSE[g] + w) for w in interior)
            right = encode_words(members & shifted, shifted)
            assert canon.code_unrooted(left.tree) == canon.code_unrooted(right.tree)


def test_general_leaf_mark():
    for n in (4, 5):
        coding = widget_encode(GroupWordWindow(1, frozenset({"", "b"})), leaf_mark=n)
        rim = coding.rim_vertices()
        for v in range(coding.tree.n):
            if v not in rim:
                assert coding.tree.degree(v) in (1, n)
        decoded = widget_decode(coding.tree)
        assert decoded.members == frozenset({"", "b"})
    with pytest.raises(ValueError):
        widget_encode(GroupWordWindow(1, frozenset()), leaf_mark=2)


def test_f2set_io():
    w = GroupWordWindow(2, frozenset({"", "a", "bA"}))
    text = serialize_f2set(w)
    assert text.splitlines()[0] == "f2set 2 3"
    assert "e" in text.splitlines()
    assert parse_f2set(text) == w
    with pytest.raises(FormatError):
        parse_f2set("f2set 2 1\naA")
    with pytest.raises(FormatError):
        parse_f2set("f2set 1 2\ne")
