import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicat.calculus import (
    Assoc,
    Cell,
    HComp,
    Id,
    LUnit,
    LUnitInv,
    VComp,
    WhiskerLeft,
    WhiskerRight,
    boundary,
    check_coherence,
    evaluate,
    from_json,
    invert,
    is_constraint_only,
    seq,
    to_json,
)
from bicat.calculus import _words
from bicat.core import bz2, chaotic, one, p2, two_group_z2
from bicat.errors import IllTyped, UnknownCell

from oracles import compose_path, normalize, steps


def test_boundaries_and_values():
    B, P = bz2(), p2()
    assert boundary(B, Id("g")) == ("g", "g")
    assert boundary(P, LUnit("1")) == ("1", "1")
    assert evaluate(B, HComp(Id("g"), Id("g"))) == "1_e"
    assert evaluate(two_group_z2(True), Assoc("g", "g", "g")) == "a@g"
    assert evaluate(one(), VComp(LUnit("0->0"), LUnitInv("0->0"))) == "1_0->0"


def test_ill_typed_expressions():
    P = p2()
    with pytest.raises(IllTyped):
        evaluate(P, VComp(Cell("0<=1"), Cell("0<=1")))
    with pytest.raises(UnknownCell):
        evaluate(P, Cell("nope"))
    with pytest.raises(IllTyped):
        evaluate(chaotic(2), WhiskerLeft("0->1", Id("0->1")))


def test_seq_is_diagrammatic():
    P = p2()
    assert evaluate(P, seq(Cell("0<=1"), Id("1"))) == "0<=1"
    assert seq(Id("0"), Cell("0<=1")) == VComp(Cell("0<=1"), Id("0"))
    with pytest.raises(ValueError):
        seq()


def test_constraint_only_and_invert():
    B = two_group_z2(True)
    e = WhiskerRight(Assoc("g", "g", "g"), "g")
    assert is_constraint_only(e)
    assert not is_constraint_only(Cell("a@g"))
    assert evaluate(B, VComp(invert(e), e)) == B.id2[boundary(B, e)[0]]
    with pytest.raises(IllTyped):
        invert(Cell("a@g"))


def _expressions(one_cells):
    names = st.sampled_from(one_cells)
    leaves = st.one_of(
        names.map(Id),
        names.map(LUnit),
        st.builds(Assoc, names, names, names),
        st.sampled_from(["x", "y"]).map(Cell),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(VComp, kids, kids),
            st.builds(HComp, kids, kids),
            st.builds(WhiskerLeft, names, kids),
            st.builds(WhiskerRight, kids, names),
        ),
        max_leaves=8,
    )


@settings(max_examples=200, deadline=None)
@given(_expressions(["f", "g,h", "(x)"]))
def test_json_round_trip(e):
    assert from_json(to_json(e)) == e


def test_from_json_rejects_garbage():
    for bad in ([], ["vcomp", ["id2", "f"]], ["nope", "f"], "f", ["a", "f"]):
        with pytest.raises(IllTyped):
            from_json(bad)


@pytest.mark.parametrize("name", ["One", "BZ2", "P2", "two_group_w0", "two_group_w1", "chaotic(2)"])
def test_coherence_smoke(accepted, name):
    report = check_coherence(accepted[name], max_length=4)
    assert report.ok, report.text()
    assert report.info["edges_checked"] > 0


def test_concrete_boundaries_are_not_enough():
    # a(g,g,g) and 1_g share a concrete boundary in the nontrivial 2-group but differ
    B = two_group_z2(True)
    assert boundary(B, Assoc("g", "g", "g")) == boundary(B, Id("g"))
    assert evaluate(B, Assoc("g", "g", "g")) != evaluate(B, Id("g"))


def _all_words(B, max_length):
    units = set(B.id1.values())
    frontier = [(f,) for f in sorted(B.one_cells)]
    words = set()
    for _ in range(max_length):
        for s in frontier:
            words |= _words(s, units)
        frontier = [(g,) + s for s in frontier for g in sorted(B.one_cells) if (g, s[0]) in B.hcomp1]
    return units, sorted(words, key=repr)


@pytest.mark.parametrize("name", ["One", "BZ2", "P2", "two_group_w1", "chaotic(2)"])
def test_normalization_strategies_agree(accepted, name):
    """Leftmost and rightmost reduction to normal form give the same 2-cell."""
    B = accepted[name]
    units, words = _all_words(B, 4)
    for t in words:
        n1, p1 = normalize(B, t, units, lambda opts: opts[0])
        n2, p2_ = normalize(B, t, units, lambda opts: opts[-1])
        assert n1 == n2
        assert evaluate(B, compose_path(B, t, p1)) == evaluate(B, compose_path(B, t, p2_)), t


@pytest.mark.parametrize("name", ["BZ2", "two_group_w1", "chaotic(3)"])
def test_random_detours_agree(accepted, name):
    """A random walk followed by normalization equals direct normalization."""
    B = accepted[name]
    units, words = _all_words(B, 4)
    rng = random.Random(7)
    for t in rng.sample(words, min(len(words), 150)):
        walk, here = [], t
        for _ in range(rng.randrange(1, 6)):
            options = steps(B, here, units)
            if not options:
                break
            here, e = rng.choice(options)
            walk.append(e)
        n1, direct = normalize(B, t, units, lambda opts: opts[0])
        n2, rest = normalize(B, here, units, lambda opts: rng.choice(opts))
        assert n1 == n2
        assert evaluate(B, compose_path(B, t, walk + rest)) == evaluate(B, compose_path(B, t, direct)), t


def test_both_checks_catch_a_broken_associator():
    from dataclasses import replace

    B = two_group_z2(True)
    t = ("e", "g", "g")
    B = replace(B, assoc={**B.assoc, t: "a@e"}, assoc_inv={**B.assoc_inv, t: "a@e"})
    assert not check_coherence(B).ok
    units, words = _all_words(B, 4)
    disagree = 0
    for w in words:
        _, p1 = normalize(B, w, units, lambda opts: opts[0])
        _, p2_ = normalize(B, w, units, lambda opts: opts[-1])
        disagree += evaluate(B, compose_path(B, w, p1)) != evaluate(B, compose_path(B, w, p2_))
    assert disagree > 0
