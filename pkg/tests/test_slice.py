import pytest

from bicat.core import check_derived_unitors, validate_bicategory
from bicat.errors import IllTyped, UnknownCell
from bicat.functors import FLAGS, classify, validate_lax_functor
from bicat.slice import change_of_slice, cone_check, forgetful, lax_slice, slice_identity_filler

from oracles import cells_between, raw_hom, whisker_left

NAMES = ["Id_One", "F_collapse", "F_pick0", "F_lax", "F_strict_g", "Id_BZ2", "Id_two_group_w1", "Id_two_group_w0"]


def brute_slice_counts(F, X):
    """Objects, 1-cells and 2-cells of ``F | X`` counted straight from the tables."""
    B, C = F.src, F.tgt
    objs = [(A, f) for A in sorted(B.objects) for f in raw_hom(C, F.obj_map[A], X)]
    ones = []
    for (A0, f0), (A1, f1) in [(s, t) for s in objs for t in objs]:
        for p in raw_hom(B, A0, A1):
            for theta in cells_between(C, f0, C.hcomp1[(f1, F.one_map[p])]):
                ones.append((A0, f0, A1, f1, p, theta))
    twos = 0
    for u in ones:
        for w in ones:
            if u[:4] != w[:4]:
                continue
            for alpha in cells_between(B, u[4], w[4]):
                if C.vcomp[(whisker_left(C, u[3], F.two_map[alpha]), u[5])] == w[5]:
                    twos += 1
    return len(objs), len(ones), twos


@pytest.mark.parametrize("name", NAMES)
def test_slices_validate_and_match_counts(functors, name):
    F = functors[name]
    for X in F.tgt.sorted_objects():
        S = lax_slice(F, X)
        D = S.bicat
        report = validate_bicategory(D)
        assert report.ok, (name, X, report.text())
        assert check_derived_unitors(D).ok
        assert (len(D.objects), len(D.one_cells), len(D.two_cells)) == brute_slice_counts(F, X)


@pytest.mark.parametrize("name", NAMES)
def test_forgetful_is_strict(functors, name):
    F = functors[name]
    for X in F.tgt.sorted_objects():
        U = forgetful(lax_slice(F, X))
        assert validate_lax_functor(U).ok
        assert set(classify(U)) == set(FLAGS)


@pytest.mark.parametrize("name", NAMES)
def test_change_of_slice_is_strict(functors, name):
    F = functors[name]
    C = F.tgt
    slices = {X: lax_slice(F, X) for X in C.objects}
    for u, (X, Y) in sorted(C.one_cells.items()):
        Fu = change_of_slice(F, u, slices[X], slices[Y])
        report = validate_lax_functor(Fu)
        assert report.ok, (name, u, report.text())
        assert set(classify(Fu)) == set(FLAGS)


def test_change_along_identity_fixes_objects(functors):
    F = functors["Id_BZ2"]
    Fu = change_of_slice(F, "e")
    assert all(Fu.obj_map[x] == x for x in Fu.src.objects)


def test_lax_slice_tags(functors):
    S = lax_slice(functors["F_lax"], "bullet")
    assert sorted(S.obj_tag) == ["(0,0)", "(0,1)"]
    x = S.obj_id("0", "1")
    assert S.structure(x) == "1"
    with pytest.raises(UnknownCell):
        S.obj_id("0", "nope")
    with pytest.raises(UnknownCell):
        lax_slice(functors["F_lax"], "nowhere")


def test_identity_filler_and_cone_check(functors):
    F = functors["F_lax"]
    C = F.tgt
    # r' at (0, 0): 0 => 0 . F(1) = 1 is the non-identity 0 <= 1
    assert slice_identity_filler(F, "0", "0") == "0<=1"
    assert cone_check(C, "0<=1", "0<=1", "1_1", "0")
    with pytest.raises(IllTyped):
        cone_check(C, "0<=1", "1_1", "1_1", "0")
