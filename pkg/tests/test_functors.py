from dataclasses import replace
from itertools import product

import pytest

from bicat.core import Z2, bz2, chaotic, one, p2, two_group_z2, z2_cocycle
from bicat.errors import IllTyped, MalformedInput, UnknownCell
from bicat.fixtures import conjugation_g, f_lax
from bicat.functors import (
    FLAGS,
    LaxFunctor,
    LaxTransformation,
    Modification,
    classify,
    compose_lax_functors,
    compose_modifications,
    compose_transformations,
    constant_pseudofunctor,
    identity_functor,
    identity_modification,
    identity_transformation,
    validate_lax_functor,
    validate_lax_transformation,
    validate_modification,
)

from oracles import z2_add

EXPECTED_CLASS = {
    "F_collapse": set(FLAGS),
    "F_pick0": set(FLAGS),
    "F_lax": {"lax"},
    "F_strict_g": set(FLAGS),
    "Id_One": set(FLAGS),
    "Id_BZ2": set(FLAGS),
    "Id_two_group_w1": set(FLAGS),
    "Id_two_group_w0": set(FLAGS),
}


def test_fixture_functors_validate(functors):
    for name, F in functors.items():
        report = validate_lax_functor(F)
        assert report.ok, (name, report.text())
        assert set(classify(F)) == EXPECTED_CLASS[name], name
        assert report.info["classification"] == [f for f in FLAGS if f in EXPECTED_CLASS[name]]


def all_typed_functors(A, B):
    """Every well-typed table ``A -> B``; axioms are not imposed."""
    objs = A.sorted_objects()
    for images in product(B.sorted_objects(), repeat=len(objs)):
        om = dict(zip(objs, images))
        ones = sorted(A.one_cells)
        choices1 = [B.hom(om[A.src(f)], om[A.tgt(f)]) for f in ones]
        for ims1 in product(*choices1):
            m1 = dict(zip(ones, ims1))
            twos = sorted(A.two_cells)
            choices2 = [B.cells(m1[A.two_cells[a][0]], m1[A.two_cells[a][1]]) for a in twos]
            pairs = list(A.composable_pairs())
            choicesF2 = [B.cells(B.comp(m1[g], m1[f]), m1[A.comp(g, f)]) for g, f in pairs]
            choicesF0 = [B.cells(B.id1[om[x]], m1[A.id1[x]]) for x in objs]
            for ims2, f2, f0 in product(product(*choices2), product(*choicesF2), product(*choicesF0)):
                yield LaxFunctor(A, B, om, m1, dict(zip(twos, ims2)), dict(zip(pairs, f2)), dict(zip(objs, f0)))


def count_group_functors(omega):
    """Lax functors BZ2 -> two_group(Z2, Z2, omega), counted from the cocycle equations.

    phi on 1-cells, c(g, f) for F2 and d for F0, all in additive notation:
    phi(e) = e and phi multiplicative (2-cells are endomorphisms), and
    c(h,g) + c(hg,f) = omega(phi h, phi g, phi f) + c(g,f) + c(h,gf),
    d + c(e,f) = 0 = d + c(f,e).
    """
    G, mult = Z2.elements, Z2.mult
    count = 0
    for phi_vals in product(G, repeat=2):
        phi = dict(zip(G, phi_vals))
        if phi["e"] != "e" or any(mult[(phi[g], phi[f])] != phi[mult[(g, f)]] for g, f in product(G, repeat=2)):
            continue
        for cvals in product("ea", repeat=4):
            c = dict(zip(product(G, repeat=2), cvals))
            for d in "ea":
                ok = all(
                    z2_add(c[(h, g)], c[(mult[(h, g)], f)])
                    == z2_add(z2_add(omega[(phi[h], phi[g], phi[f])], c[(g, f)]), c[(h, mult[(g, f)])])
                    for h, g, f in product(G, repeat=3)
                )
                ok = ok and all(z2_add(d, c[("e", f)]) == "e" == z2_add(d, c[(f, "e")]) for f in G)
                count += ok
    return count


@pytest.mark.parametrize("nontrivial", [False, True])
def test_functors_into_two_groups_match_cocycle_count(nontrivial):
    found = [F for F in all_typed_functors(bz2(), two_group_z2(nontrivial)) if validate_lax_functor(F).ok]
    assert len(found) == count_group_functors(z2_cocycle(nontrivial)) > 0
    for F in found:
        assert "pseudo" in classify(F)


def test_functors_one_to_p2_match_monad_count():
    # a lax functor One -> P2 is an element x with x * x <= x and 0 <= x
    le = {("0", "0"), ("0", "1"), ("1", "1")}
    join = {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "1", ("1", "1"): "1"}
    expected = sum((join[(x, x)], x) in le and ("0", x) in le for x in "01")
    found = [F for F in all_typed_functors(one(), p2()) if validate_lax_functor(F).ok]
    assert len(found) == expected == 2
    assert sorted(len(classify(F)) for F in found) == [1, len(FLAGS)]


def test_all_typed_tables_one_to_p2_count():
    # F(1) in {0, 1}; F2 and F0 are forced when they exist
    assert len(list(all_typed_functors(one(), p2()))) == 2


def test_malformed_tables_raise():
    F = f_lax()
    with pytest.raises(MalformedInput):
        validate_lax_functor(replace(F, F0={}))
    with pytest.raises(MalformedInput):
        validate_lax_functor(replace(F, one_map={"0->0": "nope"}))


def test_identity_and_constant():
    B = two_group_z2(True)
    assert set(classify(identity_functor(B))) == set(FLAGS)
    K = constant_pseudofunctor(chaotic(2), B, "bullet")
    report = validate_lax_functor(K)
    assert report.ok and "pseudo" in classify(K)
    with pytest.raises(UnknownCell):
        constant_pseudofunctor(chaotic(2), B, "nowhere")


def test_composition_classification_contains_meet(functors):
    for F in functors.values():
        for G in functors.values():
            if G.src != F.tgt:
                continue
            GF = compose_lax_functors(G, F)
            assert validate_lax_functor(GF).ok
            assert set(classify(G)) & set(classify(F)) <= set(classify(GF))
    with pytest.raises(IllTyped):
        compose_lax_functors(functors["F_collapse"], functors["F_lax"])


def test_identity_functor_is_a_unit_for_composition(functors):
    F = functors["F_lax"]
    assert compose_lax_functors(identity_functor(F.tgt), F) == F
    assert compose_lax_functors(F, identity_functor(F.src)) == F


def test_transformations():
    alpha = conjugation_g()
    report = validate_lax_transformation(alpha)
    assert report.ok and report.info["strong"]
    assert alpha.invertible_components()
    square = compose_transformations(alpha, alpha)
    assert validate_lax_transformation(square).ok
    assert square.comp1 == {"bullet": "e"}
    for F in (alpha.src, f_lax()):
        assert validate_lax_transformation(identity_transformation(F)).ok


def test_transformations_with_unit_component_match_homomorphisms():
    # with component e the 2-cells c(f) form a transformation Id -> Id iff c: Z2 -> Z2 is a homomorphism
    F = identity_functor(two_group_z2(True))
    valid = 0
    for ce, cg in product("ea", repeat=2):
        alpha = LaxTransformation(F, F, {"bullet": "e"}, {"e": f"{ce}@e", "g": f"{cg}@g"})
        report = validate_lax_transformation(alpha)
        is_hom = ce == "e" and z2_add(cg, cg) == ce
        assert report.ok == is_hom, (ce, cg)
        if not report.ok:
            assert report.axioms() <= {"naturality", "lax-unity", "lax-naturality"}
        valid += report.ok
    assert valid == 2


def test_modifications():
    alpha = conjugation_g()
    assert validate_modification(identity_modification(alpha)).ok
    ident = identity_modification(alpha)
    assert validate_modification(compose_modifications(ident, ident)).ok
    # in the 2-group every 2-cell a@g is invertible; only the coefficient matters
    F = identity_functor(two_group_z2(True))
    t = identity_transformation(F)
    Gamma = Modification(t, t, {"bullet": "a@e"})
    report = validate_modification(Gamma)
    assert report.ok and report.info["invertible"]
