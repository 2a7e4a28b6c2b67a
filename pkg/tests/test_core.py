from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicat.core import (
    JOIN2,
    Z2,
    Monoid,
    ValidationReport,
    Violation,
    bz2,
    chaotic,
    check_derived_unitors,
    check_well_formed,
    cyclic_group,
    deloop_monoid,
    encode,
    p2,
    two_group,
    two_group_z2,
    validate_bicategory,
    z2_cocycle,
)
from bicat.core.generators import Z2_COEFFS
from bicat.errors import IllTyped, MalformedInput, UnknownCell

from oracles import is_monoid, is_normalized, is_z2_3_cocycle

FLIP = {"e": "a", "a": "e"}


def test_accepted_fixtures_validate(accepted):
    for name, B in accepted.items():
        report = validate_bicategory(B)
        assert report.ok, (name, report.text())


def test_derived_unitors_hold(accepted):
    for name, B in accepted.items():
        assert check_derived_unitors(B).ok, name


def test_fixture_sizes():
    assert (len(chaotic(3).objects), len(chaotic(3).one_cells), len(chaotic(3).two_cells)) == (3, 9, 9)
    B = p2()
    assert sorted(B.two_cells) == ["0<=1", "1_0", "1_1"]
    assert B.comp("1", "0") == "1"
    assert B.v("1_1", "0<=1") == "0<=1"


def test_encode_is_injective_on_awkward_ids():
    parts = ["a", "a,b", "(a)", "a\\", "", ",", "\\,"]
    seen = {}
    for x, y in product(parts, repeat=2):
        seen.setdefault(encode(x, y), set()).add((x, y))
    assert all(len(v) == 1 for v in seen.values())
    assert encode("A", "f") == "(A,f)"


def _mutate_assoc(B, t):
    c, f = B.assoc[t].split("@")
    cell = f"{FLIP[c]}@{f}"
    return replace(B, assoc={**B.assoc, t: cell}, assoc_inv={**B.assoc_inv, t: cell})


def test_associator_mutations_match_cocycle_oracle():
    base = two_group_z2(True)
    for t in product(Z2.elements, repeat=3):
        omega = z2_cocycle(True)
        omega[t] = FLIP[omega[t]]
        expected = is_z2_3_cocycle(omega, Z2.mult, Z2.elements) and is_normalized(omega, "e")
        report = validate_bicategory(_mutate_assoc(base, t))
        assert report.ok == expected, t
        if not is_z2_3_cocycle(omega, Z2.mult, Z2.elements):
            assert report.axioms() & {"pentagon", "assoc-naturality"}, t


def test_every_z2_cochain_validates_iff_normalized_cocycle():
    # 2^8 normalized-or-not cochains; validator against the brute-force oracle
    triples = list(product(Z2.elements, repeat=3))
    for bits in range(1 << len(triples)):
        omega = {t: ("a" if bits >> i & 1 else "e") for i, t in enumerate(triples)}
        if not is_normalized(omega, "e"):
            continue
        B = two_group(Z2, Z2_COEFFS, omega)
        assert validate_bicategory(B).ok == is_z2_3_cocycle(omega, Z2.mult, Z2.elements), omega


def test_two_group_rejects_unnormalized_cochain():
    omega = z2_cocycle(False)
    omega[("e", "g", "g")] = "a"
    with pytest.raises(MalformedInput):
        two_group(Z2, Z2_COEFFS, omega)


def test_assoc_inverse_mismatch_is_reported():
    B = two_group_z2(True)
    t = ("g", "g", "g")
    M = replace(B, assoc_inv={**B.assoc_inv, t: "e@g"})
    assert "assoc-inverse" in validate_bicategory(M).axioms()


def test_ill_typed_unitor_is_malformed():
    P = p2()
    with pytest.raises(MalformedInput):
        check_well_formed(replace(P, lunit={**P.lunit, "0": "0<=1"}))


def test_partial_table_is_malformed():
    B = chaotic(2)
    vcomp = dict(B.vcomp)
    vcomp.pop(next(iter(vcomp)))
    with pytest.raises(MalformedInput):
        validate_bicategory(replace(B, vcomp=vcomp))


def test_dangling_reference_is_malformed():
    B = chaotic(2)
    with pytest.raises(MalformedInput):
        check_well_formed(replace(B, id1={**B.id1, "0": "missing"}))
    with pytest.raises(MalformedInput):
        check_well_formed(replace(B, one_cells={**B.one_cells, "x": ("0", "7")}))


def test_lookups_raise_typed_errors():
    B = chaotic(2)
    with pytest.raises(UnknownCell):
        B.comp("0->1", "nope")
    with pytest.raises(IllTyped):
        B.comp("0->1", "0->1")
    with pytest.raises(UnknownCell):
        B.identity("9")
    with pytest.raises(IllTyped):
        bz2().v("1_e", "1_g")


def test_inverse_and_isos():
    P = p2()
    assert P.inverse("0<=1") is None
    assert P.inverse("1_0") == "1_0"
    assert P.isos("0", "1") == ()
    B = two_group_z2(True)
    assert B.inverse("a@g") == "a@g"
    assert B.isos("g", "g") == ("a@g", "e@g")


def test_report_text_is_deterministic():
    r = ValidationReport.from_violations([Violation("pentagon", ("g", "g"), "a@e", "e@e")], n={"b", "a"})
    assert r.text("t") == r.text("t")
    assert "violation pentagon at (g, g): a@e != e@e" in r.text("t")
    assert "n: [a, b]" in r.text("t")


@st.composite
def binary_tables(draw, n):
    els = tuple(str(i) for i in range(n))
    mult = {(x, y): draw(st.sampled_from(els)) for x, y in product(els, repeat=2)}
    return els, mult


@settings(max_examples=60, deadline=None)
@given(binary_tables(3))
def test_monoid_constructor_matches_oracle(table):
    els, mult = table
    try:
        Monoid(els, mult, "0")
        accepted = True
    except MalformedInput:
        accepted = False
    assert accepted == is_monoid(els, mult, "0")


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=4))
def test_cyclic_deloopings_validate(n):
    assert validate_bicategory(deloop_monoid(cyclic_group(n))).ok


def test_poset_delooping_checks_order():
    with pytest.raises(MalformedInput):
        deloop_monoid(JOIN2, order=[("0", "1"), ("1", "0")])
    with pytest.raises(MalformedInput):
        deloop_monoid(Z2, order=[("e", "g")])  # g * g = e breaks monotonicity
