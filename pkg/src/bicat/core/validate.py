"""Well-formedness checks and the exhaustive axiom validator for finite bicategories."""

from __future__ import annotations

from ..errors import MalformedInput
from .model import ValidationReport, Violation

AXIOM_ORDER = (
    "vcomp-associativity",
    "vcomp-unit",
    "hcomp-identity",
    "interchange",
    "assoc-inverse",
    "lunit-inverse",
    "runit-inverse",
    "assoc-naturality",
    "lunit-naturality",
    "runit-naturality",
    "unity",
    "pentagon",
)


def check_well_formed(B):
    """Raise :class:`MalformedInput` unless every table is total, typed and closed.

    Table domains must be exactly the composable tuples: a missing entry is a
    partial table and an extra entry is a dangling reference.
    """
    objs = set(B.objects)
    if len(objs) != len(tuple(B.objects)):
        raise MalformedInput("duplicate object ids")
    for x in objs:
        _nonempty(x, "object")
    for f, st in B.one_cells.items():
        _nonempty(f, "1-cell")
        if len(st) != 2 or st[0] not in objs or st[1] not in objs:
            raise MalformedInput(f"1-cell {f!r} has dangling endpoints {st!r}")
    for a, st in B.two_cells.items():
        _nonempty(a, "2-cell")
        if len(st) != 2 or st[0] not in B.one_cells or st[1] not in B.one_cells:
            raise MalformedInput(f"2-cell {a!r} has dangling boundary {st!r}")
        if B.one_cells[st[0]] != B.one_cells[st[1]]:
            raise MalformedInput(f"2-cell {a!r} joins 1-cells in different hom-categories")

    _exact_keys(B.id1, objs, "id1")
    for x, f in B.id1.items():
        _typed1(B, f, (x, x), f"id1[{x}]")
    _exact_keys(B.id2, set(B.one_cells), "id2")
    for f, a in B.id2.items():
        _typed2(B, a, (f, f), f"id2[{f}]")

    vkeys = {(b, a) for a, (s, t) in B.two_cells.items() for b in B.out_cells(t)}
    _exact_keys(B.vcomp, vkeys, "vcomp")
    for (b, a), res in B.vcomp.items():
        _typed2(B, res, (B.two_cells[a][0], B.two_cells[b][1]), f"vcomp[{b}, {a}]")

    hkeys1 = set(B.composable_pairs())
    _exact_keys(B.hcomp1, hkeys1, "hcomp1")
    for (g, f), res in B.hcomp1.items():
        _typed1(B, res, (B.src(f), B.tgt(g)), f"hcomp1[{g}, {f}]")

    hkeys2 = set()
    for g, f in hkeys1:
        for a in _cells_in_hom_of(B, f):
            for b in _cells_in_hom_of(B, g):
                hkeys2.add((b, a))
    _exact_keys(B.hcomp2, hkeys2, "hcomp2")
    for (b, a), res in B.hcomp2.items():
        (f0, f1), (g0, g1) = B.two_cells[a], B.two_cells[b]
        _typed2(B, res, (B.hcomp1[(g0, f0)], B.hcomp1[(g1, f1)]), f"hcomp2[{b}, {a}]")

    triples = set(B.composable_triples())
    _exact_keys(B.assoc, triples, "assoc")
    _exact_keys(B.assoc_inv, triples, "assoc_inv")
    for h, g, f in triples:
        left = B.hcomp1[(B.hcomp1[(h, g)], f)]
        right = B.hcomp1[(h, B.hcomp1[(g, f)])]
        _typed2(B, B.assoc[(h, g, f)], (left, right), f"assoc[{h}, {g}, {f}]")
        _typed2(B, B.assoc_inv[(h, g, f)], (right, left), f"assoc_inv[{h}, {g}, {f}]")

    ones = set(B.one_cells)
    for table, label in ((B.lunit, "lunit"), (B.lunit_inv, "lunit_inv"), (B.runit, "runit"), (B.runit_inv, "runit_inv")):
        _exact_keys(table, ones, label)
    for f, (x, y) in B.one_cells.items():
        lf = B.hcomp1[(B.id1[y], f)]
        rf = B.hcomp1[(f, B.id1[x])]
        _typed2(B, B.lunit[f], (lf, f), f"lunit[{f}]")
        _typed2(B, B.lunit_inv[f], (f, lf), f"lunit_inv[{f}]")
        _typed2(B, B.runit[f], (rf, f), f"runit[{f}]")
        _typed2(B, B.runit_inv[f], (f, rf), f"runit_inv[{f}]")


def _nonempty(name, kind):
    if not isinstance(name, str) or not name:
        raise MalformedInput(f"{kind} ids must be nonempty strings, got {name!r}")


def _exact_keys(table, expected, label):
    keys = set(table)
    missing = expected - keys
    if missing:
        raise MalformedInput(f"{label} is partial: missing {sorted(missing)[0]!r}")
    extra = keys - expected
    if extra:
        raise MalformedInput(f"{label} has an entry outside its domain: {sorted(extra)[0]!r}")


def _typed1(B, f, ends, where):
    if B.one_cells.get(f) != ends:
        raise MalformedInput(f"{where} = {f!r} does not have endpoints {ends!r}")


def _typed2(B, a, bnd, where):
    if B.two_cells.get(a) != bnd:
        raise MalformedInput(f"{where} = {a!r} does not have boundary {bnd!r}")


def _cells_in_hom_of(B, f):
    x, y = B.one_cells[f]
    return [a for g in B.hom(x, y) for a in B.out_cells(g)]


def validate_bicategory(B):
    """Check every bicategory axiom by enumeration.

    Returns a :class:`ValidationReport`; raises :class:`MalformedInput` only
    when the tables are not well-formed enough to state the axioms.
    """
    check_well_formed(B)
    found = []
    add = found.append

    def eq(axiom, witness, lhs, rhs):
        if lhs != rhs:
            add(Violation(axiom, tuple(witness), lhs, rhs))

    two = sorted(B.two_cells)

    # hom-categories
    for a in two:
        s, t = B.two_cells[a]
        eq("vcomp-unit", (a,), B.v(B.one(t), a), a)
        eq("vcomp-unit", (a,), B.v(a, B.one(s)), a)
        for b in B.out_cells(t):
            ba = B.v(b, a)
            for c in B.out_cells(B.two_cells[b][1]):
                eq("vcomp-associativity", (c, b, a), B.v(B.v(c, b), a), B.v(c, ba))

    # horizontal composition is a functor
    for g, f in B.composable_pairs():
        eq("hcomp-identity", (g, f), B.h(B.one(g), B.one(f)), B.one(B.comp(g, f)))
    for (b1, a1) in sorted(B.hcomp2):
        ta, tb = B.two_cells[a1][1], B.two_cells[b1][1]
        first = B.hcomp2[(b1, a1)]
        for a2 in B.out_cells(ta):
            for b2 in B.out_cells(tb):
                eq(
                    "interchange",
                    (b2, b1, a2, a1),
                    B.h(B.v(b2, b1), B.v(a2, a1)),
                    B.v(B.h(b2, a2), first),
                )

    # constraint cells are isomorphisms
    for key in sorted(B.assoc):
        a, ai = B.assoc[key], B.assoc_inv[key]
        s, t = B.two_cells[a]
        eq("assoc-inverse", key, B.v(ai, a), B.one(s))
        eq("assoc-inverse", key, B.v(a, ai), B.one(t))
    for label, tab, inv in (("lunit-inverse", B.lunit, B.lunit_inv), ("runit-inverse", B.runit, B.runit_inv)):
        for f in sorted(tab):
            s, t = B.two_cells[tab[f]]
            eq(label, (f,), B.v(inv[f], tab[f]), B.one(s))
            eq(label, (f,), B.v(tab[f], inv[f]), B.one(t))

    # naturality
    for h, g, f in B.composable_triples():
        for c in B.out_cells(h):
            h1 = B.two_cells[c][1]
            for b in B.out_cells(g):
                g1 = B.two_cells[b][1]
                for a in B.out_cells(f):
                    f1 = B.two_cells[a][1]
                    eq(
                        "assoc-naturality",
                        (c, b, a),
                        B.v(B.a(h1, g1, f1), B.h(B.h(c, b), a)),
                        B.v(B.h(c, B.h(b, a)), B.a(h, g, f)),
                    )
    for a in two:
        f, f1 = B.two_cells[a]
        x, y = B.one_cells[f]
        eq("lunit-naturality", (a,), B.v(B.l(f1), B.wl(B.id1[y], a)), B.v(a, B.l(f)))
        eq("runit-naturality", (a,), B.v(B.r(f1), B.wr(a, B.id1[x])), B.v(a, B.r(f)))

    # unity and pentagon
    for g, f in B.composable_pairs():
        one = B.id1[B.src(g)]
        eq("unity", (g, f), B.v(B.wl(g, B.l(f)), B.a(g, one, f)), B.wr(B.r(g), f))
    for h, g, f in B.composable_triples():
        for k in B.one_cells_from(B.tgt(h)):
            kh, hg, gf = B.comp(k, h), B.comp(h, g), B.comp(g, f)
            lhs = B.chain(B.wr(B.a(k, h, g), f), B.a(k, hg, f), B.wl(k, B.a(h, g, f)))
            rhs = B.chain(B.a(kh, g, f), B.a(k, h, gf))
            eq("pentagon", (k, h, g, f), lhs, rhs)

    order = {name: i for i, name in enumerate(AXIOM_ORDER)}
    found.sort(key=lambda v: (order[v.axiom], v.witness))
    return ValidationReport.from_violations(found)


def check_derived_unitors(B):
    """The unitor identities that follow from the axioms.

    For composable ``(g, f)``: ``l_{gf} . a = l_g * 1_f`` and
    ``(1_g * r_f) . a = r_{gf}``; for each object ``X``: ``l`` and ``r`` agree
    at ``1_X``.  Useful as an independent consistency check on accepted input.
    """
    check_well_formed(B)
    found = []
    for g, f in B.composable_pairs():
        gf = B.comp(g, f)
        one_z, one_x = B.id1[B.tgt(g)], B.id1[B.src(f)]
        lhs = B.v(B.l(gf), B.a(one_z, g, f))
        rhs = B.wr(B.l(g), f)
        if lhs != rhs:
            found.append(Violation("left-unity-derived", (g, f), lhs, rhs))
        lhs = B.v(B.wl(g, B.r(f)), B.a(g, f, one_x))
        rhs = B.r(gf)
        if lhs != rhs:
            found.append(Violation("right-unity-derived", (g, f), lhs, rhs))
    for x in B.sorted_objects():
        one = B.id1[x]
        if B.l(one) != B.r(one):
            found.append(Violation("l-equals-r", (x,), B.l(one), B.r(one)))
    return ValidationReport.from_violations(found)
