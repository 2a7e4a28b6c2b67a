"""Deterministic fixture bicategories: chaotic, monoid deloopings, and 2-groups."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import MalformedInput
from .model import Bicategory


@dataclass(frozen=True)
class Monoid:
    """A finite monoid given by its multiplication table ``mult[(x, y)] = xy``."""

    elements: tuple
    mult: dict
    unit: str

    def __post_init__(self):
        els = set(self.elements)
        if self.unit not in els:
            raise MalformedInput(f"unit {self.unit!r} is not an element")
        for x, y in product(self.elements, repeat=2):
            if self.mult.get((x, y)) not in els:
                raise MalformedInput(f"multiplication table is partial at ({x}, {y})")
        for x in self.elements:
            if self.mult[(self.unit, x)] != x or self.mult[(x, self.unit)] != x:
                raise MalformedInput(f"{self.unit!r} is not a two-sided unit at {x!r}")
        for x, y, z in product(self.elements, repeat=3):
            if self.mult[(self.mult[(x, y)], z)] != self.mult[(x, self.mult[(y, z)])]:
                raise MalformedInput(f"multiplication is not associative at ({x}, {y}, {z})")

    def __call__(self, x, y):
        return self.mult[(x, y)]

    def inverse(self, x):
        for y in self.elements:
            if self.mult[(x, y)] == self.unit and self.mult[(y, x)] == self.unit:
                return y
        return None

    def is_group(self):
        return all(self.inverse(x) is not None for x in self.elements)

    def is_commutative(self):
        return all(self.mult[(x, y)] == self.mult[(y, x)] for x, y in product(self.elements, repeat=2))


def cyclic_group(n, names=None):
    names = tuple(names) if names else tuple(str(i) for i in range(n))
    if len(names) != n:
        raise ValueError("need one name per element")
    mult = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
    return Monoid(names, mult, names[0])


Z2 = cyclic_group(2, ("e", "g"))
Z2_COEFFS = cyclic_group(2, ("e", "a"))
Z3 = cyclic_group(3, ("e", "g", "gg"))
TRIVIAL = Monoid(("e",), {("e", "e"): "e"}, "e")
# {0, 1} under join; the non-group monoid of order two
JOIN2 = Monoid(("0", "1"), {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "1", ("1", "1"): "1"}, "0")


def chaotic(n):
    """The chaotic bicategory on ``n`` objects: every hom-category is terminal."""
    if not isinstance(n, int) or n < 1:
        raise MalformedInput("chaotic(n) needs a positive integer n")
    objs = tuple(str(i) for i in range(n))

    def cell(i, j):
        return f"{i}->{j}"

    one_cells = {cell(i, j): (i, j) for i in objs for j in objs}
    two_cells = {f"1_{f}": (f, f) for f in one_cells}
    id2 = {f: f"1_{f}" for f in one_cells}
    hcomp1 = {(cell(j, k), cell(i, j)): cell(i, k) for i in objs for j in objs for k in objs}
    hcomp2 = {(id2[g], id2[f]): id2[gf] for (g, f), gf in hcomp1.items()}
    assoc = {}
    for i, j, k, m in product(objs, repeat=4):
        f, g, h = cell(i, j), cell(j, k), cell(k, m)
        assoc[(h, g, f)] = id2[cell(i, m)]
    unit = {f: id2[f] for f in one_cells}
    return Bicategory(
        objects=objs,
        one_cells=one_cells,
        two_cells=two_cells,
        id1={x: cell(x, x) for x in objs},
        id2=id2,
        vcomp={(a, a): a for a in two_cells},
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        assoc=assoc,
        assoc_inv=dict(assoc),
        lunit=unit,
        lunit_inv=dict(unit),
        runit=dict(unit),
        runit_inv=dict(unit),
        name=f"chaotic({n})",
    )


def deloop_monoid(monoid, order=None, obj="bullet", name=None):
    """One object, 1-cells the monoid elements, composition ``g . f = g f``.

    ``order`` optionally makes each hom a poset (pairs ``(x, y)`` meaning
    ``x <= y``); it is closed reflexively and transitively and must be
    antisymmetric and preserved by multiplication.  All constraint cells are
    identities.
    """
    if not isinstance(monoid, Monoid):
        raise MalformedInput("deloop_monoid expects a Monoid")
    els = monoid.elements
    le = {(x, x) for x in els}
    for x, y in order or ():
        if x not in els or y not in els:
            raise MalformedInput(f"order relates unknown elements ({x}, {y})")
        le.add((x, y))
    changed = True
    while changed:
        changed = False
        for (x, y), (y2, z) in product(list(le), repeat=2):
            if y == y2 and (x, z) not in le:
                le.add((x, z))
                changed = True
    for x, y in le:
        if x != y and (y, x) in le:
            raise MalformedInput(f"order is not antisymmetric at ({x}, {y})")
    for (x, x1), (y, y1) in product(le, repeat=2):
        if (monoid(x, y), monoid(x1, y1)) not in le:
            raise MalformedInput("multiplication does not preserve the order")

    def arrow(x, y):
        return f"1_{x}" if x == y else f"{x}<={y}"

    one_cells = {x: (obj, obj) for x in els}
    two_cells = {arrow(x, y): (x, y) for x, y in le}
    id2 = {x: arrow(x, x) for x in els}
    vcomp = {}
    for (x, y), (y2, z) in product(le, repeat=2):
        if y == y2:
            vcomp[(arrow(y, z), arrow(x, y))] = arrow(x, z)
    hcomp2 = {}
    for (g, g1), (f, f1) in product(le, repeat=2):
        hcomp2[(arrow(g, g1), arrow(f, f1))] = arrow(monoid(g, f), monoid(g1, f1))
    triples = product(els, repeat=3)
    assoc = {(h, g, f): id2[monoid(monoid(h, g), f)] for h, g, f in triples}
    unit = dict(id2)
    return Bicategory(
        objects=(obj,),
        one_cells=one_cells,
        two_cells=two_cells,
        id1={obj: monoid.unit},
        id2=id2,
        vcomp=vcomp,
        hcomp1={(g, f): monoid(g, f) for g, f in product(els, repeat=2)},
        hcomp2=hcomp2,
        assoc=assoc,
        assoc_inv=dict(assoc),
        lunit=unit,
        lunit_inv=dict(unit),
        runit=dict(unit),
        runit_inv=dict(unit),
        name=name or "deloop",
    )


def two_group(group, coeffs, omega, obj="bullet", name=None):
    """The one-object 2-group with 1-cells ``group``, automorphisms ``coeffs``.

    The associator at ``(h, g, f)`` is ``omega[(h, g, f)]``; unitors are
    identities, so ``omega`` must be normalized.  Whether the result is a
    bicategory is left to the validator (it is iff ``omega`` is a 3-cocycle).
    2-cell ids are ``"x@f"`` for coefficient ``x`` on 1-cell ``f``.
    """
    if not group.is_group():
        raise MalformedInput("1-cells must form a group")
    if not (coeffs.is_group() and coeffs.is_commutative()):
        raise MalformedInput("2-cell coefficients must form an abelian group")
    G, A = group.elements, coeffs.elements
    for t in product(G, repeat=3):
        if omega.get(t) not in A:
            raise MalformedInput(f"omega is partial at {t}")
        if group.unit in t and omega[t] != coeffs.unit:
            raise MalformedInput(f"omega is not normalized at {t}")

    def cell(x, f):
        return f"{x}@{f}"

    one_cells = {f: (obj, obj) for f in G}
    two_cells = {cell(x, f): (f, f) for x in A for f in G}
    id2 = {f: cell(coeffs.unit, f) for f in G}
    vcomp = {(cell(y, f), cell(x, f)): cell(coeffs(y, x), f) for x in A for y in A for f in G}
    hcomp2 = {}
    for y, g, x, f in product(A, G, A, G):
        hcomp2[(cell(y, g), cell(x, f))] = cell(coeffs(y, x), group(g, f))
    assoc, assoc_inv = {}, {}
    for h, g, f in product(G, repeat=3):
        hgf = group(group(h, g), f)
        w = omega[(h, g, f)]
        assoc[(h, g, f)] = cell(w, hgf)
        assoc_inv[(h, g, f)] = cell(coeffs.inverse(w), hgf)
    return Bicategory(
        objects=(obj,),
        one_cells=one_cells,
        two_cells=two_cells,
        id1={obj: group.unit},
        id2=id2,
        vcomp=vcomp,
        hcomp1={(g, f): group(g, f) for g, f in product(G, repeat=2)},
        hcomp2=hcomp2,
        assoc=assoc,
        assoc_inv=assoc_inv,
        lunit=dict(id2),
        lunit_inv=dict(id2),
        runit=dict(id2),
        runit_inv=dict(id2),
        name=name or "two_group",
    )


def z2_cocycle(nontrivial):
    """Normalized Z2-valued 3-cochain on Z2: trivial, or ``omega(g, g, g) = a``."""
    omega = {t: "e" for t in product(Z2.elements, repeat=3)}
    if nontrivial:
        omega[("g", "g", "g")] = "a"
    return omega


def one():
    return chaotic(1)


def bz2():
    return deloop_monoid(Z2, name="BZ2")


def p2():
    return deloop_monoid(JOIN2, order=[("0", "1")], name="P2")


def two_group_z2(nontrivial):
    label = "w1" if nontrivial else "w0"
    return two_group(Z2, Z2_COEFFS, z2_cocycle(nontrivial), name=f"two_group(Z2,Z2,{label})")
