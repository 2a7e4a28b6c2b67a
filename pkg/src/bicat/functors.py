"""Lax functors, lax transformations and modifications between finite bicategories.

All three are plain tables.  The validators check every axiom by enumeration
and return a :class:`~bicat.core.ValidationReport`; table-shape problems raise
:class:`~bicat.errors.MalformedInput` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core.model import ValidationReport, Violation
from .errors import IllTyped, MalformedInput, UnknownCell

FLAGS = ("lax", "unitary", "strictly-unitary", "pseudo", "strict")


def _same(A, B):
    return A is B or A == B


@dataclass
class LaxFunctor:
    src: object
    tgt: object
    obj_map: dict
    one_map: dict
    two_map: dict
    F2: dict  # (g, f) -> Fg Ff => F(gf)
    F0: dict  # X -> 1_FX => F(1_X)
    name: str = field(default="", compare=False)

    def obj(self, x):
        try:
            return self.obj_map[x]
        except KeyError:
            raise UnknownCell(x, "object") from None

    def one(self, f):
        try:
            return self.one_map[f]
        except KeyError:
            raise UnknownCell(f, "1-cell") from None

    def two(self, alpha):
        try:
            return self.two_map[alpha]
        except KeyError:
            raise UnknownCell(alpha, "2-cell") from None

    def f2(self, g, f):
        return self.F2[(g, f)]

    def f0(self, x):
        return self.F0[x]

    @property
    def classification(self):
        return classify(self)


@dataclass
class LaxTransformation:
    src: LaxFunctor
    tgt: LaxFunctor
    comp1: dict  # X -> 1-cell FX -> GX
    comp2: dict  # f -> (Gf) alpha_X => alpha_Y (Ff)
    name: str = field(default="", compare=False)

    @property
    def strong(self):
        B = self.src.tgt
        return all(B.is_iso(c) for c in self.comp2.values())

    def invertible_components(self):
        """True when the transformation is strong and every component 1-cell is an equivalence."""
        from .adjunctions import find_equivalences

        if not self.strong:
            return False
        B = self.src.tgt
        for x, a in self.comp1.items():
            s, t = B.one_cells[a]
            if a not in find_equivalences(B, s, t):
                return False
        return True


@dataclass
class Modification:
    src: LaxTransformation
    tgt: LaxTransformation
    comp: dict  # X -> alpha_X => beta_X
    name: str = field(default="", compare=False)

    @property
    def invertible(self):
        B = self.src.src.tgt
        return all(B.is_iso(c) for c in self.comp.values())


# -- lax functors --------------------------------------------------------------


def classify(F):
    """Classification flags read off the F2 and F0 tables."""
    B = F.tgt
    flags = {"lax"}
    f0_iso = all(B.is_iso(c) for c in F.F0.values())
    f0_id = all(B.is_identity(c) for c in F.F0.values())
    f2_iso = all(B.is_iso(c) for c in F.F2.values())
    f2_id = all(B.is_identity(c) for c in F.F2.values())
    if f0_iso:
        flags.add("unitary")
    if f0_id:
        flags.add("strictly-unitary")
    if f0_iso and f2_iso:
        flags.add("pseudo")
    if f0_id and f2_id:
        flags.add("strict")
    return frozenset(flags)


def sorted_flags(flags):
    return [f for f in FLAGS if f in flags]


def check_functor_shape(F):
    A, B = F.src, F.tgt
    _exact(F.obj_map, set(A.objects), "obj_map")
    for x, y in F.obj_map.items():
        if y not in B.objects:
            raise MalformedInput(f"obj_map[{x}] = {y!r} is not an object of the target")
    _exact(F.one_map, set(A.one_cells), "one_map")
    for f, Ff in F.one_map.items():
        s, t = A.one_cells[f]
        if B.one_cells.get(Ff) != (F.obj_map[s], F.obj_map[t]):
            raise MalformedInput(f"one_map[{f}] = {Ff!r} has the wrong endpoints")
    _exact(F.two_map, set(A.two_cells), "two_map")
    for a, Fa in F.two_map.items():
        s, t = A.two_cells[a]
        if B.two_cells.get(Fa) != (F.one_map[s], F.one_map[t]):
            raise MalformedInput(f"two_map[{a}] = {Fa!r} has the wrong boundary")
    _exact(F.F2, set(A.composable_pairs()), "F2")
    for (g, f), c in F.F2.items():
        want = (B.comp(F.one_map[g], F.one_map[f]), F.one_map[A.comp(g, f)])
        if B.two_cells.get(c) != want:
            raise MalformedInput(f"F2[{g}, {f}] = {c!r} does not have boundary {want!r}")
    _exact(F.F0, set(A.objects), "F0")
    for x, c in F.F0.items():
        want = (B.id1[F.obj_map[x]], F.one_map[A.id1[x]])
        if B.two_cells.get(c) != want:
            raise MalformedInput(f"F0[{x}] = {c!r} does not have boundary {want!r}")


def _exact(table, expected, label):
    keys = set(table)
    if keys - expected:
        raise MalformedInput(f"{label} has an entry outside its domain: {sorted(keys - expected, key=str)[0]!r}")
    if expected - keys:
        raise MalformedInput(f"{label} is partial: missing {sorted(expected - keys, key=str)[0]!r}")


FUNCTOR_AXIOMS = ("hom-functor", "f2-naturality", "lax-associativity", "lax-left-unity", "lax-right-unity")


def validate_lax_functor(F):
    """Check the hom-functor, naturality, associativity and unity axioms of ``F``.

    ``info["classification"]`` lists the flags in increasing strength.
    """
    check_functor_shape(F)
    A, B = F.src, F.tgt
    P, T = F.two_map, F.one_map
    found = []

    def eq(axiom, witness, lhs, rhs):
        if lhs != rhs:
            found.append(Violation(axiom, tuple(witness), lhs, rhs))

    for f in sorted(A.one_cells):
        eq("hom-functor", (A.id2[f],), P[A.id2[f]], B.id2[T[f]])
    for (b, a) in sorted(A.vcomp):
        eq("hom-functor", (b, a), P[A.vcomp[(b, a)]], B.v(P[b], P[a]))

    for g, f in A.composable_pairs():
        for b in A.out_cells(g):
            g1 = A.two_cells[b][1]
            for a in A.out_cells(f):
                f1 = A.two_cells[a][1]
                eq(
                    "f2-naturality",
                    (b, a),
                    B.v(F.F2[(g1, f1)], B.h(P[b], P[a])),
                    B.v(P[A.h(b, a)], F.F2[(g, f)]),
                )

    for h, g, f in A.composable_triples():
        Fh, Fg, Ff = T[h], T[g], T[f]
        lhs = B.chain(B.wr(F.F2[(h, g)], Ff), F.F2[(A.comp(h, g), f)], P[A.a(h, g, f)])
        rhs = B.chain(B.a(Fh, Fg, Ff), B.wl(Fh, F.F2[(g, f)]), F.F2[(h, A.comp(g, f))])
        eq("lax-associativity", (h, g, f), lhs, rhs)

    for f in sorted(A.one_cells):
        x, y = A.one_cells[f]
        Ff = T[f]
        lhs = B.chain(B.wr(F.F0[y], Ff), F.F2[(A.id1[y], f)], P[A.l(f)])
        eq("lax-left-unity", (f,), lhs, B.l(Ff))
        lhs = B.chain(B.wl(Ff, F.F0[x]), F.F2[(f, A.id1[x])], P[A.r(f)])
        eq("lax-right-unity", (f,), lhs, B.r(Ff))

    order = {name: i for i, name in enumerate(FUNCTOR_AXIOMS)}
    found.sort(key=lambda v: (order[v.axiom], v.witness))
    return ValidationReport.from_violations(found, classification=sorted_flags(classify(F)))


def identity_functor(B, name=None):
    return LaxFunctor(
        src=B,
        tgt=B,
        obj_map={x: x for x in B.objects},
        one_map={f: f for f in B.one_cells},
        two_map={a: a for a in B.two_cells},
        F2={(g, f): B.id2[B.comp(g, f)] for g, f in B.composable_pairs()},
        F0={x: B.id2[B.id1[x]] for x in B.objects},
        name=name or f"Id_{B.name or 'B'}",
    )


def constant_pseudofunctor(A, B, X, name=None):
    """The strictly unitary pseudofunctor ``A -> B`` constant at the object ``X``."""
    if X not in B.objects:
        raise UnknownCell(X, "object")
    one = B.id1[X]
    ident = B.id2[one]
    return LaxFunctor(
        src=A,
        tgt=B,
        obj_map={x: X for x in A.objects},
        one_map={f: one for f in A.one_cells},
        two_map={a: ident for a in A.two_cells},
        F2={pair: B.l(one) for pair in A.composable_pairs()},
        F0={x: ident for x in A.objects},
        name=name or f"const_{X}",
    )


def compose_lax_functors(G, F, name=None):
    """``GF`` with ``(GF)2 = G(F2) . G2`` and ``(GF)0 = G(F0) . G0``."""
    if not _same(F.tgt, G.src):
        raise IllTyped(("compose", G.name, F.name), "target of F is not the source of G")
    C = G.tgt
    return LaxFunctor(
        src=F.src,
        tgt=C,
        obj_map={x: G.obj_map[y] for x, y in F.obj_map.items()},
        one_map={f: G.one_map[y] for f, y in F.one_map.items()},
        two_map={a: G.two_map[y] for a, y in F.two_map.items()},
        F2={
            (g, f): C.v(G.two_map[c], G.F2[(F.one_map[g], F.one_map[f])])
            for (g, f), c in F.F2.items()
        },
        F0={x: C.v(G.two_map[c], G.F0[F.obj_map[x]]) for x, c in F.F0.items()},
        name=name or f"{G.name}{F.name}",
    )


# -- lax transformations -------------------------------------------------------


def check_transformation_shape(alpha):
    F, G = alpha.src, alpha.tgt
    if not (_same(F.src, G.src) and _same(F.tgt, G.tgt)):
        raise MalformedInput("source and target functors are not parallel")
    A, B = F.src, F.tgt
    _exact(alpha.comp1, set(A.objects), "comp1")
    for x, c in alpha.comp1.items():
        if B.one_cells.get(c) != (F.obj_map[x], G.obj_map[x]):
            raise MalformedInput(f"comp1[{x}] = {c!r} has the wrong endpoints")
    _exact(alpha.comp2, set(A.one_cells), "comp2")
    for f, c in alpha.comp2.items():
        x, y = A.one_cells[f]
        want = (B.comp(G.one_map[f], alpha.comp1[x]), B.comp(alpha.comp1[y], F.one_map[f]))
        if B.two_cells.get(c) != want:
            raise MalformedInput(f"comp2[{f}] = {c!r} does not have boundary {want!r}")


TRANSFORMATION_AXIOMS = ("naturality", "lax-unity", "lax-naturality")


def validate_lax_transformation(alpha):
    """Check naturality in 2-cells, lax unity and lax naturality; ``info["strong"]`` is set."""
    check_transformation_shape(alpha)
    F, G = alpha.src, alpha.tgt
    A, B = F.src, F.tgt
    c1, c2 = alpha.comp1, alpha.comp2
    found = []

    def eq(axiom, witness, lhs, rhs):
        if lhs != rhs:
            found.append(Violation(axiom, tuple(witness), lhs, rhs))

    for gamma in sorted(A.two_cells):
        f, f1 = A.two_cells[gamma]
        x, y = A.one_cells[f]
        lhs = B.v(c2[f1], B.wr(G.two_map[gamma], c1[x]))
        rhs = B.v(B.wl(c1[y], F.two_map[gamma]), c2[f])
        eq("naturality", (gamma,), lhs, rhs)

    for x in A.sorted_objects():
        ax = c1[x]
        lhs = B.v(c2[A.id1[x]], B.wr(G.F0[x], ax))
        rhs = B.chain(B.l(ax), B.r_inv(ax), B.wl(ax, F.F0[x]))
        eq("lax-unity", (x,), lhs, rhs)

    for g, f in A.composable_pairs():
        x, y, z = A.src(f), A.tgt(f), A.tgt(g)
        Gg, Gf, Fg, Ff = G.one_map[g], G.one_map[f], F.one_map[g], F.one_map[f]
        lhs = B.v(c2[A.comp(g, f)], B.wr(G.F2[(g, f)], c1[x]))
        rhs = B.chain(
            B.a(Gg, Gf, c1[x]),
            B.wl(Gg, c2[f]),
            B.a_inv(Gg, c1[y], Ff),
            B.wr(c2[g], Ff),
            B.a(c1[z], Fg, Ff),
            B.wl(c1[z], F.F2[(g, f)]),
        )
        eq("lax-naturality", (g, f), lhs, rhs)

    order = {name: i for i, name in enumerate(TRANSFORMATION_AXIOMS)}
    found.sort(key=lambda v: (order[v.axiom], v.witness))
    return ValidationReport.from_violations(found, strong=alpha.strong)


def identity_transformation(F, name=None):
    """``1_F`` with components ``1_FX`` and ``comp2(f) = l^-1 . r`` on ``Ff``."""
    B = F.tgt
    return LaxTransformation(
        src=F,
        tgt=F,
        comp1={x: B.id1[F.obj_map[x]] for x in F.src.objects},
        comp2={f: B.v(B.l_inv(Ff), B.r(Ff)) for f, Ff in F.one_map.items()},
        name=name or f"1_{F.name}",
    )


def compose_transformations(beta, alpha, name=None):
    """Vertical composite ``beta alpha: F -> H`` of ``alpha: F -> G`` and ``beta: G -> H``."""
    if not _same(alpha.tgt, beta.src):
        raise IllTyped(("compose", beta.name, alpha.name), "transformations are not composable")
    F, H = alpha.src, beta.tgt
    A, B = F.src, F.tgt
    comp1 = {x: B.comp(beta.comp1[x], alpha.comp1[x]) for x in A.objects}
    comp2 = {}
    for f in A.one_cells:
        x, y = A.one_cells[f]
        Hf, Gf, Ff = H.one_map[f], alpha.tgt.one_map[f], F.one_map[f]
        comp2[f] = B.chain(
            B.a_inv(Hf, beta.comp1[x], alpha.comp1[x]),
            B.wr(beta.comp2[f], alpha.comp1[x]),
            B.a(beta.comp1[y], Gf, alpha.comp1[x]),
            B.wl(beta.comp1[y], alpha.comp2[f]),
            B.a_inv(beta.comp1[y], alpha.comp1[y], Ff),
        )
    return LaxTransformation(F, H, comp1, comp2, name=name or f"{beta.name}{alpha.name}")


# -- modifications -------------------------------------------------------------


def validate_modification(Gamma):
    """Check the modification axiom at every 1-cell; ``info["invertible"]`` is set."""
    alpha, beta = Gamma.src, Gamma.tgt
    if not (_same(alpha.src, beta.src) and _same(alpha.tgt, beta.tgt)):
        raise MalformedInput("source and target transformations are not parallel")
    F, G = alpha.src, alpha.tgt
    A, B = F.src, F.tgt
    _exact(Gamma.comp, set(A.objects), "comp")
    for x, c in Gamma.comp.items():
        want = (alpha.comp1[x], beta.comp1[x])
        if B.two_cells.get(c) != want:
            raise MalformedInput(f"comp[{x}] = {c!r} does not have boundary {want!r}")
    found = []
    for f in sorted(A.one_cells):
        x, y = A.one_cells[f]
        lhs = B.v(B.wr(Gamma.comp[y], F.one_map[f]), alpha.comp2[f])
        rhs = B.v(beta.comp2[f], B.wl(G.one_map[f], Gamma.comp[x]))
        if lhs != rhs:
            found.append(Violation("modification", (f,), lhs, rhs))
    return ValidationReport.from_violations(found, invertible=Gamma.invertible)


def identity_modification(alpha, name=None):
    B = alpha.src.tgt
    return Modification(alpha, alpha, {x: B.id2[c] for x, c in alpha.comp1.items()}, name=name or f"1_{alpha.name}")


def compose_modifications(Delta, Gamma, name=None):
    """Vertical composite ``Delta Gamma`` of modifications ``Gamma: a -> b``, ``Delta: b -> c``."""
    if not _same(Gamma.tgt, Delta.src):
        raise IllTyped(("compose", Delta.name, Gamma.name), "modifications are not composable")
    B = Gamma.src.src.tgt
    comp = {x: B.v(Delta.comp[x], Gamma.comp[x]) for x in Gamma.comp}
    return Modification(Gamma.src, Delta.tgt, comp, name=name or f"{Delta.name}{Gamma.name}")
