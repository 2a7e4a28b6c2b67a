"""Internal adjunctions, mates, equivalences, and inverses of strong transformations."""

from __future__ import annotations

from dataclasses import dataclass

from .core.model import ValidationReport, Violation
from .errors import BicatError, IllTyped, NoSolution, NotInvertible


@dataclass(frozen=True)
class Adjunction:
    """``(f, g, eta, eps)`` with ``f: X -> Y``, ``eta: 1_X => gf``, ``eps: fg => 1_Y``."""

    f: str
    g: str
    eta: str
    eps: str

    def is_equivalence(self, B):
        return B.is_iso(self.eta) and B.is_iso(self.eps)


def _check_boundaries(B, adj):
    f, g = adj.f, adj.g
    x, y = B.src(f), B.tgt(f)
    if B.one_cells[g] != (y, x):
        raise IllTyped(adj, f"{g!r} is not a 1-cell {y} -> {x}")
    if B.boundary(adj.eta) != (B.id1[x], B.comp(g, f)):
        raise IllTyped(adj, f"unit {adj.eta!r} is not a 2-cell 1_{x} => {g}{f}")
    if B.boundary(adj.eps) != (B.comp(f, g), B.id1[y]):
        raise IllTyped(adj, f"counit {adj.eps!r} is not a 2-cell {f}{g} => 1_{y}")


def _triangles(B, adj):
    f, g, eta, eps = adj.f, adj.g, adj.eta, adj.eps
    t1 = B.chain(B.wl(f, eta), B.a_inv(f, g, f), B.wr(eps, f), B.l(f))
    t2 = B.chain(B.wr(eta, g), B.a(g, f, g), B.wl(g, eps), B.r(g))
    return (t1, B.r(f)), (t2, B.l(g))


def check_adjunction(B, adj):
    """Evaluate both triangle identities; ``info["adjoint_equivalence"]`` records invertibility."""
    _check_boundaries(B, adj)
    (l1, r1), (l2, r2) = _triangles(B, adj)
    found = []
    if l1 != r1:
        found.append(Violation("triangle-1", (adj.f, adj.g), l1, r1))
    if l2 != r2:
        found.append(Violation("triangle-2", (adj.f, adj.g), l2, r2))
    return ValidationReport.from_violations(found, adjoint_equivalence=adj.is_equivalence(B))


def _is_adjunction(B, adj):
    (l1, r1), (l2, r2) = _triangles(B, adj)
    return l1 == r1 and l2 == r2


# -- mates -----------------------------------------------------------------------


def mate_right(B, adj0, adj1, a, b, omega):
    """The mate ``a g0 => g1 b`` of ``omega: f1 a => b f0``."""
    f0, g0, f1, g1 = adj0.f, adj0.g, adj1.f, adj1.g
    want = (B.comp(f1, a), B.comp(b, f0))
    if B.boundary(omega) != want:
        raise IllTyped(("mate_right", omega), f"expected a 2-cell {want[0]} => {want[1]}")
    ag0 = B.comp(a, g0)
    return B.chain(
        B.l_inv(ag0),
        B.wr(adj1.eta, ag0),
        B.a(g1, f1, ag0),
        B.wl(g1, B.a_inv(f1, a, g0)),
        B.wl(g1, B.wr(omega, g0)),
        B.wl(g1, B.a(b, f0, g0)),
        B.wl(g1, B.wl(b, adj0.eps)),
        B.wl(g1, B.r(b)),
    )


def mate_left(B, adj0, adj1, a, b, nu):
    """The mate ``f1 a => b f0`` of ``nu: a g0 => g1 b``."""
    f0, g0, f1, g1 = adj0.f, adj0.g, adj1.f, adj1.g
    want = (B.comp(a, g0), B.comp(g1, b))
    if B.boundary(nu) != want:
        raise IllTyped(("mate_left", nu), f"expected a 2-cell {want[0]} => {want[1]}")
    f1a = B.comp(f1, a)
    return B.chain(
        B.r_inv(f1a),
        B.wl(f1a, adj0.eta),
        B.a_inv(f1a, g0, f0),
        B.wr(B.a(f1, a, g0), f0),
        B.wr(B.wl(f1, nu), f0),
        B.wr(B.a_inv(f1, g1, b), f0),
        B.wr(B.wr(adj1.eps, b), f0),
        B.wr(B.l(b), f0),
    )


# -- equivalences ------------------------------------------------------------------


def equivalence_witnesses(B, f):
    """All ``(g, iso1: gf => 1_X, iso2: 1_Y => fg)`` for ``f``, in canonical order."""
    x, y = B.src(f), B.tgt(f)
    out = []
    for g in B.hom(y, x):
        for i1 in B.isos(B.comp(g, f), B.id1[x]):
            for i2 in B.isos(B.id1[y], B.comp(f, g)):
                out.append((g, i1, i2))
    return out


def is_equivalence(B, f):
    x, y = B.src(f), B.tgt(f)
    return any(
        B.isos(B.comp(g, f), B.id1[x]) and B.isos(B.id1[y], B.comp(f, g)) for g in B.hom(y, x)
    )


def find_equivalences(B, X, Y):
    """Invertible 1-cells ``X -> Y`` in canonical order."""
    for obj in (X, Y):
        B.identity(obj)
    return [f for f in B.hom(X, Y) if is_equivalence(B, f)]


def promote_to_adjoint_equivalence(B, f, g, iso1, iso2):
    """An adjoint equivalence on ``(f, g)`` with unit ``iso1^-1``.

    The counit is the canonical-least invertible ``fg => 1_Y`` satisfying both
    triangle identities.  ``iso2`` only certifies that ``fg`` is invertible.
    """
    x, y = B.src(f), B.tgt(f)
    if B.boundary(iso1) != (B.comp(g, f), B.id1[x]):
        raise IllTyped(iso1, f"expected a 2-cell {g}{f} => 1_{x}")
    if B.boundary(iso2) != (B.id1[y], B.comp(f, g)):
        raise IllTyped(iso2, f"expected a 2-cell 1_{y} => {f}{g}")
    eta = B.inverse(iso1)
    if eta is None or not B.is_iso(iso2):
        raise NoSolution(f"({f}, {g}) is not presented by isomorphisms")
    for eps in B.isos(B.comp(f, g), B.id1[y]):
        adj = Adjunction(f, g, eta, eps)
        if _is_adjunction(B, adj):
            return adj
    raise NoSolution(f"no counit makes ({f}, {g}, {eta}) an adjoint equivalence")


def adjoint_inverse(B, f):
    """Promote the canonical-least equivalence witness for ``f``; ``None`` if ``f`` is not invertible."""
    for g, i1, i2 in equivalence_witnesses(B, f):
        return promote_to_adjoint_equivalence(B, f, g, i1, i2)
    return None


def reverse_adjunction(B, adj):
    """``(g, f, eps^-1, eta^-1)``, again an adjoint equivalence."""
    eta_inv, eps_inv = B.inverse(adj.eta), B.inverse(adj.eps)
    if eta_inv is None or eps_inv is None:
        raise NoSolution("only adjoint equivalences can be reversed")
    return Adjunction(adj.g, adj.f, eps_inv, eta_inv)


# -- strong transformations ----------------------------------------------------------


def invert_strong_transformation(alpha):
    """Return ``(alpha_inv, Theta: 1_F => alpha_inv alpha, Gamma: alpha alpha_inv => 1_G)``.

    Components of ``alpha_inv`` are promoted adjoint inverses of the components
    of ``alpha``; its 2-cells are the mates of the inverses of ``alpha_f``.
    Raises :class:`NotInvertible` at the first object, in canonical order, whose
    component 1-cell is not invertible or which is the source of a
    non-invertible ``alpha_f``.
    """
    from .functors import (
        LaxTransformation,
        Modification,
        compose_transformations,
        identity_transformation,
        validate_lax_transformation,
        validate_modification,
    )

    F, G = alpha.src, alpha.tgt
    A, B = F.src, F.tgt
    adj = {}
    for x in A.sorted_objects():
        ax = alpha.comp1[x]
        for f in A.one_cells_from(x):
            if not B.is_iso(alpha.comp2[f]):
                raise NotInvertible(x, f"2-cell component at {f!r} is not an isomorphism")
        found = adjoint_inverse(B, ax)
        if found is None:
            raise NotInvertible(x, f"component 1-cell {ax!r} is not an equivalence")
        adj[x] = found

    comp2 = {}
    for f in A.one_cells:
        x, y = A.one_cells[f]
        omega = B.inverse(alpha.comp2[f])
        comp2[f] = mate_right(B, adj[x], adj[y], F.one_map[f], G.one_map[f], omega)
    inv = LaxTransformation(G, F, {x: adj[x].g for x in A.objects}, comp2, name=f"{alpha.name}^inv")
    theta = Modification(
        identity_transformation(F),
        compose_transformations(inv, alpha),
        {x: adj[x].eta for x in A.objects},
        name="Theta",
    )
    gamma = Modification(
        compose_transformations(alpha, inv),
        identity_transformation(G),
        {x: adj[x].eps for x in A.objects},
        name="Gamma",
    )
    for label, report in (
        ("inverse", validate_lax_transformation(inv)),
        ("Theta", validate_modification(theta)),
        ("Gamma", validate_modification(gamma)),
    ):
        if not report.ok:
            raise BicatError(f"{label} failed validation: {report.violations[0].describe()}")
    return inv, theta, gamma
