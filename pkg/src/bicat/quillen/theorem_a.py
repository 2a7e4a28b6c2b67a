"""The reverse lax functor ``G`` and the transformations ``eta: Id -> GF``, ``eps: FG -> Id``.

Every "unique 2-cell" is found by exhaustive search over the relevant
hom-category of the source bicategory; anything other than exactly one
solution raises :class:`~bicat.errors.NoUniqueSolution`, which means the
supplied terminal data was not inc-lax terminal or not preserved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import MalformedInput, NoUniqueSolution
from ..functors import (
    LaxFunctor,
    LaxTransformation,
    compose_lax_functors,
    identity_functor,
    validate_lax_functor,
    validate_lax_transformation,
)
from ..slice import change_of_slice, lax_slice, slice_composite, slice_identity_filler
from .terminal import check_inc_lax_terminal, check_preserves_inc, find_inc_lax_terminal


def _solve(candidates, ok, site):
    sols = [c for c in candidates if ok(c)]
    if len(sols) != 1:
        raise NoUniqueSolution(len(sols), site)
    return sols[0]


class _Bars:
    """``(Xbar, f_Xbar)`` per object and ``(ubar, theta_ubar)`` per 1-cell of the target."""

    def __init__(self, F, slices, terminal):
        C = F.tgt
        self.obj = {}
        for x in C.sorted_objects():
            self.obj[x] = slices[x].obj_tag[terminal[x].terminal]
        self.one = {}
        for u in sorted(C.one_cells):
            x, y = C.one_cells[u]
            xb, fx = self.obj[x]
            z = slices[y].obj_id(xb, C.comp(u, fx))
            self.one[u] = slices[y].one_tag[terminal[y].k1[z]]


def construct_G(F, slices, terminal):
    """``G: C -> B`` from inc-lax terminal data on every slice ``F | X``.

    ``slices`` and ``terminal`` map each object ``X`` of ``C`` to its
    :class:`~bicat.slice.LaxSlice` and :class:`IncLaxTerminalData`.
    """
    B, C = F.src, F.tgt
    bars = _Bars(F, slices, terminal)
    Fa = F.two_map

    obj_map = {x: bars.obj[x][0] for x in C.objects}
    one_map = {u: bars.one[u][0] for u in C.one_cells}

    two_map = {}
    for gamma in sorted(C.two_cells):
        u0, u1 = C.two_cells[gamma]
        x, y = C.one_cells[u0]
        fx, fy = bars.obj[x][1], bars.obj[y][1]
        th0, th1 = bars.one[u0][1], bars.one[u1][1]
        want = C.v(th1, C.wr(gamma, fx))
        two_map[gamma] = _solve(
            B.cells(one_map[u0], one_map[u1]),
            lambda a: C.v(C.wl(fy, Fa[a]), th0) == want,
            ("G", gamma),
        )

    F0 = {}
    for x in C.sorted_objects():
        xb, fx = bars.obj[x]
        one = C.id1[x]
        r_prime = slice_identity_filler(F, xb, fx)
        want = C.v(bars.one[one][1], C.l_inv(fx))
        F0[x] = _solve(
            B.cells(B.id1[xb], one_map[one]),
            lambda a: C.v(C.wl(fx, Fa[a]), r_prime) == want,
            ("G0", x),
        )

    F2 = {}
    for v, u in C.composable_pairs():
        x, y, z = C.src(u), C.tgt(u), C.tgt(v)
        fx, fy, fz = bars.obj[x][1], bars.obj[y][1], bars.obj[z][1]
        ub, th_u = bars.one[u]
        vb, th_v = bars.one[v]
        moved = C.v(C.a_inv(v, fy, F.one_map[ub]), C.wl(v, th_u))
        theta = slice_composite(F, fz, th_v, vb, moved, ub)
        vu = C.comp(v, u)
        want = C.v(bars.one[vu][1], C.a_inv(v, u, fx))
        F2[(v, u)] = _solve(
            B.cells(B.comp(vb, ub), one_map[vu]),
            lambda a: C.v(C.wl(fz, Fa[a]), theta) == want,
            ("G2", v, u),
        )

    return LaxFunctor(C, B, obj_map, one_map, two_map, F2, F0, name="G")


def construct_unit_counit(F, G, slices, terminal):
    """``eta: Id_B -> GF`` and ``eps: FG -> Id_C``.

    ``eps_X = f_Xbar`` and ``eps_u = theta_ubar``; ``eta_A`` is the base
    1-cell of the initial 1-cell out of ``(A, 1_FA)`` and ``eta_p`` the unique
    2-cell comparing the two composites out of ``(A, Fp 1_FA)``.
    """
    B, C = F.src, F.tgt
    bars = _Bars(F, slices, terminal)

    eps = LaxTransformation(
        compose_lax_functors(F, G, name="FG"),
        identity_functor(C),
        {x: bars.obj[x][1] for x in C.objects},
        {u: bars.one[u][1] for u in C.one_cells},
        name="eps",
    )

    eta1, theta_eta = {}, {}
    for a in B.sorted_objects():
        fa = F.obj_map[a]
        S = slices[fa]
        z = S.obj_id(a, C.id1[fa])
        eta1[a], theta_eta[a] = S.one_tag[terminal[fa].k1[z]]

    eta2 = {}
    for p in sorted(B.one_cells):
        a, b = B.one_cells[p]
        Fp = F.one_map[p]
        fa_bar = bars.obj[F.obj_map[a]][1]
        fb_bar = bars.obj[F.obj_map[b]][1]
        pb, th_pb = bars.one[Fp]
        moved = C.v(C.a_inv(Fp, fa_bar, F.one_map[eta1[a]]), C.wl(Fp, theta_eta[a]))
        theta1 = slice_composite(F, fb_bar, th_pb, pb, moved, eta1[a])
        upsilon = C.v(C.l_inv(Fp), C.r(Fp))
        theta2 = slice_composite(F, fb_bar, theta_eta[b], eta1[b], upsilon, p)
        eta2[p] = _solve(
            B.cells(B.comp(pb, eta1[a]), B.comp(eta1[b], p)),
            lambda al: C.v(C.wl(fb_bar, F.two_map[al]), theta1) == theta2,
            ("eta", p),
        )

    eta = LaxTransformation(identity_functor(B), compose_lax_functors(G, F, name="GF"), eta1, eta2, name="eta")
    return eta, eps


@dataclass
class QuillenAResult:
    G: LaxFunctor
    eta: LaxTransformation
    eps: LaxTransformation
    slices: dict
    terminal: dict
    reports: dict = field(default_factory=dict)


def build_slices(F):
    return {x: lax_slice(F, x) for x in F.tgt.sorted_objects()}


def check_hypotheses(F, slices, terminal):
    """Reports for both hypotheses: terminal data per object and preservation per 1-cell."""
    C = F.tgt
    reports = {}
    for x in C.sorted_objects():
        reports[f"terminal[{x}]"] = check_inc_lax_terminal(slices[x].bicat, terminal[x])
    for u in sorted(C.one_cells):
        x, y = C.one_cells[u]
        Fu = change_of_slice(F, u, slices[x], slices[y])
        reports[f"preserves[{u}]"] = check_preserves_inc(Fu, terminal[x], terminal[y])
    return reports


def quillen_a(F, terminal=None, slices=None):
    """Run the whole construction.

    Without ``terminal`` the canonical-least inc-lax terminal object of each
    slice is used.  Raises :class:`MalformedInput` when ``F`` is not a lax
    functor or a hypothesis fails.
    """
    report = validate_lax_functor(F)
    if not report.ok:
        raise MalformedInput(f"F is not a lax functor: {report.violations[0].describe()}")
    slices = slices or build_slices(F)
    if terminal is None:
        terminal = {}
        for x, S in slices.items():
            data = find_inc_lax_terminal(S.bicat)
            if data is None:
                raise MalformedInput(f"the slice over {x!r} has no inc-lax terminal object")
            terminal[x] = data
    reports = {"F": report}
    reports.update(check_hypotheses(F, slices, terminal))
    for key, r in reports.items():
        if not r.ok:
            raise MalformedInput(f"hypothesis {key} fails: {r.violations[0].describe()}")
    G = construct_G(F, slices, terminal)
    eta, eps = construct_unit_counit(F, G, slices, terminal)
    reports["G"] = validate_lax_functor(G)
    reports["eta"] = validate_lax_transformation(eta)
    reports["eps"] = validate_lax_transformation(eps)
    return QuillenAResult(G, eta, eps, slices, terminal, reports)
