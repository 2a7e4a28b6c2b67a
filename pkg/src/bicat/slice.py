"""The lax slice bicategory ``F | X`` of a lax functor over an object, and change of slice.

Slice cells are encoded from their constituents with :func:`~bicat.core.encode`:
an object is ``(A,f)``, a 1-cell ``(p,theta,f1)`` and a 2-cell
``(alpha,theta0,theta1,f1)``, where ``f1`` is the structure 1-cell of the target
object.  :class:`LaxSlice` keeps the decoded tags alongside the bicategory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core.model import Bicategory, encode
from .errors import IllTyped, MalformedInput, UnknownCell
from .functors import LaxFunctor


@dataclass
class LaxSlice:
    bicat: Bicategory
    functor: LaxFunctor
    over: str
    obj_tag: dict  # id -> (A, f_A)
    one_tag: dict  # id -> (p, theta)
    two_tag: dict  # id -> alpha

    def obj_id(self, A, f):
        x = encode(A, f)
        if x not in self.obj_tag:
            raise UnknownCell(x, "slice object")
        return x

    def one_id(self, p, theta, f1):
        x = encode(p, theta, f1)
        if x not in self.one_tag:
            raise UnknownCell(x, "slice 1-cell")
        return x

    def two_id(self, alpha, theta0, theta1, f1):
        x = encode(alpha, theta0, theta1, f1)
        if x not in self.two_tag:
            raise UnknownCell(x, "slice 2-cell")
        return x

    def structure(self, obj):
        """The 1-cell ``f_A`` of a slice object."""
        return self.obj_tag[obj][1]


def cone_check(C, theta0, theta1, phi, f1):
    """Whether ``(1_f1 * phi) . theta0 = theta1``, with ``theta_i: f0 => f1 h_i`` and ``phi: h0 => h1``."""
    h0, h1 = C.boundary(phi)
    s0, t0 = C.boundary(theta0)
    s1, t1 = C.boundary(theta1)
    if s0 != s1:
        raise IllTyped(("cone", theta0, theta1), "theta0 and theta1 have different sources")
    if t0 != C.comp(f1, h0) or t1 != C.comp(f1, h1):
        raise IllTyped(("cone", theta0, theta1, phi), f"targets are not {f1} composed with the ends of {phi}")
    return C.v(C.wl(f1, phi), theta0) == theta1


def slice_composite(F, f2, theta1, p1, theta0, p0):
    """The filler of the composite slice 1-cell ``(p1 p0, theta')``.

    ``theta' = (1_f2 * F2_{p1,p0}) . a . (theta1 * 1_{Fp0}) . theta0``.
    """
    C = F.tgt
    Fp1, Fp0 = F.one_map[p1], F.one_map[p0]
    return C.chain(
        theta0,
        C.wr(theta1, Fp0),
        C.a(f2, Fp1, Fp0),
        C.wl(f2, F.F2[(p1, p0)]),
    )


def slice_identity_filler(F, A, f):
    """``r' = (1_f * F0_A) . r^-1``, the filler of the identity 1-cell at ``(A, f)``."""
    C = F.tgt
    return C.v(C.wl(f, F.F0[A]), C.r_inv(f))


def lax_slice(F, X):
    """Build ``F | X`` by enumeration; raises :class:`MalformedInput` if ``F`` is not a lax functor."""
    B, C = F.src, F.tgt
    if X not in C.objects:
        raise UnknownCell(X, "object")

    obj_tag = {}
    for A in B.sorted_objects():
        for f in C.hom(F.obj_map[A], X):
            obj_tag[encode(A, f)] = (A, f)
    objs = sorted(obj_tag)

    one_cells, one_tag = {}, {}
    by_ends = {}
    for s in objs:
        A0, f0 = obj_tag[s]
        for t in objs:
            A1, f1 = obj_tag[t]
            for p in B.hom(A0, A1):
                for theta in C.cells(f0, C.comp(f1, F.one_map[p])):
                    x = encode(p, theta, f1)
                    one_cells[x] = (s, t)
                    one_tag[x] = (p, theta)
                    by_ends.setdefault((s, t), []).append(x)

    two_cells, two_tag = {}, {}
    for (s, t), cells in by_ends.items():
        f1 = obj_tag[t][1]
        for u in cells:
            p0, th0 = one_tag[u]
            for w in cells:
                p1, th1 = one_tag[w]
                for alpha in B.cells(p0, p1):
                    if C.v(C.wl(f1, F.two_map[alpha]), th0) == th1:
                        x = encode(alpha, th0, th1, f1)
                        two_cells[x] = (u, w)
                        two_tag[x] = alpha

    def cell2(alpha, u, w):
        f1 = obj_tag[one_cells[w][1]][1]
        x = encode(alpha, one_tag[u][1], one_tag[w][1], f1)
        if x not in two_cells:
            raise MalformedInput(f"{alpha!r} does not satisfy the cone condition between {u!r} and {w!r}")
        return x

    id1 = {}
    for s in objs:
        A, f = obj_tag[s]
        id1[s] = encode(B.id1[A], slice_identity_filler(F, A, f), f)
    for s, x in id1.items():
        if x not in one_cells:
            raise MalformedInput(f"identity filler at {s!r} has the wrong boundary")
    id2 = {u: cell2(B.id2[one_tag[u][0]], u, u) for u in one_cells}

    vcomp = {}
    out = {}
    for x, (u, w) in two_cells.items():
        out.setdefault(u, []).append(x)
    for a, (u, w) in two_cells.items():
        for b in out.get(w, ()):
            vcomp[(b, a)] = cell2(B.v(two_tag[b], two_tag[a]), u, two_cells[b][1])

    hcomp1 = {}
    from_obj = {}
    for x, (s, t) in one_cells.items():
        from_obj.setdefault(s, []).append(x)
    for u0, (s, t) in one_cells.items():
        for u1 in from_obj.get(t, ()):
            p0, th0 = one_tag[u0]
            p1, th1 = one_tag[u1]
            f2 = obj_tag[one_cells[u1][1]][1]
            theta = slice_composite(F, f2, th1, p1, th0, p0)
            x = encode(B.comp(p1, p0), theta, f2)
            if x not in one_cells:
                raise MalformedInput(f"composite of {u1!r} and {u0!r} is ill-typed")
            hcomp1[(u1, u0)] = x

    cells_on = {}
    for x, (u, w) in two_cells.items():
        cells_on.setdefault(one_cells[u], []).append(x)
    hcomp2 = {}
    for (s, t), cells0 in cells_on.items():
        for (t2, r), cells1 in cells_on.items():
            if t2 != t:
                continue
            for a in cells0:
                for b in cells1:
                    src = hcomp1[(two_cells[b][0], two_cells[a][0])]
                    tgt = hcomp1[(two_cells[b][1], two_cells[a][1])]
                    hcomp2[(b, a)] = cell2(B.h(two_tag[b], two_tag[a]), src, tgt)

    assoc, assoc_inv = {}, {}
    for u0, (s, t) in one_cells.items():
        for u1 in from_obj.get(t, ()):
            for u2 in from_obj.get(one_cells[u1][1], ()):
                left = hcomp1[(hcomp1[(u2, u1)], u0)]
                right = hcomp1[(u2, hcomp1[(u1, u0)])]
                p2, p1, p0 = one_tag[u2][0], one_tag[u1][0], one_tag[u0][0]
                assoc[(u2, u1, u0)] = cell2(B.a(p2, p1, p0), left, right)
                assoc_inv[(u2, u1, u0)] = cell2(B.a_inv(p2, p1, p0), right, left)

    lunit, lunit_inv, runit, runit_inv = {}, {}, {}, {}
    for u, (s, t) in one_cells.items():
        p = one_tag[u][0]
        lu = hcomp1[(id1[t], u)]
        ru = hcomp1[(u, id1[s])]
        lunit[u] = cell2(B.l(p), lu, u)
        lunit_inv[u] = cell2(B.l_inv(p), u, lu)
        runit[u] = cell2(B.r(p), ru, u)
        runit_inv[u] = cell2(B.r_inv(p), u, ru)

    S = Bicategory(
        objects=tuple(objs),
        one_cells=one_cells,
        two_cells=two_cells,
        id1=id1,
        id2=id2,
        vcomp=vcomp,
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        assoc=assoc,
        assoc_inv=assoc_inv,
        lunit=lunit,
        lunit_inv=lunit_inv,
        runit=runit,
        runit_inv=runit_inv,
        name=f"{F.name or 'F'}|{X}",
    )
    return LaxSlice(S, F, X, obj_tag, one_tag, two_tag)


def forgetful(S):
    """The strict projection ``F | X -> B``: ``(A, f) -> A``, ``(p, theta) -> p``, ``(alpha) -> alpha``."""
    D, B = S.bicat, S.functor.src
    one_map = {u: S.one_tag[u][0] for u in D.one_cells}
    return LaxFunctor(
        src=D,
        tgt=B,
        obj_map={x: S.obj_tag[x][0] for x in D.objects},
        one_map=one_map,
        two_map=dict(S.two_tag),
        F2={(g, f): B.id2[one_map[D.comp(g, f)]] for g, f in D.composable_pairs()},
        F0={x: B.id2[one_map[D.id1[x]]] for x in D.objects},
        name=f"U_{S.over}",
    )


def change_of_slice(F, u, source=None, target=None):
    """The strict functor ``F | X -> F | Y`` given by whiskering with ``u: X -> Y``.

    ``(A, f) -> (A, u f)``, ``(p, theta) -> (p, a^-1 . (1_u * theta))``,
    ``(alpha) -> (alpha)``.  Prebuilt slices may be passed to avoid rebuilding.
    """
    C = F.tgt
    X, Y = C.src(u), C.tgt(u)
    SX = source or lax_slice(F, X)
    SY = target or lax_slice(F, Y)
    DX, DY = SX.bicat, SY.bicat

    obj_map = {}
    for x, (A, f) in SX.obj_tag.items():
        obj_map[x] = SY.obj_id(A, C.comp(u, f))
    one_map = {}
    for x, (p, theta) in SX.one_tag.items():
        t = DX.one_cells[x][1]
        f1 = SX.structure(t)
        new = C.v(C.a_inv(u, f1, F.one_map[p]), C.wl(u, theta))
        one_map[x] = SY.one_id(p, new, SY.structure(obj_map[t]))
    two_map = {}
    for x, alpha in SX.two_tag.items():
        s, t = DX.two_cells[x]
        th0 = SY.one_tag[one_map[s]][1]
        th1 = SY.one_tag[one_map[t]][1]
        f1 = SY.structure(DY.one_cells[one_map[s]][1])
        two_map[x] = SY.two_id(alpha, th0, th1, f1)

    F2, F0 = {}, {}
    for g, f in DX.composable_pairs():
        lhs = DY.comp(one_map[g], one_map[f])
        rhs = one_map[DX.comp(g, f)]
        if lhs != rhs:
            raise MalformedInput(f"change of slice is not strict at ({g}, {f})")
        F2[(g, f)] = DY.id2[rhs]
    for x in DX.objects:
        lhs = DY.id1[obj_map[x]]
        rhs = one_map[DX.id1[x]]
        if lhs != rhs:
            raise MalformedInput(f"change of slice is not strictly unital at {x!r}")
        F0[x] = DY.id2[rhs]
    return LaxFunctor(DX, DY, obj_map, one_map, two_map, F2, F0, name=f"{F.name or 'F'}|{u}")
