"""Named functors and transformations between the fixture bicategories."""

from __future__ import annotations

from .core.generators import bz2, chaotic, one, p2, two_group_z2
from .functors import LaxFunctor, LaxTransformation, identity_functor


def _strict(A, B, obj_map, one_map, two_map, name):
    """A strict functor given by its cell maps; F2 and F0 are identities."""
    return LaxFunctor(
        src=A,
        tgt=B,
        obj_map=obj_map,
        one_map=one_map,
        two_map=two_map,
        F2={(g, f): B.id2[one_map[A.comp(g, f)]] for g, f in A.composable_pairs()},
        F0={x: B.id2[one_map[A.id1[x]]] for x in A.objects},
        name=name,
    )


def f_collapse():
    """``chaotic(2) -> One``, the unique functor."""
    A, B = chaotic(2), one()
    return _strict(
        A,
        B,
        {x: "0" for x in A.objects},
        {f: "0->0" for f in A.one_cells},
        {a: "1_0->0" for a in A.two_cells},
        "F_collapse",
    )


def f_pick0():
    """``One -> chaotic(2)`` picking the object 0."""
    A, B = one(), chaotic(2)
    return _strict(A, B, {"0": "0"}, {"0->0": "0->0"}, {"1_0->0": "1_0->0"}, "F_pick0")


def f_lax():
    """``One -> P2`` sending the identity to 1, with F0 the non-invertible ``0 <= 1``."""
    A, B = one(), p2()
    return LaxFunctor(
        src=A,
        tgt=B,
        obj_map={"0": "bullet"},
        one_map={"0->0": "1"},
        two_map={"1_0->0": "1_1"},
        F2={("0->0", "0->0"): "1_1"},
        F0={"0": "0<=1"},
        name="F_lax",
    )


def f_strict_g():
    """``One -> BZ2``; strict, so the identity goes to e and g is never hit."""
    A, B = one(), bz2()
    return _strict(A, B, {"0": "bullet"}, {"0->0": "e"}, {"1_0->0": "1_e"}, "F_strict_g")


def id_one():
    return identity_functor(one(), name="Id_One")


def id_bz2():
    return identity_functor(bz2(), name="Id_BZ2")


def id_two_group(nontrivial=True):
    label = "w1" if nontrivial else "w0"
    return identity_functor(two_group_z2(nontrivial), name=f"Id_two_group_{label}")


def conjugation_g():
    """The strong transformation ``Id_BZ2 -> Id_BZ2`` with component g and identity 2-cells."""
    F = id_bz2()
    B = F.src
    comp2 = {f: B.id2[B.comp(f, "g")] for f in B.one_cells}
    return LaxTransformation(F, F, {"bullet": "g"}, comp2, name="conj_g")


FUNCTORS = {
    "F_collapse": f_collapse,
    "F_pick0": f_pick0,
    "F_lax": f_lax,
    "F_strict_g": f_strict_g,
    "Id_One": id_one,
    "Id_BZ2": id_bz2,
    "Id_two_group_w1": id_two_group,
    "Id_two_group_w0": lambda: id_two_group(False),
}
