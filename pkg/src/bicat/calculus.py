"""Explicitly parenthesized 2-cell expressions and their evaluation by table lookup.

Every pasting equality used elsewhere in the package is written as two
expressions built from these nodes; equality of the evaluated 2-cells decides
it.  ``seq(e1, e2, e3)`` builds the vertical composite read left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllTyped, UnknownCell


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class Cell(Expr):
    name: str


@dataclass(frozen=True)
class Id(Expr):
    one_cell: str


@dataclass(frozen=True)
class Assoc(Expr):
    h: str
    g: str
    f: str


@dataclass(frozen=True)
class AssocInv(Expr):
    h: str
    g: str
    f: str


@dataclass(frozen=True)
class LUnit(Expr):
    f: str


@dataclass(frozen=True)
class LUnitInv(Expr):
    f: str


@dataclass(frozen=True)
class RUnit(Expr):
    f: str


@dataclass(frozen=True)
class RUnitInv(Expr):
    f: str


@dataclass(frozen=True)
class VComp(Expr):
    """``outer . inner``."""

    outer: Expr
    inner: Expr


@dataclass(frozen=True)
class HComp(Expr):
    """``left * right``."""

    left: Expr
    right: Expr


@dataclass(frozen=True)
class WhiskerLeft(Expr):
    """``1_h * e``."""

    h: str
    e: Expr


@dataclass(frozen=True)
class WhiskerRight(Expr):
    """``e * 1_h``."""

    e: Expr
    h: str


CONSTRAINTS = (Assoc, AssocInv, LUnit, LUnitInv, RUnit, RUnitInv)


def seq(*exprs):
    """Vertical composite in diagrammatic order."""
    if not exprs:
        raise ValueError("seq needs at least one expression")
    out = exprs[0]
    for e in exprs[1:]:
        out = VComp(e, out)
    return out


def _one(B, f):
    if f not in B.one_cells:
        raise UnknownCell(f, "1-cell")
    return f


def _comp(B, g, f, e):
    key = (g, f)
    if key not in B.hcomp1:
        raise IllTyped(e, f"1-cells {g!r} and {f!r} are not composable")
    return B.hcomp1[key]


def boundary(B, e):
    """Source and target 1-cells of ``e``, computed without evaluating it."""
    if isinstance(e, Cell):
        return B.boundary(e.name)
    if isinstance(e, Id):
        f = _one(B, e.one_cell)
        return f, f
    if isinstance(e, (Assoc, AssocInv)):
        h, g, f = (_one(B, c) for c in (e.h, e.g, e.f))
        left = _comp(B, _comp(B, h, g, e), f, e)
        right = _comp(B, h, _comp(B, g, f, e), e)
        return (left, right) if isinstance(e, Assoc) else (right, left)
    if isinstance(e, (LUnit, LUnitInv)):
        f = _one(B, e.f)
        lf = _comp(B, B.id1[B.tgt(f)], f, e)
        return (lf, f) if isinstance(e, LUnit) else (f, lf)
    if isinstance(e, (RUnit, RUnitInv)):
        f = _one(B, e.f)
        rf = _comp(B, f, B.id1[B.src(f)], e)
        return (rf, f) if isinstance(e, RUnit) else (f, rf)
    if isinstance(e, VComp):
        s2, t2 = boundary(B, e.outer)
        s1, t1 = boundary(B, e.inner)
        if t1 != s2:
            raise IllTyped(e, f"inner target {t1!r} differs from outer source {s2!r}")
        return s1, t2
    if isinstance(e, HComp):
        s2, t2 = boundary(B, e.left)
        s1, t1 = boundary(B, e.right)
        return _comp(B, s2, s1, e), _comp(B, t2, t1, e)
    if isinstance(e, WhiskerLeft):
        h = _one(B, e.h)
        s, t = boundary(B, e.e)
        return _comp(B, h, s, e), _comp(B, h, t, e)
    if isinstance(e, WhiskerRight):
        h = _one(B, e.h)
        s, t = boundary(B, e.e)
        return _comp(B, s, h, e), _comp(B, t, h, e)
    raise IllTyped(e, "not an expression")


def evaluate(B, e):
    """The 2-cell id denoted by ``e``; raises :class:`IllTyped` on a boundary mismatch."""
    boundary(B, e)
    return _eval(B, e)


def _eval(B, e):
    if isinstance(e, Cell):
        return e.name
    if isinstance(e, Id):
        return B.id2[e.one_cell]
    if isinstance(e, Assoc):
        return B.assoc[(e.h, e.g, e.f)]
    if isinstance(e, AssocInv):
        return B.assoc_inv[(e.h, e.g, e.f)]
    if isinstance(e, LUnit):
        return B.lunit[e.f]
    if isinstance(e, LUnitInv):
        return B.lunit_inv[e.f]
    if isinstance(e, RUnit):
        return B.runit[e.f]
    if isinstance(e, RUnitInv):
        return B.runit_inv[e.f]
    if isinstance(e, VComp):
        return B.vcomp[(_eval(B, e.outer), _eval(B, e.inner))]
    if isinstance(e, HComp):
        return B.hcomp2[(_eval(B, e.left), _eval(B, e.right))]
    if isinstance(e, WhiskerLeft):
        return B.hcomp2[(B.id2[e.h], _eval(B, e.e))]
    if isinstance(e, WhiskerRight):
        return B.hcomp2[(_eval(B, e.e), B.id2[e.h])]
    raise IllTyped(e, "not an expression")


def is_constraint_only(e):
    """True when ``e`` is built from associators, unitors, their inverses and identities."""
    if isinstance(e, CONSTRAINTS) or isinstance(e, Id):
        return True
    if isinstance(e, (VComp, HComp)):
        a, b = (e.outer, e.inner) if isinstance(e, VComp) else (e.left, e.right)
        return is_constraint_only(a) and is_constraint_only(b)
    if isinstance(e, (WhiskerLeft, WhiskerRight)):
        return is_constraint_only(e.e)
    return False


# -- JSON form ---------------------------------------------------------------

_TAGS = {
    Assoc: "a",
    AssocInv: "a_inv",
    LUnit: "l",
    LUnitInv: "l_inv",
    RUnit: "r",
    RUnitInv: "r_inv",
}
_BY_TAG = {v: k for k, v in _TAGS.items()}


def to_json(e):
    """Nested-list form, e.g. ``["vcomp", ["cell", "x"], ["id2", "f"]]``."""
    if isinstance(e, Cell):
        return ["cell", e.name]
    if isinstance(e, Id):
        return ["id2", e.one_cell]
    if type(e) in _TAGS:
        fields = (e.h, e.g, e.f) if isinstance(e, (Assoc, AssocInv)) else (e.f,)
        return [_TAGS[type(e)], *fields]
    if isinstance(e, VComp):
        return ["vcomp", to_json(e.outer), to_json(e.inner)]
    if isinstance(e, HComp):
        return ["hcomp", to_json(e.left), to_json(e.right)]
    if isinstance(e, WhiskerLeft):
        return ["whisker_left", e.h, to_json(e.e)]
    if isinstance(e, WhiskerRight):
        return ["whisker_right", to_json(e.e), e.h]
    raise IllTyped(e, "not an expression")


def from_json(data):
    if not isinstance(data, list) or not data or not isinstance(data[0], str):
        raise IllTyped(data, "expected a tagged list")
    tag, args = data[0], data[1:]
    try:
        if tag == "cell":
            (name,) = args
            return Cell(name)
        if tag == "id2":
            (f,) = args
            return Id(f)
        if tag in _BY_TAG:
            return _BY_TAG[tag](*args)
        if tag == "vcomp":
            return VComp(from_json(args[0]), from_json(args[1]))
        if tag == "hcomp":
            return HComp(from_json(args[0]), from_json(args[1]))
        if tag == "whisker_left":
            return WhiskerLeft(args[0], from_json(args[1]))
        if tag == "whisker_right":
            return WhiskerRight(from_json(args[0]), args[1])
    except (TypeError, ValueError, IndexError):
        raise IllTyped(data, f"wrong arity for {tag!r}") from None
    raise IllTyped(data, f"unknown tag {tag!r}")


# -- coherence smoke test ----------------------------------------------------

_INVERSE = {Assoc: AssocInv, AssocInv: Assoc, LUnit: LUnitInv, LUnitInv: LUnit, RUnit: RUnitInv, RUnitInv: RUnit}


def invert(e):
    """Formal inverse of a constraint-only expression."""
    if type(e) in _INVERSE:
        return _INVERSE[type(e)](*(getattr(e, k) for k in e.__dataclass_fields__))
    if isinstance(e, Id):
        return e
    if isinstance(e, VComp):
        return VComp(invert(e.inner), invert(e.outer))
    if isinstance(e, HComp):
        return HComp(invert(e.left), invert(e.right))
    if isinstance(e, WhiskerLeft):
        return WhiskerLeft(e.h, invert(e.e))
    if isinstance(e, WhiskerRight):
        return WhiskerRight(invert(e.e), e.h)
    raise IllTyped(e, "only constraint-only expressions have a formal inverse")


def _bracketings(labels):
    if len(labels) == 1:
        yield labels[0]
        return
    for i in range(1, len(labels)):
        for left in _bracketings(labels[:i]):
            for right in _bracketings(labels[i:]):
                yield (left, right)


def _words(labels, units):
    """Every bracketing of every word obtained by deleting some unit letters."""
    unit_pos = [i for i, c in enumerate(labels) if c in units]
    words = set()
    for mask in range(1 << len(unit_pos)):
        drop = {unit_pos[j] for j in range(len(unit_pos)) if mask >> j & 1}
        kept = tuple(c for i, c in enumerate(labels) if i not in drop)
        if kept:
            words.update(_bracketings(kept))
    return words


def composable_sequences(B, max_length):
    """Composable strings ``(f_n, ..., f_1)`` of 1-cells, written in composition order."""
    frontier = [(f,) for f in sorted(B.one_cells)]
    for _ in range(max_length):
        yield from frontier
        frontier = [(g,) + s for s in frontier for g in B.one_cells_from(B.tgt(s[0]))]


def check_coherence(B, max_length=4):
    """Compare all parallel constraint-only composites over short formal words.

    For each composable string of at most ``max_length`` 1-cells, the nodes
    are the formal bracketed words on it (identity 1-cells may be cancelled by
    unitors) and the edges are single whiskered constraint cells.  All paths
    between two words must evaluate to the same 2-cell; this is checked by
    fixing one path to every word and comparing each edge against it.
    Boundaries are formal words, not their concrete values: distinct words can
    evaluate to the same 1-cell without their comparison cells agreeing.
    """
    from .core.model import ValidationReport, Violation

    units = set(B.id1.values())
    found = []
    edges_checked = 0
    for labels in composable_sequences(B, max_length):
        concrete = {}

        def c(t):
            if t not in concrete:
                concrete[t] = t if isinstance(t, str) else B.comp(c(t[0]), c(t[1]))
            return concrete[t]

        def redexes(t):
            if isinstance(t, str):
                return []
            left, right = t
            out = []
            if isinstance(left, tuple):
                x, y = left
                out.append(((x, (y, right)), Assoc(c(x), c(y), c(right))))
            if isinstance(left, str) and left in units:
                out.append((right, LUnit(c(right))))
            if isinstance(right, str) and right in units:
                out.append((left, RUnit(c(left))))
            out.extend(((t2, right), WhiskerRight(e, c(right))) for t2, e in redexes(left))
            out.extend(((left, t2), WhiskerLeft(c(left), e)) for t2, e in redexes(right))
            return out

        words = sorted(_words(labels, units), key=repr)
        edges = [(t, t2, e) for t in words for t2, e in redexes(t)]
        outgoing, incoming = {}, {}
        for t, t2, e in edges:
            outgoing.setdefault(t, []).append((t2, e))
            incoming.setdefault(t2, []).append((t, e))

        root = words[0]
        value = {root: B.one(c(root))}
        todo = [root]
        while todo:
            t = todo.pop()
            for t2, e in outgoing.get(t, ()):
                if t2 not in value:
                    value[t2] = B.v(evaluate(B, e), value[t])
                    todo.append(t2)
            for t0, e in incoming.get(t, ()):
                if t0 not in value:
                    value[t0] = B.v(evaluate(B, invert(e)), value[t])
                    todo.append(t0)
        for t, t2, e in edges:
            if t not in value or t2 not in value:
                continue
            edges_checked += 1
            via_edge = B.v(evaluate(B, e), value[t])
            if via_edge != value[t2]:
                found.append(Violation("coherence", (labels, repr(t), repr(t2)), via_edge, value[t2]))
    return ValidationReport.from_violations(found, edges_checked=edges_checked)
