from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import IllTyped, UnknownCell


def encode(*parts):
    """Injective, readable encoding of a tuple of ids as a single id.

    ``encode("A", "f") == "(A,f)"``.  Backslash, comma and parentheses inside a
    part are escaped, so distinct tuples never collide.
    """
    out = []
    for p in parts:
        s = str(p)
        for ch in "\\(),":
            s = s.replace(ch, "\\" + ch)
        out.append(s)
    return "(" + ",".join(out) + ")"


@dataclass
class Bicategory:
    """A finite bicategory given by explicit tables.

    All ids are strings; 1-cell and 2-cell ids are global (unique across
    hom-categories).  Composition tables are keyed in the usual right-to-left
    order: ``hcomp1[(g, f)]`` is ``g`` after ``f`` and ``vcomp[(beta, alpha)]``
    is ``beta`` after ``alpha``.
    """

    objects: tuple
    one_cells: dict  # id -> (src object, tgt object)
    two_cells: dict  # id -> (src 1-cell, tgt 1-cell)
    id1: dict
    id2: dict
    vcomp: dict
    hcomp1: dict
    hcomp2: dict
    assoc: dict  # (h, g, f) -> (hg)f => h(gf)
    assoc_inv: dict
    lunit: dict  # f -> 1_Y f => f
    lunit_inv: dict
    runit: dict  # f -> f 1_X => f
    runit_inv: dict
    name: str = field(default="", compare=False)

    # -- indexes -----------------------------------------------------------

    @cached_property
    def _homs(self):
        homs = {}
        for f in sorted(self.one_cells):
            homs.setdefault(self.one_cells[f], []).append(f)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _cells(self):
        cells = {}
        for a in sorted(self.two_cells):
            cells.setdefault(self.two_cells[a], []).append(a)
        return {k: tuple(v) for k, v in cells.items()}

    @cached_property
    def _out2(self):
        out = {}
        for a in sorted(self.two_cells):
            out.setdefault(self.two_cells[a][0], []).append(a)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _inverses(self):
        inv = {}
        for a, (s, t) in self.two_cells.items():
            for b in self._cells.get((t, s), ()):
                if self.vcomp.get((b, a)) == self.id2.get(s) and self.vcomp.get((a, b)) == self.id2.get(t):
                    inv[a] = b
                    break
        return inv

    # -- lookups -----------------------------------------------------------

    def sorted_objects(self):
        return tuple(sorted(self.objects))

    def hom(self, x, y):
        """1-cells ``x -> y`` in canonical order."""
        return self._homs.get((x, y), ())

    def cells(self, f, g):
        """2-cells ``f => g`` in canonical order."""
        return self._cells.get((f, g), ())

    def out_cells(self, f):
        """All 2-cells with source ``f``."""
        return self._out2.get(f, ())

    def src(self, f):
        try:
            return self.one_cells[f][0]
        except KeyError:
            raise UnknownCell(f, "1-cell") from None

    def tgt(self, f):
        try:
            return self.one_cells[f][1]
        except KeyError:
            raise UnknownCell(f, "1-cell") from None

    def boundary(self, alpha):
        try:
            return self.two_cells[alpha]
        except KeyError:
            raise UnknownCell(alpha, "2-cell") from None

    def identity(self, x):
        try:
            return self.id1[x]
        except KeyError:
            raise UnknownCell(x, "object") from None

    def one(self, f):
        """Identity 2-cell on the 1-cell ``f``."""
        try:
            return self.id2[f]
        except KeyError:
            raise UnknownCell(f, "1-cell") from None

    def composable_pairs(self):
        for f in sorted(self.one_cells):
            for g in self.one_cells_from(self.tgt(f)):
                yield g, f

    @cached_property
    def _from_obj(self):
        out = {}
        for f in sorted(self.one_cells):
            out.setdefault(self.one_cells[f][0], []).append(f)
        return {k: tuple(v) for k, v in out.items()}

    def one_cells_from(self, x):
        return self._from_obj.get(x, ())

    def composable_triples(self):
        for f in sorted(self.one_cells):
            for g in self.one_cells_from(self.tgt(f)):
                for h in self.one_cells_from(self.tgt(g)):
                    yield h, g, f

    # -- composition -------------------------------------------------------

    def comp(self, g, f):
        try:
            return self.hcomp1[(g, f)]
        except KeyError:
            for c in (g, f):
                if c not in self.one_cells:
                    raise UnknownCell(c, "1-cell") from None
            raise IllTyped(("hcomp1", g, f), "1-cells are not composable") from None

    def v(self, beta, alpha):
        """Vertical composite ``beta . alpha``."""
        try:
            return self.vcomp[(beta, alpha)]
        except KeyError:
            for c in (beta, alpha):
                if c not in self.two_cells:
                    raise UnknownCell(c, "2-cell") from None
            raise IllTyped(("vcomp", beta, alpha), "2-cells are not vertically composable") from None

    def h(self, beta, alpha):
        """Horizontal composite ``beta * alpha``."""
        try:
            return self.hcomp2[(beta, alpha)]
        except KeyError:
            for c in (beta, alpha):
                if c not in self.two_cells:
                    raise UnknownCell(c, "2-cell") from None
            raise IllTyped(("hcomp2", beta, alpha), "2-cells are not horizontally composable") from None

    def chain(self, *cells):
        """Vertical composite in diagrammatic order: ``chain(a, b, c) = c . b . a``."""
        result = cells[0]
        for c in cells[1:]:
            result = self.v(c, result)
        return result

    def wl(self, h, alpha):
        """Left whiskering ``1_h * alpha``."""
        return self.h(self.one(h), alpha)

    def wr(self, alpha, h):
        """Right whiskering ``alpha * 1_h``."""
        return self.h(alpha, self.one(h))

    def a(self, h, g, f):
        return self._constraint(self.assoc, (h, g, f), "a")

    def a_inv(self, h, g, f):
        return self._constraint(self.assoc_inv, (h, g, f), "a^-1")

    def l(self, f):
        return self._constraint(self.lunit, f, "l")

    def l_inv(self, f):
        return self._constraint(self.lunit_inv, f, "l^-1")

    def r(self, f):
        return self._constraint(self.runit, f, "r")

    def r_inv(self, f):
        return self._constraint(self.runit_inv, f, "r^-1")

    def _constraint(self, table, key, label):
        try:
            return table[key]
        except KeyError:
            keys = key if isinstance(key, tuple) else (key,)
            for c in keys:
                if c not in self.one_cells:
                    raise UnknownCell(c, "1-cell") from None
            raise IllTyped((label,) + keys, "1-cells are not composable") from None

    # -- invertibility -----------------------------------------------------

    def inverse(self, alpha):
        """The inverse of ``alpha``, or ``None`` when it is not an isomorphism."""
        if alpha not in self.two_cells:
            raise UnknownCell(alpha, "2-cell")
        return self._inverses.get(alpha)

    def is_iso(self, alpha):
        return self.inverse(alpha) is not None

    def is_identity(self, alpha):
        s, t = self.boundary(alpha)
        return s == t and self.id2.get(s) == alpha

    def isos(self, f, g):
        """Invertible 2-cells ``f => g`` in canonical order."""
        return tuple(a for a in self.cells(f, g) if a in self._inverses)

    def summary(self):
        return (
            f"{self.name or 'bicategory'}: {len(self.objects)} objects, "
            f"{len(self.one_cells)} 1-cells, {len(self.two_cells)} 2-cells"
        )


@dataclass(frozen=True)
class Violation:
    """One failed equation: the two sides evaluated to different 2-cells.

    ``lhs``/``rhs`` are ``None`` for failures that are not equations between
    2-cells, such as a missing initial 1-cell.
    """

    axiom: str
    witness: tuple
    lhs: str | None = None
    rhs: str | None = None

    def describe(self):
        w = ", ".join(str(x) for x in self.witness)
        if self.lhs is None:
            return f"{self.axiom} at ({w})"
        return f"{self.axiom} at ({w}): {self.lhs} != {self.rhs}"


@dataclass
class ValidationReport:
    status: str
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @classmethod
    def from_violations(cls, violations, **info):
        violations = list(violations)
        return cls("fail" if violations else "pass", violations, info)

    @property
    def ok(self):
        return self.status == "pass"

    def __bool__(self):
        return self.ok

    def axioms(self):
        return {v.axiom for v in self.violations}

    def text(self, title="report"):
        lines = [f"{title}: {self.status.upper()}"]
        for key in sorted(self.info):
            lines.append(f"  {key}: {_fmt(self.info[key])}")
        for v in self.violations:
            lines.append("  violation " + v.describe())
        return "\n".join(lines) + "\n"


def _fmt(value):
    if isinstance(value, (set, frozenset)):
        value = sorted(value, key=str)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)

