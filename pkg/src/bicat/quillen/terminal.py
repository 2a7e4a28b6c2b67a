"""Initial 1-cells, inc-lax terminal objects, and preservation of initial components."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.model import ValidationReport, Violation
from ..errors import MalformedInput, NoUniqueSolution
from ..functors import (
    LaxTransformation,
    constant_pseudofunctor,
    identity_functor,
    validate_lax_transformation,
)


def is_initial(D, h):
    """Exactly one 2-cell out of ``h`` to every parallel 1-cell."""
    x, y = D.one_cells[h]
    return all(len(D.cells(h, h1)) == 1 for h1 in D.hom(x, y))


def initial_object_in_hom(D, X, Y):
    """The canonical-least initial 1-cell ``X -> Y``, or ``None``."""
    D.identity(X)
    D.identity(Y)
    for h in D.hom(X, Y):
        if is_initial(D, h):
            return h
    return None


def unique_cell(D, f, g, site):
    cells = D.cells(f, g)
    if len(cells) != 1:
        raise NoUniqueSolution(len(cells), site)
    return cells[0]


@dataclass
class IncLaxTerminalData:
    """``k: Id_D -> const(terminal)`` with initial components and ``k_terminal`` the identity."""

    terminal: str
    k1: dict  # object -> 1-cell X -> terminal
    k2: dict  # 1-cell u -> 2-cell 1 k_X => k_Y u
    candidates: list = field(default_factory=list)

    def transformation(self, D):
        return LaxTransformation(
            identity_functor(D),
            constant_pseudofunctor(D, D, self.terminal),
            dict(self.k1),
            dict(self.k2),
            name=f"k_{self.terminal}",
        )


def terminal_data_from_components(D, bot, k1):
    """Complete component 1-cells ``k1`` with ``k_u = (unique k_X => k_Y u) . l``."""
    k2 = {}
    for u in sorted(D.one_cells):
        x, y = D.one_cells[u]
        kx = k1[x]
        universal = unique_cell(D, kx, D.comp(k1[y], u), ("k2", u))
        k2[u] = D.v(universal, D.l(kx))
    return IncLaxTerminalData(bot, dict(k1), k2)


def check_inc_lax_terminal(D, data):
    """Check every inc-lax terminal condition on supplied data."""
    bot = data.terminal
    if bot not in D.objects:
        raise MalformedInput(f"{bot!r} is not an object")
    if set(data.k1) != set(D.objects) or set(data.k2) != set(D.one_cells):
        raise MalformedInput("terminal data does not cover every object and 1-cell")
    found = []
    if data.k1[bot] != D.id1[bot]:
        found.append(Violation("identity-component", (bot,), data.k1[bot], D.id1[bot]))
    for x in D.sorted_objects():
        k = data.k1[x]
        if D.one_cells.get(k) != (x, bot):
            raise MalformedInput(f"k1[{x}] = {k!r} is not a 1-cell {x} -> {bot}")
        if not is_initial(D, k):
            found.append(Violation("initial-component", (x, k)))
    if not found:
        for u in sorted(D.one_cells):
            x, y = D.one_cells[u]
            cells = D.cells(data.k1[x], D.comp(data.k1[y], u))
            want = D.v(cells[0], D.l(data.k1[x]))
            if data.k2[u] != want:
                found.append(Violation("universal-2-cell", (u,), data.k2[u], want))
    if not found:
        # only well-typed once the components are right
        found.extend(validate_lax_transformation(data.transformation(D)).violations)
    return ValidationReport.from_violations(found, terminal=bot)


def inc_lax_data_at(D, bot):
    """Canonical inc-lax terminal data at ``bot``, or ``None`` if ``bot`` does not qualify."""
    if not is_initial(D, D.id1[bot]):
        return None
    k1 = {}
    for x in D.sorted_objects():
        k = D.id1[bot] if x == bot else initial_object_in_hom(D, x, bot)
        if k is None:
            return None
        k1[x] = k
    data = terminal_data_from_components(D, bot, k1)
    if not validate_lax_transformation(data.transformation(D)).ok:
        return None
    return data


def find_inc_lax_terminal(D):
    """The canonical-least inc-lax terminal object with its data, or ``None``.

    ``candidates`` on the result lists every object that qualifies.
    """
    found = {}
    for x in D.sorted_objects():
        data = inc_lax_data_at(D, x)
        if data is not None:
            found[x] = data
    if not found:
        return None
    best = found[min(found)]
    best.candidates = sorted(found)
    return best


def check_preserves_inc(Fu, kX, kY):
    """Whether ``k'_{Fu(bot)} . Fu(k_Z)`` is initial for every object ``Z`` of the source slice."""
    if kX is None or kY is None:
        raise MalformedInput("both slices need inc-lax terminal data")
    DX, DY = Fu.src, Fu.tgt
    image = Fu.obj_map[kX.terminal]
    to_bot = kY.k1[image]
    found = []
    for z in DX.sorted_objects():
        h = DY.comp(to_bot, Fu.one_map[kX.k1[z]])
        if not is_initial(DY, h):
            found.append(Violation("preserves-initial", (z, h)))
    return ValidationReport.from_violations(found)
