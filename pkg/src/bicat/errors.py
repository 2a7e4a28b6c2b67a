"""Exception types shared across the package.

Axiom failures are never raised; they are returned inside a
:class:`~bicat.core.ValidationReport`.  The exceptions below signal input that
cannot be checked at all, or a construction whose hypotheses turned out false.
"""


class BicatError(Exception):
    """Base class for every error raised by :mod:`bicat`."""


class MalformedInput(BicatError):
    """Tables are partial, ill-typed, or reference ids that do not exist."""


class UnknownCell(BicatError):
    def __init__(self, name, kind="cell"):
        self.name = name
        self.kind = kind
        super().__init__(f"unknown {kind}: {name!r}")


class IllTyped(BicatError):
    def __init__(self, subexpression, reason=""):
        self.subexpression = subexpression
        self.reason = reason
        msg = f"ill-typed expression {subexpression!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class NoSolution(BicatError):
    """An exhaustive search that is guaranteed to succeed on valid input found nothing."""


class NoUniqueSolution(BicatError):
    def __init__(self, count, site):
        self.count = count
        self.site = site
        super().__init__(f"expected exactly one solution at {site}, found {count}")


class WitnessSearchFailed(BicatError):
    def __init__(self, stage, cell):
        self.stage = stage
        self.cell = cell
        super().__init__(f"witness search failed at stage {stage!r} for {cell!r}")


class NotInvertible(BicatError):
    def __init__(self, obj, reason=""):
        self.obj = obj
        self.reason = reason
        msg = f"component at {obj!r} is not invertible"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class SchemaError(BicatError):
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        where = "/".join(str(p) for p in path) or "<root>"
        super().__init__(f"{where}: {reason}")
