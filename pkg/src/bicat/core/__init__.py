"""Finite bicategories as explicit tables, with an exhaustive axiom validator."""

from .generators import (
    JOIN2,
    TRIVIAL,
    Z2,
    Z2_COEFFS,
    Z3,
    Monoid,
    bz2,
    chaotic,
    cyclic_group,
    deloop_monoid,
    one,
    p2,
    two_group,
    two_group_z2,
    z2_cocycle,
)
from .model import Bicategory, ValidationReport, Violation, encode
from .validate import check_derived_unitors, check_well_formed, validate_bicategory

__all__ = [
    "Bicategory",
    "JOIN2",
    "Monoid",
    "TRIVIAL",
    "ValidationReport",
    "Violation",
    "Z2",
    "Z2_COEFFS",
    "Z3",
    "bz2",
    "chaotic",
    "check_derived_unitors",
    "check_well_formed",
    "cyclic_group",
    "deloop_monoid",
    "encode",
    "one",
    "p2",
    "two_group",
    "two_group_z2",
    "validate_bicategory",
    "z2_cocycle",
]
