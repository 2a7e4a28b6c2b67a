"""Inc-lax terminal objects, the Theorem A construction, and the Whitehead certifier."""

from .terminal import (
    IncLaxTerminalData,
    check_inc_lax_terminal,
    check_preserves_inc,
    find_inc_lax_terminal,
    inc_lax_data_at,
    initial_object_in_hom,
    is_initial,
    terminal_data_from_components,
)
from .theorem_a import (
    QuillenAResult,
    build_slices,
    check_hypotheses,
    construct_G,
    construct_unit_counit,
    quillen_a,
)
from .whitehead import (
    BiequivalenceCertificate,
    Counterexample,
    EsEfFf,
    LocalCheck,
    WhiteheadWitnesses,
    build_witnesses,
    check_certificate,
    check_es_ef_ff,
    ef_preimages,
    whitehead,
)

__all__ = [
    "BiequivalenceCertificate",
    "Counterexample",
    "EsEfFf",
    "IncLaxTerminalData",
    "LocalCheck",
    "QuillenAResult",
    "WhiteheadWitnesses",
    "build_slices",
    "build_witnesses",
    "check_certificate",
    "check_es_ef_ff",
    "check_hypotheses",
    "check_inc_lax_terminal",
    "check_preserves_inc",
    "construct_G",
    "construct_unit_counit",
    "ef_preimages",
    "find_inc_lax_terminal",
    "inc_lax_data_at",
    "initial_object_in_hom",
    "is_initial",
    "quillen_a",
    "terminal_data_from_components",
    "whitehead",
]
