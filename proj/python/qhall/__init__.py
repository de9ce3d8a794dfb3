from ._qhall import (
    canonical_basis,
    cartan_matrix,
    double_basis,
    hall_simple_product,
    ihall_dual_L,
    iqg_verify_presentation,
    nks_dot,
    nks_ldominant,
    positive_roots,
    rank1_iL,
    verify,
    verify_names,
)

__all__ = [
    "canonical_basis",
    "cartan_matrix",
    "double_basis",
    "hall_simple_product",
    "ihall_dual_L",
    "iqg_verify_presentation",
    "nks_dot",
    "nks_ldominant",
    "positive_roots",
    "rank1_iL",
    "verify",
    "verify_names",
]
