"""Exact-arithmetic verification of logarithmic Macdonald-Morris constant-term
identities, W_{2,p} triplet-algebra characters and Zhu center polynomial data.

Thin wrapper over the C++ core. Rationals cross the boundary as "num/den"
strings; ``fractions.Fraction`` accepts them directly.
"""

from wlab._wlab import (
    BudgetExceeded,
    ResourceError,
    UsageError,
    brute_residue,
    brute_residue_at,
    calibrate_theta_formula,
    center_nilpotency,
    central_charge,
    closed_form,
    closure_rank,
    conformal_weight,
    conjectured_base_constant,
    eta,
    f2p,
    fock_lowest_weight,
    jordan_blocks,
    log_order_bound,
    minimal_model_char,
    phi_inverse,
    ppoly,
    singlet_fock_check,
    singlet_relation_shape,
    step_factor,
    theorem_ct_rhs,
    theta,
    triplet_char,
    verify_theorem_ct,
    virasoro_char,
    weight_set,
    x2p_lattice_check,
)

__all__ = [
    "BudgetExceeded",
    "ResourceError",
    "UsageError",
    "brute_residue",
    "brute_residue_at",
    "calibrate_theta_formula",
    "center_nilpotency",
    "central_charge",
    "closed_form",
    "closure_rank",
    "conformal_weight",
    "conjectured_base_constant",
    "eta",
    "f2p",
    "fock_lowest_weight",
    "jordan_blocks",
    "log_order_bound",
    "minimal_model_char",
    "phi_inverse",
    "ppoly",
    "singlet_fock_check",
    "singlet_relation_shape",
    "step_factor",
    "theorem_ct_rhs",
    "theta",
    "triplet_char",
    "verify_theorem_ct",
    "virasoro_char",
    "weight_set",
    "x2p_lattice_check",
]
