"""Exact enumeration of the ternary Knoedel bin-packing walks.

Every probability is returned as a :class:`fractions.Fraction`. States are
integers (box counts) or the string ``"beta"``.
"""

from ._knoedel import (
    DEFAULT_SEED,
    binom_general,
    brute_force_distribution,
    closed_form_probability,
    dp_distribution,
    f0_series,
    fbeta_coeff,
    g0_coeff,
    g0_series,
    gbeta_coeff,
    inv_one_minus_t_series,
    kernel_identities_check,
    residue_class,
    simulate,
    t_series,
    theorem1_coeff,
    theorem2_coeff,
    u1_series,
    verify,
)

__all__ = [
    "DEFAULT_SEED",
    "binom_general",
    "brute_force_distribution",
    "closed_form_probability",
    "dp_distribution",
    "f0_series",
    "fbeta_coeff",
    "g0_coeff",
    "g0_series",
    "gbeta_coeff",
    "inv_one_minus_t_series",
    "kernel_identities_check",
    "residue_class",
    "simulate",
    "t_series",
    "theorem1_coeff",
    "theorem2_coeff",
    "u1_series",
    "verify",
]
