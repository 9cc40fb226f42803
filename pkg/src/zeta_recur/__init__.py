"""Exact even-integer zeta values from a contour recursion, with numerical
verification of every integral identity the derivation rests on.

See docs/derivation.md for the identity chain and README.md for usage.
"""

from .exact import (
    AlphaCoeff,
    Rational,
    ZetaEvenValue,
    alpha_coeff,
    bernoulli,
    binomial,
    gamma_int,
    recursion_divisor,
    render_decimal,
    zeta_even_euler,
    zeta_even_recursive,
)
from .identities import (
    ContourReport,
    IdentityId,
    IdentityReport,
    LimitComponents,
    contour_closure,
    cot_power_integral,
    eq9_components,
    expanded_alpha_term,
    expanded_real_identity,
    odd_zeta_from_contour,
    right_side_bound,
    verify_bose_integral,
    verify_eq5,
    verify_eq9,
    verify_fermi_integral,
    verify_log2_identity,
    verify_odd_zeta,
    verify_zeta2,
    zeta2_from_contour,
    zeta_series,
)
from .machin import pi_digits
from .quadrature import (
    QuadratureResult,
    Segment,
    bose_integrand,
    cot_kernel,
    fermi_integrand,
    get_eval_budget,
    integrate_finite,
    integrate_segment,
    integrate_semi_infinite,
    set_eval_budget,
    tail_bound,
    truncation_point,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaCoeff",
    "ContourReport",
    "IdentityId",
    "IdentityReport",
    "LimitComponents",
    "QuadratureResult",
    "Rational",
    "Segment",
    "ZetaEvenValue",
    "alpha_coeff",
    "bernoulli",
    "binomial",
    "bose_integrand",
    "contour_closure",
    "cot_kernel",
    "cot_power_integral",
    "eq9_components",
    "expanded_alpha_term",
    "expanded_real_identity",
    "fermi_integrand",
    "gamma_int",
    "get_eval_budget",
    "integrate_finite",
    "integrate_segment",
    "integrate_semi_infinite",
    "odd_zeta_from_contour",
    "pi_digits",
    "recursion_divisor",
    "render_decimal",
    "right_side_bound",
    "set_eval_budget",
    "tail_bound",
    "truncation_point",
    "verify_bose_integral",
    "verify_eq5",
    "verify_eq9",
    "verify_fermi_integral",
    "verify_log2_identity",
    "verify_odd_zeta",
    "verify_zeta2",
    "zeta2_from_contour",
    "zeta_even_euler",
    "zeta_even_recursive",
    "zeta_series",
]
