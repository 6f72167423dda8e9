"""(1+2u)-constacyclic codes over Z4 + uZ4 and their Gray images over Z4."""

from .codes import (
    RCode,
    Z4Code,
    Z4StandardForm,
    build_constacyclic_code,
    build_cyclic_code,
    code_from_generators,
    code_report,
    gray_poly_generators,
    is_shift_invariant,
    lee_weight_enumerator,
    min_lee_distance,
    standard_form_z4,
    z4_cyclic_code,
)
from .factorz4 import Z4Factorization, factor_f2, factor_xn_minus_1_z4, graeffe_lift
from .maps import lee_distance, lee_weight_vec, mu_bar, phi_vec, sigma, tau
from .poly import QuotientCtx, RPoly, format_poly, format_z4poly, parse_poly, parse_z4poly
from .ring import ONE, ONE_PLUS_2U, RElem, THREE_PLUS_2U, U, ZERO, parse_relem

__all__ = [
    "RCode",
    "Z4Code",
    "Z4StandardForm",
    "Z4Factorization",
    "QuotientCtx",
    "RPoly",
    "RElem",
    "ZERO",
    "ONE",
    "U",
    "ONE_PLUS_2U",
    "THREE_PLUS_2U",
    "build_cyclic_code",
    "build_constacyclic_code",
    "code_from_generators",
    "code_report",
    "factor_f2",
    "factor_xn_minus_1_z4",
    "graeffe_lift",
    "gray_poly_generators",
    "is_shift_invariant",
    "lee_distance",
    "lee_weight_enumerator",
    "lee_weight_vec",
    "min_lee_distance",
    "mu_bar",
    "parse_poly",
    "parse_relem",
    "parse_z4poly",
    "format_poly",
    "format_z4poly",
    "phi_vec",
    "sigma",
    "standard_form_z4",
    "tau",
    "z4_cyclic_code",
]

__version__ = "0.1.0"
