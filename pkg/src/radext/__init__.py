"""Exact construction of the polynomial f with X1 = f(X1^m, ..., Xn^m, T)
where T = X1 + ... + Xn, over any field whose characteristic does not
divide m, together with verification tooling."""

from .charp import (
    MooreContext,
    delta_i_direct,
    delta_i_minpoly,
    delta_i_normal_basis,
    make_moore_context,
    moore_det_direct,
    moore_det_product,
    reconstruct_charp,
)
from .errors import RadextError
from .fields import (
    CyclotomicField,
    Element,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    min_frobenius_exponent,
    primitive_root_of_unity,
)
from .general import (
    GeneralContext,
    a_coeff_character,
    a_coeff_multinomial,
    minimal_poly_of_T,
    naive_formula,
    reconstruct_general,
    transpose_to,
    vandermonde_inverse_row,
)
from .multipoly import MultiPoly, RatFun, TPoly, is_in_power_subfield, ratfun_equal, sym_det
from .verify import TrialPlan, Verdict, verify_cross, verify_reconstruction

__all__ = [
    "CyclotomicField",
    "Element",
    "ExtensionField",
    "Field",
    "GeneralContext",
    "MooreContext",
    "MultiPoly",
    "PrimeField",
    "RadextError",
    "RatFun",
    "RationalField",
    "TPoly",
    "TrialPlan",
    "Verdict",
    "a_coeff_character",
    "a_coeff_multinomial",
    "delta_i_direct",
    "delta_i_minpoly",
    "delta_i_normal_basis",
    "is_in_power_subfield",
    "make_moore_context",
    "min_frobenius_exponent",
    "minimal_poly_of_T",
    "moore_det_direct",
    "moore_det_product",
    "naive_formula",
    "primitive_root_of_unity",
    "ratfun_equal",
    "reconstruct_charp",
    "reconstruct_general",
    "sym_det",
    "transpose_to",
    "vandermonde_inverse_row",
    "verify_cross",
    "verify_reconstruction",
]

__version__ = "0.1.0"
