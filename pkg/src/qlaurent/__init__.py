"""Exact and asymptotic Laurent coefficients of 1/((q;q)_N) at roots of
unity, partial-fraction (Sylvester wave) decompositions of restricted
partition counts, and the saddle-point machinery behind their large-N
behaviour."""

from .cyclotomic import CyclotomicElement, cyclotomic_polynomial, euler_phi
from .laurent import ExactLaurentSeries
from .exact_coeffs import (
    CoeffRequest,
    laurent_coeff_exact,
    laurent_coeff_numeric,
    laurent_expansion_oracle,
    partial_fraction_residual,
    rademacher_coeff,
    sylvester_wave_exact,
    sylvester_wave_numeric,
)

__all__ = [
    "CyclotomicElement",
    "ExactLaurentSeries",
    "CoeffRequest",
    "cyclotomic_polynomial",
    "euler_phi",
    "laurent_coeff_exact",
    "laurent_coeff_numeric",
    "laurent_expansion_oracle",
    "partial_fraction_residual",
    "rademacher_coeff",
    "sylvester_wave_exact",
    "sylvester_wave_numeric",
]
