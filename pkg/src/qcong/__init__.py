"""Exact q-series arithmetic and congruence checks for symmetric sums."""

from .bivariate import BiPoly, RatExpr
from .congruence import (
    NoncoprimeDenominatorError,
    NotInvertibleError,
    Residue,
    congruent,
    coprime_certify,
    invert,
    reduce,
    residual,
)
from .cyclotomic import CyclotomicModulus, cyclotomic, cyclotomic_power, totient
from .families import DEFAULT_COEFF_BOUND, FamilySpec, SplitMix64, generate, random_int_sequence
from .laurent import LaurentPoly, divides, divrem, divrem_laurent, exact_div, ext_gcd, one, poly_gcd, q, qpow, zero
from .qcalc import gauss_binomial, q_int, qbinom_base, qbinom_int, qpoch, qpoch_x
from .sweep import SweepConfig, SweepSummary, load_config, run_sweep
from .theorems import (
    AlphaParams,
    CheckReport,
    SymParams,
    check_classical_sun,
    check_even_sign_fact,
    check_guo_zeng,
    check_lemma_sn_binom,
    check_lemma_sn_minus1,
    check_s0_identity,
    check_sun_p_analogue,
    check_thm_1_1,
    check_thm_1_2,
    check_thm_2_1,
)
from .transforms import PolySeq, common_denominator, hat, hat_tilde_bridge_check, tilde, transform_matrix

__version__ = "0.1.0"

__all__ = [
    "AlphaParams",
    "BiPoly",
    "CheckReport",
    "CyclotomicModulus",
    "DEFAULT_COEFF_BOUND",
    "FamilySpec",
    "LaurentPoly",
    "NoncoprimeDenominatorError",
    "NotInvertibleError",
    "PolySeq",
    "RatExpr",
    "Residue",
    "SplitMix64",
    "SweepConfig",
    "SweepSummary",
    "SymParams",
    "check_classical_sun",
    "check_even_sign_fact",
    "check_guo_zeng",
    "check_lemma_sn_binom",
    "check_lemma_sn_minus1",
    "check_s0_identity",
    "check_sun_p_analogue",
    "check_thm_1_1",
    "check_thm_1_2",
    "check_thm_2_1",
    "common_denominator",
    "congruent",
    "coprime_certify",
    "cyclotomic",
    "cyclotomic_power",
    "divides",
    "divrem",
    "divrem_laurent",
    "exact_div",
    "ext_gcd",
    "gauss_binomial",
    "generate",
    "hat",
    "hat_tilde_bridge_check",
    "invert",
    "load_config",
    "one",
    "poly_gcd",
    "q",
    "q_int",
    "qbinom_base",
    "qbinom_int",
    "qpoch",
    "qpoch_x",
    "qpow",
    "random_int_sequence",
    "reduce",
    "residual",
    "run_sweep",
    "tilde",
    "totient",
    "transform_matrix",
    "zero",
]
