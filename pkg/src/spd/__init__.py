"""Exact computational-algebra toolkit: derivative flattenings of
determinant/permanent families, Hilbert-function growth bounds, explicit
degenerations, and four-regime dimension comparisons at any scale."""

from .bounds import (BigQuantity, IntervalEstimate, compare_quantities,
                     det_partials_count, det_shifted_lower, full_degree_component,
                     log_estimate, padded_ideal_upper, perm_partials_upper,
                     perm_shifted_upper, two_power_ideal_dim)
from .casecheck import (CaseRecord, CaseReport, CoverageResult, SweepResult,
                        case_check, check_case, classify, coverage_check,
                        theorem_sweep)
from .degenerations import DegenerationSpec, c1_block_substitution, c3_two_powers
from .flatten import (BudgetExceededError, GradedComponentBasis, ShiftParams,
                      matrix_rank, partial_space, random_prime, shifted_space)
from .macaulay import (MacaulayRep, binom_identity_check, comb0, corollary_growth,
                       macaulay_min_growth, macaulay_rep)
from .oracle import (MonomialSet, brute_rank, leading_monomials_of_minors,
                     monomial_ideal_component)
from .poly import (Monomial, ONE, SparsePolynomial, Substitution, VariableTable,
                   make_determinant, make_padded_permanent, make_permanent)

__version__ = "0.1.0"

__all__ = [
    "BigQuantity", "BudgetExceededError", "CaseRecord", "CaseReport",
    "CoverageResult", "DegenerationSpec", "GradedComponentBasis",
    "IntervalEstimate", "MacaulayRep", "Monomial", "MonomialSet", "ONE",
    "ShiftParams", "SparsePolynomial", "Substitution", "SweepResult",
    "VariableTable", "binom_identity_check", "brute_rank", "c1_block_substitution",
    "c3_two_powers", "case_check", "check_case", "classify", "comb0",
    "compare_quantities", "corollary_growth", "coverage_check",
    "det_partials_count", "det_shifted_lower", "full_degree_component",
    "leading_monomials_of_minors", "log_estimate", "macaulay_min_growth",
    "macaulay_rep", "make_determinant", "make_padded_permanent",
    "make_permanent", "matrix_rank", "monomial_ideal_component",
    "padded_ideal_upper", "partial_space", "perm_partials_upper",
    "perm_shifted_upper", "random_prime", "shifted_space", "theorem_sweep",
    "two_power_ideal_dim",
]
