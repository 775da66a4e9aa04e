"""Exact counting and cross-verification of rhombus tilings of hexagons.

Counts tilings of (a,b,c) hexagons by symmetry class four independent
ways: closed-form products, Pfaffians of exact skew-symmetric matrices,
nonintersecting lattice-path enumeration, and a brute-force geometric
census; plus floating-point checks of the arcsine limit law.
"""

from .asympt import AsymptReport, arcsin_prob, asympt_report, closed_rhs, f_summand, lemma_limit_lhs, r_float
from .oracle import TilingCensus, census, iter_tilings
from .errors import BudgetError
from .exact import ExactInt, ExactRational, binomial, double_factorial, factorial, pochhammer, poly_identity_check
from .formulas import (
    centered_count,
    centered_sym_count,
    centered_sym_value_even,
    centered_sym_value_odd,
    count_ST,
    count_T,
    factorization_check,
    prob_centered,
    prob_centered_sym,
    q_factor,
    r_factor,
    u_poly,
)
from .hexmatrices import build_M, build_N, r_entry_poly, r_entry_sum, t_entry
from .paths import PathConfig, h_count, h_weighted, m_path_config, n_path_config, signed_enumeration, stembridge_pf, sym_path_census
from .pfaffian import SkewMatrix, det, lambda_coeffs, mehta_wang_matrix, mehta_wang_pf, perturbed_mw_matrix, perturbed_mw_pf, pf, pf_reference
from .region import HexRegion, Lozenge, central_lozenge, hex_region

__version__ = "0.1.0"
