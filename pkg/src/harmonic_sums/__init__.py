"""Exact alternating binomial harmonic sums.

The package computes S(n, m) = sum_{k=1..n} C(n,k) (-1)^(k-1) / k^m by five
independent exact algorithms, machine-verifies the finite identities that
surround these numbers, and evaluates the geometrically convergent series
built on them (zeta values among others) to arbitrary precision with
rigorous error bounds.
"""

from __future__ import annotations

from .approx import ApproxReal
from .exact import (
    Polynomial,
    binomial,
    binomial_row,
    forward_difference_n,
    lemma11_lhs,
    lemma11_rhs,
    poly_eval,
)
from .harmonic import HarmonicTable, build_harmonic_table, harmonic
from .identities import (
    DEFAULT_SEED,
    IdentityReport,
    SuiteConfig,
    all_pass,
    run_all_suites,
    verify_bang,
    verify_boole_gould,
    verify_cubic_telescoping,
    verify_dilcher,
    verify_five_way,
    verify_harmonic_ladder,
    verify_inversion_pair,
)
from .powerseries import (
    PowerSeries,
    gf_coefficients,
    gf_integrated_coefficients,
    ps_compose,
    ps_geometric,
    ps_mul,
    ps_polylog,
)
from .refvalues import (
    bernoulli_even_list,
    inverse_golden_ratio,
    log2_reference,
    log_inverse_golden_ratio,
    sqrt5_reference,
    zeta_reference,
)
from .snm import (
    NESTED_GUARD,
    SnmTable,
    build_snm_table,
    snm_bell,
    snm_closed_form,
    snm_direct,
    snm_nested,
    snm_nested_prefix,
    snm_newton,
    stirling2,
)
from .zetaseries import (
    alternating_point_check,
    golden_ratio_check,
    li_value,
    negative_order_check,
    snm_series_sum,
    snm_tail_bound,
    zeta_via_sum,
    zeta_via_weighted_sum,
)

__version__ = "0.1.0"
