"""Equilibrium bids for k-th price auctions with linear-density values.

The winner pays the k-th highest bid; with values drawn from
F(x) = a x**2/2 + b x on [0, omega] the symmetric equilibrium bid is a
finite series with Catalan-weighted coefficients, shaded above value
for k >= 3. This package computes those bids exactly, verifies them
three independent ways (symbolic differentiation ladders over exact
rational functions, Gauss-Legendre payment quadrature against the
revenue-equivalence benchmark, and sharded deterministic Monte Carlo),
and ships a CLI plus narrative demos on top.
"""

from .combinatorics import (ThetaTable, binom_real, catalan,
                            catalan_integral, catalan_recurrence_holds,
                            hagen_rothe_sides, jensen_sides, omega,
                            omega_bounds_hold, shifted_jensen_sides,
                            theta_coeff, theta_index_identity_holds,
                            theta_step_recurrence_holds, theta_table)
from .distributions import (NORMALIZATION_TOL, AuctionConfig,
                            LinearDensityDistribution,
                            conditional_order_stat_density,
                            highest_order_stat, make_linear, make_triangle,
                            make_uniform, sample_values)
from .equilibrium import (BidFunction, BidKind, MonotonicityResult,
                          bid_bounds_check, bid_from_psi_ladder,
                          bid_kth_series, bid_kth_triangle, bid_kth_uniform,
                          bid_second_price, bid_third_price,
                          monotonicity_certificate, phi_ladder_check,
                          psi_closed_form, psi_ladder_oracle,
                          series_coefficients)
from .polynomials import Polynomial, RationalFunction, polynomial_gcd
from .quadrature import (DEFAULT_QUADRATURE, QuadratureConfig,
                         QuadratureError, integrate)
from .verification import (SHARD_SIZE, MonteCarloResult, VerificationReport,
                           best_response_profile, expected_payment_benchmark,
                           expected_payment_quadrature, expected_revenue,
                           monte_carlo_expected_payment,
                           revenue_equivalence_check)

__version__ = "0.1.0"

__all__ = [
    "AuctionConfig",
    "BidFunction",
    "BidKind",
    "DEFAULT_QUADRATURE",
    "LinearDensityDistribution",
    "MonotonicityResult",
    "MonteCarloResult",
    "NORMALIZATION_TOL",
    "Polynomial",
    "QuadratureConfig",
    "QuadratureError",
    "RationalFunction",
    "SHARD_SIZE",
    "ThetaTable",
    "VerificationReport",
    "best_response_profile",
    "bid_bounds_check",
    "bid_from_psi_ladder",
    "bid_kth_series",
    "bid_kth_triangle",
    "bid_kth_uniform",
    "bid_second_price",
    "bid_third_price",
    "binom_real",
    "catalan",
    "catalan_integral",
    "catalan_recurrence_holds",
    "conditional_order_stat_density",
    "expected_payment_benchmark",
    "expected_payment_quadrature",
    "expected_revenue",
    "hagen_rothe_sides",
    "highest_order_stat",
    "integrate",
    "jensen_sides",
    "make_linear",
    "make_triangle",
    "make_uniform",
    "monotonicity_certificate",
    "monte_carlo_expected_payment",
    "omega",
    "omega_bounds_hold",
    "phi_ladder_check",
    "polynomial_gcd",
    "psi_closed_form",
    "psi_ladder_oracle",
    "revenue_equivalence_check",
    "sample_values",
    "series_coefficients",
    "shifted_jensen_sides",
    "theta_coeff",
    "theta_index_identity_holds",
    "theta_step_recurrence_holds",
    "theta_table",
]
