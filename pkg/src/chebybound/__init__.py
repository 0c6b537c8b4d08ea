"""Explicit numerical bounds for Chebyshev's psi and theta, recomputed from
self-generated zeta-zero data and verified against exact sieve values."""

from .config import A_DEFAULT, FIXED_D, KADIRI_R0, RunConfig
from .epsilon import (BoundParams, EpsilonCertificate, XScale, best_analytic,
                      epsilon_asymptotic, epsilon_for, epsilon_half_power,
                      epsilon_refined, optimize_row)
from .zeros import (SumBound, ZeroEntry, ZeroTable, cached_table, count_slack,
                    find_zeros, smooth_count, sum_inv_gamma_pow, sum_inv_rho)

__version__ = "0.1.0"

__all__ = [
    "A_DEFAULT", "FIXED_D", "KADIRI_R0", "RunConfig",
    "BoundParams", "EpsilonCertificate", "XScale", "best_analytic",
    "epsilon_asymptotic", "epsilon_for", "epsilon_half_power",
    "epsilon_refined", "optimize_row",
    "SumBound", "ZeroEntry", "ZeroTable", "cached_table", "count_slack",
    "find_zeros", "smooth_count", "sum_inv_gamma_pow", "sum_inv_rho",
    "__version__",
]
