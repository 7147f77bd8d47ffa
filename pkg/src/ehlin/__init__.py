"""Numerical toolkit for linear power control under energy harvesting.

Evaluates the worst-case throughput of linear transmit policies, optimizes
their slopes in several senses (per-capacity maximin, capacity-universal
multiplicative factor, additive gap), computes the small-ratio asymptotic
constants, bounds the greedy policy's optimality threshold for coarsely
known arrival distributions, and cross-checks everything against a seeded
Monte Carlo simulator.  The `ehlin` command exposes the same operations and
regenerates the reference tables as CSV.
"""

__version__ = "0.1.0"

from ._backend import backend_name
from .asym import (MinimaxConstants, alpha_hat, gamma0, get_minimax_constants,
                   minimax_constants, sandwich_check)
from .dist import (DiscreteDistribution, bernoulli_extremal, clipped_mean,
                   discrete, load_distribution, mcr, parse_distribution,
                   reward, reward_deriv)
from .greedy import (BoundsResult, IntervalMeanFamily, c_bounds_interval_mean,
                     clipped_bounds, f_lower, f_upper, greedy_threshold,
                     lower_bound_is_x_hi, mcr_upper, q_bar1, q_bar2, q_bar3,
                     upper_bound_is_x_hi)
from .grids import (GRID_A, GRID_A1, GRID_B, GRID_B1, SweepSpec,
                    adaptive_refine, unbounded_transform)
from .linear import (EvalPoint, gamma_lower, gamma_upper, gap_limit,
                     nominal_factor, nominal_gap)
from .sim import (LinearPolicy, SimConfig, SimReport, compare_policies,
                  linear_policy, simulate)
from .slopes import (SlopeResult, greedy_is_optimal, optimal_slope,
                     slope_from_stationarity, stationarity_residual,
                     worst_p_for_c)
from .universal import (SaddleResult, additive_universal, g_times_curve,
                        g_times_sup, maximin_point, s_times_approx,
                        saddle_point)

__all__ = [
    "BoundsResult", "DiscreteDistribution", "EvalPoint", "GRID_A", "GRID_A1",
    "GRID_B", "GRID_B1", "IntervalMeanFamily", "LinearPolicy",
    "MinimaxConstants", "SaddleResult", "SimConfig", "SimReport",
    "SlopeResult", "SweepSpec", "adaptive_refine", "additive_universal",
    "alpha_hat", "backend_name", "bernoulli_extremal",
    "c_bounds_interval_mean", "clipped_bounds", "clipped_mean",
    "compare_policies", "discrete", "f_lower", "f_upper", "g_times_curve",
    "g_times_sup", "gamma0", "gamma_lower", "gamma_upper", "gap_limit",
    "get_minimax_constants", "greedy_is_optimal", "greedy_threshold",
    "linear_policy", "load_distribution", "lower_bound_is_x_hi", "mcr",
    "mcr_upper", "minimax_constants", "nominal_factor", "nominal_gap",
    "optimal_slope", "parse_distribution", "q_bar1", "q_bar2", "q_bar3",
    "reward", "reward_deriv", "s_times_approx", "saddle_point",
    "sandwich_check", "simulate", "slope_from_stationarity",
    "stationarity_residual", "unbounded_transform", "upper_bound_is_x_hi",
    "worst_p_for_c",
]
