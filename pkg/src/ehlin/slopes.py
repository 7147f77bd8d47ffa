"""Maximin-optimal slopes and per-capacity worst cases.

optimal_slope finds s*(c, p), the slope maximizing worst-case throughput at
a fixed evaluation point; stationarity_residual evaluates the interior
first-order condition; worst_p_for_c minimizes the multiplicative factor
F*(c, p) over p at fixed capacity.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from ._golden import golden_min
from .dist import reward
from .linear import DEFAULT_TOL, EvalPoint, gamma_upper

log = logging.getLogger(__name__)

DEFAULT_TOL_S = 1e-10
SEED_COUNT = 32          # multistart guard size for the slope search
SEED_SLACK = 1e-6        # restart when a seed beats golden-section by this


@dataclass(frozen=True)
class SlopeResult:
    """Optimal slope with its throughput and both certificates.

    restarted flags the multistart guard having overridden a golden-section
    run (never observed on the verified grids; kept as a diagnostic).
    """

    s_star: float
    gamma_at_star: float
    f_star: float
    g_star: float
    iterations: int
    restarted: bool = False


def greedy_is_optimal(pt):
    """True when the greedy slope s=1 is maximin optimal, i.e. c <= p/(1-p)."""
    return pt.c <= pt.p / (1.0 - pt.p)


def _guarded_max(c, p, lo, hi, tol_s, tol):
    """Golden-section max of the throughput over [lo, hi] with a seeded guard.

    Scans SEED_COUNT log-spaced slopes; if any beats the golden-section value
    by more than SEED_SLACK the search restarts on the bracket around the
    best seed and the better of the two runs wins.
    """
    ker = _backend.kernels
    s0, g0, it = ker.golden_max_gamma(c, p, lo, hi, tol_s, tol)
    seeds = np.geomspace(max(lo, 1e-300), hi, SEED_COUNT)
    gv = ker.gamma_series_batch(c, p, seeds, tol)
    j = int(np.argmax(gv))
    if gv[j] > g0 + SEED_SLACK:
        log.warning(
            "slope search at c=%g p=%g: seeded scan beat golden-section "
            "(%.3e > %.3e at s=%g); restarting around the seed",
            c, p, gv[j], g0, seeds[j],
        )
        lo2 = seeds[max(0, j - 1)]
        hi2 = seeds[min(SEED_COUNT - 1, j + 1)]
        s1, g1, it1 = ker.golden_max_gamma(c, p, lo2, hi2, tol_s, tol)
        if g1 > g0:
            return s1, g1, it + it1, True
        return s0, g0, it + it1, True
    return s0, g0, it, False


def optimal_slope(pt, tol_s=DEFAULT_TOL_S, tol=DEFAULT_TOL):
    """Maximin-optimal slope at pt.

    For c <= p/(1-p) the greedy slope 1 is exactly optimal.  Otherwise the
    throughput is unimodal in s and is maximized by golden-section on
    [p, 1] (the optimal slope never falls below p) to bracket width tol_s.
    """
    if tol_s <= 0.0:
        raise ValueError(f"tol_s must be positive, got {tol_s}")
    upper = gamma_upper(pt)
    if greedy_is_optimal(pt):
        g = pt.p * reward(pt.c)
        return SlopeResult(1.0, g, g / upper, upper - g, 0)
    s, g, it, restarted = _guarded_max(pt.c, pt.p, pt.p, 1.0, tol_s, tol)
    return SlopeResult(s, g, g / upper, upper - g, it, restarted)


def stationarity_residual(pt, s, tol=DEFAULT_TOL):
    """First-order optimality residual for an interior slope.

    Returns E_N[(s(N+1)-1)/(1+c s(1-s)^N)] - (s/p - 1) for geometric N with
    success probability p.  Positive below the optimal slope, negative above
    it, zero (within tolerance) exactly at the interior maximizer.  Requires
    s in (0, 1) and c > p/(1-p) (elsewhere the maximizer is the boundary
    s=1 and the equation does not characterize it).
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"stationarity residual needs s in (0, 1), got {s}")
    if greedy_is_optimal(pt):
        raise ValueError(
            f"stationarity residual needs c > p/(1-p); got c={pt.c}, p={pt.p}"
        )
    return _backend.kernels.stationarity_series(pt.c, pt.p, s, tol)


def slope_from_stationarity(pt, tol_s=DEFAULT_TOL_S, tol=DEFAULT_TOL):
    """Interior optimal slope found by root-finding the stationarity residual.

    Independent of the direct maximization; used to cross-check it.  The
    residual is positive just above s=p and negative just below s=1 (it
    vanishes again at s=1 itself, which is excluded from the bracket).
    """
    from scipy.optimize import brentq

    if greedy_is_optimal(pt):
        return 1.0
    f = lambda s: _backend.kernels.stationarity_series(pt.c, pt.p, s, tol)
    lo = pt.p * (1.0 + 1e-12)
    hi = 1.0 - 1e-9
    flo, fhi = f(lo), f(hi)
    if flo <= 0.0:
        return lo
    if fhi >= 0.0:
        return hi
    return brentq(f, lo, hi, xtol=tol_s, rtol=8.9e-16)


def worst_p_for_c(c, tol=1e-6, tol_s=DEFAULT_TOL_S, series_tol=DEFAULT_TOL):
    """Minimize F*(c, p) over p in (0, 1) at fixed capacity.

    Returns (p_star, f_lower_bar).  The minimum drifts toward 0 like 1/c, so
    the golden-section runs on log p with a generous bracket that expands if
    the minimizer pins to an edge; tol is the bracket width on the log axis.
    """
    if c <= 0.0:
        raise ValueError(f"capacity must be positive, got {c}")

    def fstar_logp(lp):
        return optimal_slope(EvalPoint(c, math.exp(lp)), tol_s, series_tol).f_star

    lo = math.log(min(1e-4, 0.01 / c))
    hi = math.log(1.0 - 1e-6)
    for _ in range(8):
        lp, fv, _ = golden_min(fstar_logp, lo, hi, tol)
        if lp - lo > 0.05 or lo < math.log(1e-15):
            break
        lo -= 5.0  # minimizer pinned to the small-p edge: widen and retry
    return math.exp(lp), fv
