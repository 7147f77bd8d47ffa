"""Capacity-universal slopes at fixed mean-to-capacity ratio p.

For each p the multiplicative factor F_p(c, s) has a saddle point
(c_times, s_times): the slope s_times is worst-case optimal over all
capacities at that ratio, and c_times is the capacity attaining the
worst factor.  The minimax value F_p(c_times, s_times) equals the
maximin value max_s inf_c F_p(c, s); both sides are computed here,
together with the closed-form approximation of s_times, the
additive-gap-optimal slope s = p, and the limiting gap constant.
"""

import logging
import math
from dataclasses import dataclass

from ._golden import golden_max, golden_min
from .asym import get_minimax_constants
from .linear import EvalPoint, gamma_lower, gamma_upper, gap_limit
from .slopes import optimal_slope

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8      # bracket width on the log-capacity axis
SEED_COUNT = 32
SEED_SLACK = 1e-6
EDGE_PAD = 0.05         # argmin closer than this to a bracket edge triggers expansion
MAX_EXPAND = 8


@dataclass(frozen=True)
class SaddleResult:
    """Saddle point of F_p: capacity c_times, slope s_times, value f_times.

    residual is |max_s inf_c - inf_c max_s| estimated from one
    best-response sweep in c at the computed slope.
    """

    c_times: float
    s_times: float
    f_times: float
    iterations: int
    residual: float


def _min_lnc(f, lo, hi, tol):
    """Guarded golden minimization over a log-capacity bracket.

    Expands a pinned edge (up to MAX_EXPAND times on each side), then
    cross-checks the minimum against SEED_COUNT uniform seeds and restarts
    around any seed that beats it by more than SEED_SLACK.
    """
    total = 0
    for _ in range(MAX_EXPAND):
        x, v, it = golden_min(f, lo, hi, tol)
        total += it
        if x < lo + EDGE_PAD:
            lo -= 5.0
        elif x > hi - EDGE_PAD:
            hi += 5.0
        else:
            break
    step = (hi - lo) / (SEED_COUNT - 1)
    seeds = [lo + i * step for i in range(SEED_COUNT)]
    vals = [f(z) for z in seeds]
    j = min(range(SEED_COUNT), key=lambda i: vals[i])
    if vals[j] < v - SEED_SLACK:
        log.warning("log-capacity search at bracket [%g, %g] missed a better basin; restarting", lo, hi)
        x, v, it = golden_min(f, seeds[max(0, j - 1)], seeds[min(SEED_COUNT - 1, j + 1)], tol)
        total += it
    return x, v, total


def _psi(p, s, tol_lnc, series_tol=1e-12):
    """Best response in capacity: inf_c F_p(c, s) at a fixed slope.

    Returns (value, argmin capacity, iterations).
    """
    def f(lnc):
        pt = EvalPoint(math.exp(lnc), p)
        return gamma_lower(pt, s, series_tol) / gamma_upper(pt)

    lo = math.log(p / (1.0 - p)) - 2.0
    hi = math.log(1e7 / p)
    x, v, it = _min_lnc(f, lo, hi, tol_lnc)
    return v, math.exp(x), it


def saddle_point(p, tol=DEFAULT_TOL):
    """Saddle point (c_times, s_times) and value F_p(c_times, s_times).

    Minimizes the already-maximized factor F*(c, p) over log capacity
    (the two orders of optimization agree; the residual field reports the
    observed agreement).  The slope follows as s*(c_times, p).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")

    def f(lnc):
        return optimal_slope(EvalPoint(math.exp(lnc), p)).f_star

    lo = math.log(p / (1.0 - p))
    hi = math.log(1e7 / p)
    x, v, iterations = _min_lnc(f, lo, hi, tol)
    c_times = math.exp(x)
    res = optimal_slope(EvalPoint(c_times, p))
    psi_val, _, _ = _psi(p, res.s_star, tol)
    return SaddleResult(c_times, res.s_star, res.f_star, iterations, abs(res.f_star - psi_val))


def maximin_point(p, tol=DEFAULT_TOL):
    """The max-min side: argmax_s inf_c F_p(c, s).

    Returns (value, c, s, iterations) where (c, s) is the attaining pair.
    Agreement of value with SaddleResult.f_times certifies the saddle.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    count = [0]

    def psi(lns):
        v, _, it = _psi(p, math.exp(lns), tol)
        count[0] += it
        return v

    lo = math.log(0.5 * p)
    for _ in range(MAX_EXPAND):
        x, v, it = golden_max(psi, lo, 0.0, tol)
        count[0] += it
        if x > lo + EDGE_PAD:
            break
        lo -= 2.0
    s = math.exp(x)
    _, c, _ = _psi(p, s, tol)
    return v, c, s, count[0]


def s_times_approx(p):
    """Closed-form approximation of the saddle slope, accurate to 0.0015.

    shat(p) = min{(p/2) ln(1 + st) + (1 - p/2) st, 1} with
    st = a*^0.05 ln(1 + a*^0.95 p), using the computed constant a*.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    a = get_minimax_constants().a_star
    st = a**0.05 * math.log1p(a**0.95 * p)
    return min(0.5 * p * math.log1p(st) + (1.0 - 0.5 * p) * st, 1.0)


def additive_universal(p):
    """Additive-gap-optimal universal slope and its worst-case gap.

    The slope equals p itself; the gap is the large-capacity limit
    gap_limit(p, p), which rises to 1/2 as p -> 0.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    return p, gap_limit(p, p)


def g_times_sup():
    """Limiting worst-case additive gap of the saddle slopes: (a* - ln a*)/2."""
    a = get_minimax_constants().a_star
    return 0.5 * (a - math.log(a))


def g_times_curve(p, tol=DEFAULT_TOL):
    """Worst-case additive gap of the saddle slope at finite p.

    gap_limit(p, s_times(p)); stays below g_times_sup() and increases
    toward it as p -> 0.
    """
    return gap_limit(p, saddle_point(p, tol).s_times)
