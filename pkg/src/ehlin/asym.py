"""Small-p asymptotics: the integral throughput limit and minimax constants.

As p -> 0 with c = b/p and s = a*p, the worst-case throughput approaches

    gamma0(a, b) = integral_0^inf e^-x r(a b e^-ax) dx,

and the best multiplicative factor approaches the minimax value of
gamma0(a, b)/r(b): a maximization over the slope ratio a nested inside a
minimization over the capacity-mean product b.  The resulting constants
(a_star, b_star, f_lower_bar) feed the universal-slope approximations.
"""

import logging
import math
from dataclasses import dataclass

from scipy.integrate import quad

from . import _backend
from ._golden import golden_max, golden_min
from .dist import reward

log = logging.getLogger(__name__)

QUAD_TOL = 1e-12        # inner quadrature budget
ALPHA_TOL = 1e-8        # bracket width for the a-search
B_TOL = 1e-7            # bracket width for the outer search on log b
SCAN_POINTS = 1024      # single-peak certification scan


@dataclass(frozen=True)
class MinimaxConstants:
    """(a_star, b_star, f_lower_bar): the small-p minimax point and value."""

    a_star: float
    b_star: float
    f_lower_bar: float


def gamma0(a, b, tol=QUAD_TOL):
    """Integral throughput limit, via the substitution u = e^-x.

    Evaluates integral_0^1 r(a b u^a) du by adaptive quadrature to absolute
    tolerance tol; the transformed integrand is smooth on [0, 1] for a >= 1.
    """
    if a < 1.0:
        raise ValueError(f"slope ratio must be >= 1, got {a}")
    if b <= 0.0:
        raise ValueError(f"capacity-mean product must be positive, got {b}")
    val, _ = quad(
        lambda u: 0.5 * math.log1p(a * b * u**a),
        0.0,
        1.0,
        epsabs=tol,
        epsrel=1e-13,
        limit=200,
    )
    return val


def alpha_hat(b, tol=ALPHA_TOL, quad_tol=QUAD_TOL):
    """Slope ratio maximizing gamma0(., b); the small-p limit of s*(b/p,p)/p.

    Golden-section over a in [1, A]; A grows geometrically until the maximum
    is interior (or the a=1 boundary is certified by the search collapsing
    onto it).
    """
    if b <= 0.0:
        raise ValueError(f"capacity-mean product must be positive, got {b}")
    hi = 8.0
    while True:
        a, _, _ = golden_max(lambda x: gamma0(x, b, quad_tol), 1.0, hi, tol)
        if a < 0.9 * hi or hi > 1e9:
            return a
        hi *= 4.0


def _h(b, quad_tol=QUAD_TOL):
    """The objective of the outer minimization: gamma0(alpha_hat(b), b)/r(b)."""
    return gamma0(alpha_hat(b, quad_tol=quad_tol), b, quad_tol) / reward(b)


def minimax_constants(tol=B_TOL):
    """Compute (a_star, b_star, f_lower_bar) by nested golden-section.

    The outer search minimizes over log b on a bracket generously containing
    the minimizer; before trusting the inner maximization, the single-peak
    shape of gamma0(., b_star) is re-checked on a 1024-point scan (a warning
    and a scan-seeded restart follow if it ever fails).
    """
    lb, fv, _ = golden_min(lambda lb: _h(math.exp(lb)), math.log(0.05), math.log(50.0), tol)
    b_star = math.exp(lb)
    a_star = alpha_hat(b_star)
    a_grid = [1.0 + (max(4.0 * a_star, 20.0) - 1.0) * i / (SCAN_POINTS - 1) for i in range(SCAN_POINTS)]
    vals = [gamma0(a, b_star, 1e-10) for a in a_grid]
    rises = 0
    falls = 0
    bad = False
    for i in range(1, SCAN_POINTS):
        d = vals[i] - vals[i - 1]
        if d > 1e-13:
            rises += 1
            if falls:
                bad = True  # rose again after the peak: not single-peaked
                break
        elif d < -1e-13:
            falls += 1
    if bad:
        log.warning("gamma0(., b*=%g) failed the single-peak scan; reseeding from the scan argmax", b_star)
        j = max(range(SCAN_POINTS), key=lambda i: vals[i])
        lo = a_grid[max(0, j - 1)]
        hi = a_grid[min(SCAN_POINTS - 1, j + 1)]
        a_star, _, _ = golden_max(lambda x: gamma0(x, b_star), lo, hi, ALPHA_TOL)
        fv = gamma0(a_star, b_star) / reward(b_star)
    return MinimaxConstants(a_star, b_star, fv)


_CACHE = {}


def get_minimax_constants():
    """minimax_constants() computed once per process and cached."""
    if "c" not in _CACHE:
        _CACHE["c"] = minimax_constants()
    return _CACHE["c"]


def sandwich_check(a, b, p, tol=1e-12):
    """Distance of Gamma(b/p, p, ap) - gamma0(a, b) from its two-sided bounds.

    The finite-p throughput is sandwiched around the integral limit:

        -a*g0*p <= delta <= g1*p*log(1/p) + e^2*g0*p,

    with g0 = r(ab) and g1 = g0/2 + a/4.  Returns (lower_slack, upper_slack),
    the nonnegative distances from each bound when the sandwich holds.
    Requires p < 1/a so the slope ap stays below 1.
    """
    if a < 1.0:
        raise ValueError(f"slope ratio must be >= 1, got {a}")
    if b <= 0.0:
        raise ValueError(f"capacity-mean product must be positive, got {b}")
    if not 0.0 < p < 1.0 / a:
        raise ValueError(f"need 0 < p < 1/a = {1.0 / a}, got {p}")
    delta = _backend.kernels.gamma_series(b / p, p, a * p, tol) - gamma0(a, b, tol)
    g0 = reward(a * b)
    g1 = 0.5 * g0 + 0.25 * a
    lower = -a * g0 * p
    upper = g1 * p * math.log(1.0 / p) + math.e**2 * g0 * p
    return delta - lower, upper - delta
