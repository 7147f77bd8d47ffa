"""Analytic performance of a linear policy against worst-case arrivals.

gamma_lower is the exact throughput of the slope-s policy when arrivals
follow the two-point extremal distribution at (c, p); gamma_upper = r(pc)
bounds the throughput of every policy under every arrival distribution with
that mean-to-capacity ratio.  Their ratio and difference are the
multiplicative-factor and additive-gap certificates; gap_limit is the
closed-form c -> infinity limit of the gap.
"""

import math
from dataclasses import dataclass

from . import _backend
from .dist import reward

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class EvalPoint:
    """A (battery capacity, mean-to-capacity ratio) evaluation point."""

    c: float
    p: float

    def __post_init__(self):
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise ValueError(f"capacity must be positive and finite, got {self.c}")
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"mean-to-capacity ratio must be in (0, 1), got {self.p}")


def _check_slope(s):
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"slope must be in [0, 1], got {s}")


def gamma_lower(pt, s, tol=DEFAULT_TOL):
    """Worst-case throughput of the slope-s linear policy at pt, in nats.

    Truncation error is at most tol (absolute).  s=1 gives the exact single
    term p*r(c); s=0 is the zero policy with throughput 0.
    """
    _check_slope(s)
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    return _backend.kernels.gamma_series(pt.c, pt.p, s, tol)


def gamma_upper(pt):
    """Upper bound r(p*c) on the throughput of any policy at pt."""
    return reward(pt.p * pt.c)


def nominal_factor(pt, s, tol=DEFAULT_TOL):
    """gamma_lower / gamma_upper: the multiplicative-factor certificate."""
    return gamma_lower(pt, s, tol) / gamma_upper(pt)


def nominal_gap(pt, s, tol=DEFAULT_TOL):
    """gamma_upper - gamma_lower: the additive-gap certificate, in nats."""
    return gamma_upper(pt) - gamma_lower(pt, s, tol)


def gap_limit(p, s):
    """Large-capacity limit of the additive gap at slope s, in closed form.

    Equals (log(p/s) - ((1-p)/p) log(1-s)) / 2.  s=1 returns +inf (the gap
    of the greedy policy grows without bound as c -> infinity).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must be in (0, 1), got {p}")
    if not 0.0 < s <= 1.0:
        raise ValueError(f"slope must be in (0, 1], got {s}")
    if s == 1.0:
        return math.inf
    return 0.5 * (math.log(p / s) - (1.0 - p) / p * math.log1p(-s))
