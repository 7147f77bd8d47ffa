"""Greedy-policy optimality threshold and its semi-universal bounds.

The greedy policy (spend the whole battery every step) is long-term optimal
exactly when the capacity c stays below a threshold c*(Q) determined by the
arrival distribution:

    c*(Q) = max{c >= 0 : 1/(1+c) >= sum over atoms x < c of q/(1+x)}.

The threshold is computed exactly by walking the segments between atoms,
where the right side is piecewise constant.  When only coarse facts about Q
are known (support interval and mean, clipped mean, or mean-to-capacity
ratio), the tightest bounds on c*(Q) over the matching family have closed
forms, implemented here together with the distributions that attain them.
"""

import math
from dataclasses import dataclass

from .dist import DiscreteDistribution, discrete

# left end of a capacity band where a given sup/inf envelope case applies
def _iota(x):
    return 2.0 * x + 1.0


@dataclass(frozen=True)
class IntervalMeanFamily:
    """Arrival distributions supported on [x_lo, x_hi] with mean mu."""

    x_lo: float
    x_hi: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.x_lo) and self.x_lo >= 0.0):
            raise ValueError(f"support minimum must be finite and >= 0, got {self.x_lo}")
        if not (math.isfinite(self.x_hi) and self.x_hi >= self.x_lo):
            raise ValueError(f"support maximum must be finite and >= x_lo, got {self.x_hi}")
        if not self.x_lo <= self.mu <= self.x_hi:
            raise ValueError(f"mean {self.mu} outside support [{self.x_lo}, {self.x_hi}]")

    @property
    def tau(self):
        return self.x_hi - self.x_lo - 1.0


@dataclass(frozen=True)
class BoundsResult:
    """Tightest threshold bounds over a family, plus attaining members.

    c_hi may be math.inf; in that case attaining_hi is a constructor
    n -> DiscreteDistribution whose thresholds grow without bound.
    Attainment fields are None when the bound is only approached by a
    sequence inside the family.
    """

    c_lo: float
    c_hi: float
    attaining_lo: object = None
    attaining_hi: object = None


def greedy_threshold(q):
    """Exact optimality threshold c*(Q) of the greedy policy.

    Between consecutive atoms the defining condition compares 1/(1+c)
    against a constant, so each segment either passes whole or caps the
    threshold at a rational point; failure is absorbing in c.
    """
    if not isinstance(q, DiscreteDistribution):
        raise TypeError(f"expected a DiscreteDistribution, got {type(q).__name__}")
    values = q.values
    probs = q.probs
    c_star = 0.0
    acc = 0.0  # sum of q_i/(1+x_i) over atoms strictly below the segment
    for j in range(len(values) + 1):
        left = values[j - 1] if j > 0 else 0.0
        right = values[j] if j < len(values) else math.inf
        if acc > 0.0:
            cap = 1.0 / acc - 1.0
            if cap < right:
                return max(cap, left, c_star)
        c_star = right
        if j < len(values):
            acc += probs[j] / (1.0 + values[j])
    return c_star  # unreachable: acc > 0 on the last segment


def f_lower(c, fam):
    """Infimum over the family of the threshold integrand at capacity c.

    Piecewise in c: zero up to the mean, then two transitional rational
    pieces, then the constant 1/(2(1+mu)).
    """
    if c < 0.0:
        raise ValueError(f"capacity must be >= 0, got {c}")
    x_lo, x_hi, mu = fam.x_lo, fam.x_hi, fam.mu
    if c <= mu:
        return 0.0
    if c > x_hi or c >= _iota(mu):
        return 0.5 / (1.0 + mu)
    if c < _iota(x_lo):
        return 0.5 * (c - mu) / ((1.0 + x_lo) * (c - x_lo))
    return 2.0 * (c - mu) / (c + 1.0) ** 2


def f_upper(c, fam):
    """Supremum over the family of the threshold integrand at capacity c."""
    if c < 0.0:
        raise ValueError(f"capacity must be >= 0, got {c}")
    x_lo, x_hi, mu = fam.x_lo, fam.x_hi, fam.mu
    if c <= x_lo:
        return 0.0
    if c > x_hi:
        return 0.5 * (1.0 + x_lo + x_hi - mu) / ((1.0 + x_lo) * (1.0 + x_hi))
    if c <= fam.tau:
        return 0.5 * (x_hi - mu) / ((x_hi - x_lo) * (1.0 + x_lo))
    if c <= mu:
        if x_hi == mu:
            return 0.0  # all admissible mass sits at x_hi >= c
        return 0.5 * (x_hi - mu) / ((x_hi - c) * (1.0 + c))
    return 0.5 * (1.0 + x_lo + c - mu) / ((1.0 + x_lo) * (1.0 + c))


def _upper_unclamped(x_lo, mu):
    """Upper threshold bound before capping at the support maximum."""
    if mu < 1.5 * x_lo + 0.5:
        s = x_lo + mu
        # the discriminant is >= 0 for mu >= x_lo but can round below zero
        # when mu == x_lo; clamp so the degenerate family stays in domain
        return 0.5 * (s + math.sqrt(max(s * s - 4.0 * (x_lo * x_lo + x_lo - mu), 0.0)))
    return (4.0 * mu + 1.0) / 3.0


def c_bounds_interval_mean(fam):
    """Tightest bounds on c*(Q) over all Q supported on [x_lo, x_hi] with mean mu.

    Both bounds are approached by sequences within the family (mixing any
    member toward the two-point distribution on {x_lo, x_hi}), so no exact
    attaining member is reported.
    """
    x_lo, x_hi, mu = fam.x_lo, fam.x_hi, fam.mu
    if mu < fam.tau:
        c_lo = (x_hi - x_lo) * (1.0 + x_lo) / (x_hi - mu) - 1.0
    else:
        c_lo = mu
    c_hi = min(_upper_unclamped(x_lo, mu), x_hi)
    return BoundsResult(c_lo, c_hi)


def lower_bound_is_x_hi(fam):
    """Whether the lower threshold bound reaches the support maximum."""
    return fam.mu == fam.x_hi


def upper_bound_is_x_hi(fam):
    """Whether the upper threshold bound reaches the support maximum."""
    return fam.x_hi <= _upper_unclamped(fam.x_lo, fam.mu)


def q_bar1(x_lo, mu_bar, c):
    """Two-atom distribution with clipped mean mu_bar whose threshold is c.

    Low-mean branch mixes x_lo with c; high-mean branch mixes (c-1)/2
    with c.  Collapses to a point mass when c equals x_lo.
    """
    if c == x_lo:
        return discrete([(c, 1.0)])
    if mu_bar < 1.5 * x_lo + 0.5:
        pairs = [(x_lo, (c - mu_bar) / (c - x_lo)), (c, (mu_bar - x_lo) / (c - x_lo))]
    else:
        pairs = [((c - 1.0) / 2.0, 2.0 * (c - mu_bar) / (c + 1.0)), (c, (2.0 * mu_bar - c + 1.0) / (c + 1.0))]
    return discrete([(v, w) for v, w in pairs if w > 0.0])


def clipped_bounds(x_lo, mu_bar):
    """Tightest bounds on c*(Q) given the least value x_lo and clipped mean mu_bar.

    The lower bound is mu_bar itself; the upper bound carries its attaining
    two-atom distribution.
    """
    if not (math.isfinite(x_lo) and x_lo >= 0.0):
        raise ValueError(f"least value must be finite and >= 0, got {x_lo}")
    if not (math.isfinite(mu_bar) and mu_bar >= x_lo):
        raise ValueError(f"clipped mean must be finite and >= x_lo, got {mu_bar}")
    c_hi = _upper_unclamped(x_lo, mu_bar)
    return BoundsResult(mu_bar, c_hi, None, q_bar1(x_lo, mu_bar, c_hi))


def q_bar2(p):
    """Two-atom distribution attaining the MCR threshold bound, for p < 3/4."""
    if not 0.0 < p < 0.75:
        raise ValueError(f"mean-to-capacity ratio must lie in (0, 3/4), got {p}")
    if p < 0.5:
        return discrete([(0.0, 1.0 - p), (p / (1.0 - p), p)])
    d = 3.0 - 4.0 * p
    return discrete([((2.0 * p - 1.0) / d, 0.5), (1.0 / d, 0.5)])


def q_bar3(p, n):
    """n-th member of the witness sequence for unbounded thresholds, p >= 3/4.

    Has mean-to-capacity ratio p at capacity n and threshold at least n.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    w_hi = (2.0 * p * n - n + 1.0) / (n + 1.0)
    if w_hi < 0.0:
        raise ValueError(f"ratio {p} too small for sequence index {n}")
    pairs = [((n - 1.0) / 2.0, 2.0 * n * (1.0 - p) / (n + 1.0)), (float(n), w_hi)]
    return discrete([(v, w) for v, w in pairs if w > 0.0])


def mcr_upper(p):
    """Tightest threshold bounds given only the mean-to-capacity ratio p.

    No nontrivial lower bound exists, so c_lo is 0.  The upper bound is
    p/(1-p) below p = 1/2, then 1/(3-4p), and +inf from p = 3/4 on, where
    attaining_hi becomes the witness-sequence constructor n -> Q.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must lie in (0,1), got {p}")
    if p < 0.5:
        return BoundsResult(0.0, p / (1.0 - p), None, q_bar2(p))
    if p < 0.75:
        return BoundsResult(0.0, 1.0 / (3.0 - 4.0 * p), None, q_bar2(p))
    return BoundsResult(0.0, math.inf, None, lambda n: q_bar3(p, n))
