"""Seeded Monte Carlo simulation of the battery recursion.

Runs the exact state recursion B_{t+1} = min(B_t - G_t + E_{t+1}, c) for an
arbitrary stationary policy b -> g and discrete arrival distribution, and
estimates long-term average throughput as the time average of r(G_t) after a
burn-in.  Serial correlation through the battery state rules out the naive
i.i.d. variance estimate, so the standard error comes from batch means.

Linear policies dispatch to the compiled kernel; everything else runs a plain
Python loop with the same accumulation order, so the two paths agree bit for
bit on shared cases.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._backend import kernels
from .dist import DiscreteDistribution

GENERATOR_ID = "numpy-pcg64"
N_BATCHES = 32


class LinearPolicy:
    """Stationary policy spending the fraction s of the battery each step."""

    __slots__ = ("s",)

    def __init__(self, s):
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"slope must lie in [0,1], got {s}")
        self.s = float(s)

    def __call__(self, b):
        return self.s * b

    def __repr__(self):
        return f"LinearPolicy(s={self.s})"


def linear_policy(s):
    """The policy b -> s*b; s=1 is greedy, s=0 never transmits."""
    return LinearPolicy(s)


@dataclass(frozen=True)
class SimConfig:
    """One simulation run: capacity, arrivals, policy, length, and seed."""

    c: float
    q: DiscreteDistribution
    policy: object
    horizon: int
    burn_in: int = 0
    seed: int = 0
    initial_battery: Optional[float] = None

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise ValueError(f"capacity must be positive and finite, got {self.c}")
        if not isinstance(self.q, DiscreteDistribution):
            raise TypeError(f"arrivals must be a DiscreteDistribution, got {type(self.q).__name__}")
        if not callable(self.policy):
            raise TypeError("policy must be callable b -> g")
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool):
            raise TypeError(f"horizon must be an int, got {self.horizon!r}")
        if not isinstance(self.burn_in, int) or isinstance(self.burn_in, bool):
            raise TypeError(f"burn_in must be an int, got {self.burn_in!r}")
        if not 0 <= self.burn_in < self.horizon:
            raise ValueError(f"need horizon > burn_in >= 0, got horizon={self.horizon}, burn_in={self.burn_in}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise TypeError(f"seed must be an int, got {self.seed!r}")
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")
        if self.initial_battery is not None and not 0.0 <= self.initial_battery <= self.c:
            raise ValueError(f"initial battery {self.initial_battery} outside [0, {self.c}]")


@dataclass(frozen=True)
class SimReport:
    """Estimated throughput with a batch-means standard error."""

    throughput_estimate: float
    std_error: float
    steps_used: int
    seed: int
    generator: str = GENERATOR_ID


def _draw_arrivals(q, n, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    values = np.asarray(q.values, dtype=np.float64)
    probs = np.asarray(q.probs, dtype=np.float64)
    return rng.choice(values, size=n, p=probs)


def _run_generic(policy, b1, arrivals, c, burn_in, n_batches):
    # same accumulation order as the compiled linear kernel
    horizon = len(arrivals) + 1
    n_used = horizon - burn_in
    batch_len = n_used // n_batches
    sums = [0.0] * n_batches
    total = 0.0
    b = float(b1)
    k = 0
    for step in range(1, horizon + 1):
        g = float(policy(b))
        if g < 0.0 or g > b:
            raise RuntimeError(f"inadmissible control g={g} for battery b={b} at step {step}")
        if step > burn_in:
            rw = 0.5 * math.log1p(g)
            total += rw
            j = k // batch_len if batch_len else 0
            if j < n_batches:
                sums[j] += rw
            k += 1
        if step < horizon:
            b = b - g + arrivals[step - 1]
            if b > c:
                b = c
    mean = total / n_used
    if n_batches > 1 and batch_len > 0:
        bm = [x / batch_len for x in sums]
        mu = sum(bm) / n_batches
        var = sum((x - mu) ** 2 for x in bm) / (n_batches - 1)
        se = math.sqrt(var / n_batches)
    else:
        se = 0.0
    return mean, se, n_used


def _run(policy, b1, rest, c, burn_in):
    """Dispatch one run on a fixed arrival stream rest = (E_2, ..., E_n)."""
    if isinstance(policy, LinearPolicy):
        mean, se, n_used, _, _ = kernels.simulate_linear(float(b1), rest, float(c), policy.s, int(burn_in), N_BATCHES)
        return mean, se, n_used
    return _run_generic(policy, b1, rest, c, burn_in, N_BATCHES)


def simulate(cfg):
    """Run the battery recursion and report the throughput estimate.

    Deterministic in cfg.seed: the same configuration always yields the
    identical report.  The default initial battery is min(first arrival, c).
    """
    arr = _draw_arrivals(cfg.q, cfg.horizon, cfg.seed)
    if cfg.initial_battery is None:
        b1 = min(float(arr[0]), cfg.c)
    else:
        b1 = float(cfg.initial_battery)
    rest = np.ascontiguousarray(arr[1:], dtype=np.float64)
    mean, se, n_used = _run(cfg.policy, b1, rest, cfg.c, cfg.burn_in)
    return SimReport(mean, se, n_used, cfg.seed)


def compare_policies(c, q, policies, horizon, seed, burn_in=None):
    """Simulate several policies on one common arrival stream.

    Sharing the stream (common random numbers) makes throughput differences
    far less noisy than independent runs.  Returns one SimReport per policy,
    in input order.
    """
    if burn_in is None:
        burn_in = min(10_000, horizon // 10)
    cfg0 = SimConfig(c, q, policies[0] if policies else linear_policy(1.0), horizon, burn_in, seed)
    arr = _draw_arrivals(q, cfg0.horizon, cfg0.seed)
    b1 = min(float(arr[0]), c)
    rest = np.ascontiguousarray(arr[1:], dtype=np.float64)
    reports = []
    for pol in policies:
        mean, se, n_used = _run(pol, b1, rest, c, burn_in)
        reports.append(SimReport(mean, se, n_used, seed))
    return reports
