"""Discrete energy-arrival distributions and derived statistics.

A distribution is a finite list of (value, probability) atoms.  Everything
downstream (worst-case throughput, greedy thresholds, the simulator) works
with these; the few continuous-support results in scope enter only through
closed forms, so finite support is all that is needed.
"""

import math
from dataclasses import dataclass

MERGE_TOL = 1e-12      # atom values closer than this are merged
NORM_DRIFT = 1e-9      # probability-sum drift renormalized silently up to this


@dataclass(frozen=True)
class DiscreteDistribution:
    """Finite-support probability distribution on the nonnegative reals.

    atoms: tuple of (value, prob), values strictly increasing, probs summing
    to 1.  Construct via ``discrete``; instances are immutable.
    """

    atoms: tuple

    @property
    def values(self):
        return tuple(v for v, _ in self.atoms)

    @property
    def probs(self):
        return tuple(q for _, q in self.atoms)

    @property
    def mean(self):
        return math.fsum(v * q for v, q in self.atoms)

    def __str__(self):
        inner = ", ".join(f"({v:g}, {q:g})" for v, q in self.atoms)
        return "{" + inner + "}"


def discrete(pairs):
    """Build a DiscreteDistribution from (value, probability) pairs.

    Values may come in any order; duplicates within 1e-12 are merged with
    probabilities summed.  The probability total may drift from 1 by at most
    1e-9 (renormalized); anything worse is rejected.
    """
    cleaned = []
    for v, q in pairs:
        v = float(v)
        q = float(q)
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"atom value must be finite and >= 0, got {v}")
        if not math.isfinite(q) or q < 0.0 or q > 1.0:
            raise ValueError(f"atom probability must be in [0, 1], got {q}")
        cleaned.append((v, q))
    if not cleaned:
        raise ValueError("distribution needs at least one atom")
    cleaned.sort()
    merged = [list(cleaned[0])]
    for v, q in cleaned[1:]:
        if v - merged[-1][0] <= MERGE_TOL:
            merged[-1][1] += q
        else:
            merged.append([v, q])
    total = math.fsum(q for _, q in merged)
    if abs(total - 1.0) > NORM_DRIFT:
        raise ValueError(f"probabilities sum to {total!r}, outside 1 +/- {NORM_DRIFT}")
    atoms = tuple((v, q / total) for v, q in merged)
    return DiscreteDistribution(atoms)


def reward(x):
    """Per-step reward of spending energy x: log(1+x)/2 nats."""
    if x < 0.0:
        raise ValueError(f"reward defined on x >= 0, got {x}")
    return 0.5 * math.log1p(x)


def reward_deriv(x):
    """Derivative of the reward: 1/(2(1+x))."""
    if x < 0.0:
        raise ValueError(f"reward_deriv defined on x >= 0, got {x}")
    return 0.5 / (1.0 + x)


def clipped_mean(dist, c):
    """E[min(X, c)]: the effective mean once a capacity-c battery truncates."""
    if c <= 0.0:
        raise ValueError(f"capacity must be positive, got {c}")
    return math.fsum(q * min(v, c) for v, q in dist.atoms)


def mcr(dist, c):
    """Mean-to-capacity ratio: clipped mean divided by capacity; in [0, 1]."""
    r = clipped_mean(dist, c) / c
    return min(max(r, 0.0), 1.0)


def bernoulli_extremal(c, p):
    """Two-point worst case for linear policies: mass 1-p at 0 and p at c."""
    if c <= 0.0:
        raise ValueError(f"capacity must be positive, got {c}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"mean-to-capacity ratio must be in (0, 1), got {p}")
    return discrete([(0.0, 1.0 - p), (c, p)])


def parse_distribution(text):
    """Parse the atom file format: one `value,probability` per line.

    Blank lines and `#` comments are allowed; atom order is free.  Errors
    carry the offending line number.
    """
    pairs = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ValueError(f"line {ln}: expected `value,probability`, got {raw!r}")
        try:
            v, q = float(parts[0]), float(parts[1])
        except ValueError:
            raise ValueError(f"line {ln}: non-numeric field in {raw!r}") from None
        pairs.append((v, q))
    if not pairs:
        raise ValueError("no atoms found in distribution file")
    try:
        return discrete(pairs)
    except ValueError as e:
        raise ValueError(f"invalid distribution: {e}") from None


def load_distribution(path):
    """Read a distribution file from disk (format per parse_distribution)."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_distribution(fh.read())
