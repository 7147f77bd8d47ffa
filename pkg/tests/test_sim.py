import math

import numpy as np
import pytest

from ehlin import (
    LinearPolicy,
    SimConfig,
    bernoulli_extremal,
    compare_policies,
    discrete,
    linear_policy,
    simulate,
)
from ehlin.sim import _draw_arrivals, _run_generic


def test_linear_policy_validation():
    assert linear_policy(0.4)(10.0) == 4.0
    for s in (-0.1, 1.1, math.nan):
        with pytest.raises(ValueError):
            LinearPolicy(s)


def test_config_validation():
    q = bernoulli_extremal(2.0, 0.5)
    ok = SimConfig(2.0, q, linear_policy(1.0), 100, 10, 0)
    assert ok.horizon == 100
    cases = [
        dict(c=0.0),
        dict(horizon=0),
        dict(horizon=True),
        dict(burn_in=-1),
        dict(burn_in=100),
        dict(seed=-1),
        dict(initial_battery=3.0),
        dict(initial_battery=-0.5),
    ]
    base = dict(c=2.0, q=q, policy=linear_policy(1.0), horizon=100, burn_in=10, seed=0)
    for override in cases:
        kw = dict(base)
        kw.update(override)
        with pytest.raises((ValueError, TypeError)):
            SimConfig(**kw)


def test_constant_arrivals_greedy_exact():
    # deterministic unit arrivals, full spend: battery is 1 every step
    cfg = SimConfig(5.0, discrete([(1.0, 1.0)]), linear_policy(1.0), 10_000, 100, 7)
    rep = simulate(cfg)
    assert abs(rep.throughput_estimate - 0.5 * math.log(2.0)) < 1e-12
    assert rep.std_error < 1e-12
    assert rep.steps_used == 9_900
    assert rep.generator == "numpy-pcg64"


def test_initial_battery_override():
    q = discrete([(0.0, 1.0)])  # nothing ever arrives
    cfg = SimConfig(4.0, q, linear_policy(0.5), 4, 0, 0, initial_battery=4.0)
    rep = simulate(cfg)
    # batteries 4, 2, 1, 0.5; spends are half of each
    want = sum(0.5 * math.log1p(0.5 * b) for b in (4.0, 2.0, 1.0, 0.5)) / 4.0
    assert abs(rep.throughput_estimate - want) < 1e-15
    # default initial battery with no arrivals is zero
    rep0 = simulate(SimConfig(4.0, q, linear_policy(0.5), 4, 0, 0))
    assert rep0.throughput_estimate == 0.0


def test_replay_and_seed_sensitivity():
    cfg = SimConfig(5.0, bernoulli_extremal(5.0, 0.3), linear_policy(0.4), 50_000, 1_000, 42)
    a = simulate(cfg)
    b = simulate(cfg)
    assert a == b
    c = simulate(SimConfig(5.0, bernoulli_extremal(5.0, 0.3), linear_policy(0.4), 50_000, 1_000, 43))
    assert c.throughput_estimate != a.throughput_estimate


def test_generic_path_matches_kernel():
    q = bernoulli_extremal(3.0, 0.4)
    horizon, seed = 5_000, 9
    fast = simulate(SimConfig(3.0, q, linear_policy(0.35), horizon, 200, seed))
    arr = _draw_arrivals(q, horizon, seed)
    b1 = min(float(arr[0]), 3.0)
    mean, se, n_used = _run_generic(lambda b: 0.35 * b, b1, np.ascontiguousarray(arr[1:]), 3.0, 200, 32)
    assert mean == fast.throughput_estimate
    assert se == fast.std_error
    assert n_used == fast.steps_used


def test_inadmissible_policy_reports_step():
    q = discrete([(1.0, 1.0)])
    cfg = SimConfig(2.0, q, lambda b: b + 1.0, 100, 0, 0)
    with pytest.raises(RuntimeError, match="step"):
        simulate(cfg)
    cfg2 = SimConfig(2.0, q, lambda b: -0.1, 100, 0, 0)
    with pytest.raises(RuntimeError, match="inadmissible"):
        simulate(cfg2)


def test_compare_policies_shares_stream():
    q = bernoulli_extremal(4.0, 0.25)
    reps = compare_policies(4.0, q, [linear_policy(0.3), linear_policy(0.3), linear_policy(0.9)], 20_000, 5)
    assert reps[0] == reps[1]
    assert reps[0].throughput_estimate != reps[2].throughput_estimate
    assert reps[0].seed == reps[2].seed == 5
    # default burn-in rule: a tenth of the horizon, capped at ten thousand
    assert reps[0].steps_used == 20_000 - 2_000


def test_batch_error_scale():
    # iid rewards: the batch-means error should sit near sd/sqrt(n)
    p, c, n = 0.5, 1.0, 200_000
    rep = simulate(SimConfig(c, bernoulli_extremal(c, p), linear_policy(1.0), n, 0, 3))
    r = 0.5 * math.log1p(c)
    sd = r * math.sqrt(p * (1.0 - p))
    want = sd / math.sqrt(n)
    assert 0.5 * want < rep.std_error < 2.0 * want


def test_throughput_tracks_series_value():
    from ehlin import EvalPoint, gamma_lower

    pt = EvalPoint(5.0, 0.3)
    rep = simulate(SimConfig(5.0, bernoulli_extremal(5.0, 0.3), linear_policy(0.5), 400_000, 10_000, 12))
    assert abs(rep.throughput_estimate - gamma_lower(pt, 0.5)) < 4.0 * rep.std_error
