import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehlin import (
    EvalPoint,
    gamma_lower,
    greedy_is_optimal,
    optimal_slope,
    slope_from_stationarity,
    stationarity_residual,
    worst_p_for_c,
)
from _oracles import series_deriv_mp

# spot rows: c, p, expected s*, expected worst-case throughput
SPOT_ROWS = [
    (1.0, 0.1, 0.531404, 0.039166),
    (10.0, 0.5, 0.677521, 0.698589),
    (100.0, 0.1, 0.141503, 0.855315),
    (1000.0, 0.01, 0.014573, 0.838041),
]


def test_greedy_region_boundary():
    assert greedy_is_optimal(EvalPoint(1.0, 0.5))
    assert greedy_is_optimal(EvalPoint(0.999999, 0.5))
    assert not greedy_is_optimal(EvalPoint(1.000001, 0.5))
    r = optimal_slope(EvalPoint(0.5, 0.5))
    assert r.s_star == 1.0


@pytest.mark.parametrize("c,p,s_want,g_want", SPOT_ROWS)
def test_optimal_slope_spot_values(c, p, s_want, g_want):
    r = optimal_slope(EvalPoint(c, p))
    assert abs(r.s_star - s_want) < 1e-5
    assert abs(r.gamma_at_star - g_want) < 1e-6
    assert not r.restarted


def test_optimal_slope_beats_dense_scan():
    pt = EvalPoint(10.0, 0.5)
    r = optimal_slope(pt)
    for s in np.linspace(0.5, 1.0, 4001):
        assert r.gamma_at_star >= gamma_lower(pt, float(s)) - 1e-11


def test_stationarity_residual_signs():
    pt = EvalPoint(10.0, 0.5)
    r = optimal_slope(pt)
    assert stationarity_residual(pt, 0.65) > 0.0
    assert stationarity_residual(pt, 0.70) < 0.0
    assert abs(stationarity_residual(pt, r.s_star)) < 1e-7


def test_stationarity_sign_matches_series_derivative():
    for c, p, s in [(10.0, 0.5, 0.6), (100.0, 0.1, 0.2), (2.0, 0.3, 0.9)]:
        resid = stationarity_residual(EvalPoint(c, p), s)
        deriv = float(series_deriv_mp(c, p, s))
        assert math.copysign(1.0, resid) == math.copysign(1.0, deriv)


def test_slope_from_stationarity_agrees():
    for c, p in [(1.0, 0.1), (10.0, 0.5), (100.0, 0.1), (1000.0, 0.01)]:
        pt = EvalPoint(c, p)
        s2 = slope_from_stationarity(pt)
        assert abs(s2 - optimal_slope(pt).s_star) < 1e-6


def test_worst_p_spot_values():
    p_star, f_inf = worst_p_for_c(10.0)
    assert abs(p_star - 0.105229) < 2e-4
    assert abs(f_inf - 0.683399) < 1e-5
    # local minimality
    for dp in (-1e-3, 1e-3):
        nearby = optimal_slope(EvalPoint(10.0, p_star + dp)).f_star
        assert nearby >= f_inf - 1e-12


@given(st.floats(1e-2, 1e4), st.floats(1e-3, 0.99))
@settings(max_examples=40)
def test_optimal_slope_invariants(c, p):
    pt = EvalPoint(c, p)
    r = optimal_slope(pt)
    assert p - 1e-9 <= r.s_star <= 1.0
    assert 0.0 < r.f_star <= 1.0 + 1e-12
    assert r.g_star >= -1e-12
    # maximality against a random probe
    probe = min(1.0, max(p, 0.5 * (r.s_star + p)))
    assert r.gamma_at_star >= gamma_lower(pt, probe) - 1e-10
