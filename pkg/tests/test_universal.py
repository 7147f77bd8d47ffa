import math

import numpy as np
import pytest

from ehlin import (
    EvalPoint,
    gap_limit,
    g_times_curve,
    g_times_sup,
    maximin_point,
    nominal_factor,
    optimal_slope,
    s_times_approx,
    saddle_point,
    additive_universal,
)

# capacity ratio, expected (c, s, value) of the capacity-free optimum
SADDLE_SPOT = [
    (0.1, 19.712069, 0.205705, 0.674155),
    (0.5, 6.509980, 0.720563, 0.776854),
    (0.9, 15.180150, 0.967304, 0.935771),
]


@pytest.mark.parametrize("p,c_want,s_want,f_want", SADDLE_SPOT)
def test_saddle_spot_values(p, c_want, s_want, f_want):
    r = saddle_point(p)
    assert abs(r.f_times - f_want) < 1e-5
    assert abs(r.s_times - s_want) < 1e-4
    assert abs(r.c_times - c_want) / c_want < 1e-3
    assert r.residual < 1e-6


def test_saddle_slope_is_best_response():
    r = saddle_point(0.5)
    best = optimal_slope(EvalPoint(r.c_times, 0.5))
    assert abs(r.s_times - best.s_star) < 1e-8


def test_minimax_equals_maximin():
    for p in (0.1, 0.5, 0.9):
        sp = saddle_point(p)
        value, c, s, _ = maximin_point(p)
        assert abs(value - sp.f_times) < 1e-6
        assert abs(s - sp.s_times) < 1e-4
        assert abs(c - sp.c_times) / sp.c_times < 1e-3


def test_saddle_inequalities():
    p = 0.5
    r = saddle_point(p)
    rng = np.random.default_rng(11)
    # the saddle value minorizes over c at the saddle slope ...
    for lc in rng.uniform(math.log(1e-3), math.log(1e5), 40):
        assert nominal_factor(EvalPoint(math.exp(lc), p), r.s_times) >= r.f_times - 1e-7
    # ... and majorizes over s at the saddle capacity
    pt = EvalPoint(r.c_times, p)
    for s in rng.uniform(0.01, 1.0, 40):
        assert nominal_factor(pt, float(s)) <= r.f_times + 1e-7


def test_s_times_approx_tracks_exact():
    for p in (0.05, 0.3, 0.7):
        assert abs(s_times_approx(p) - saddle_point(p).s_times) < 0.0015


def test_s_times_approx_caps_at_one():
    assert s_times_approx(0.999) <= 1.0


def test_additive_universal_is_fixed_fraction():
    p = 0.3
    s_plus, gap = additive_universal(p)
    assert s_plus == p
    assert abs(gap - gap_limit(p, p)) < 1e-12
    # worst-case additive gap of the fixed fraction policy never beats 1/2
    assert gap <= 0.5 + 1e-12
    for other in (0.2, 0.25, 0.35, 0.4):
        assert gap_limit(p, other) >= gap - 1e-12


def test_g_times_sup_value(constants):
    want = 0.5 * (constants.a_star - math.log(constants.a_star))
    assert g_times_sup() == pytest.approx(want, abs=1e-12)
    assert abs(g_times_sup() - 0.7292) < 5e-4


def test_g_times_curve_below_sup():
    sup = g_times_sup()
    v1 = g_times_curve(0.5)
    v2 = g_times_curve(0.01)
    assert v1 < sup
    assert v2 < sup
    assert v2 > v1  # approaches the supremum from below as p shrinks
