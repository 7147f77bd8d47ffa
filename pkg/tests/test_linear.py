import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehlin import EvalPoint, gamma_lower, gamma_upper, gap_limit, nominal_factor, nominal_gap
from _oracles import series_mp


def test_eval_point_validation():
    EvalPoint(1.0, 0.5)
    for c, p in [(0.0, 0.5), (-1.0, 0.5), (math.inf, 0.5), (1.0, 0.0), (1.0, 1.0), (1.0, 1.5)]:
        with pytest.raises(ValueError):
            EvalPoint(c, p)


def test_gamma_lower_edge_slopes():
    pt = EvalPoint(10.0, 0.5)
    assert gamma_lower(pt, 0.0) == 0.0
    assert abs(gamma_lower(pt, 1.0) - 0.5 * 0.5 * math.log1p(10.0)) < 1e-14


def test_gamma_lower_rejects_bad_args():
    pt = EvalPoint(10.0, 0.5)
    with pytest.raises(ValueError):
        gamma_lower(pt, -0.1)
    with pytest.raises(ValueError):
        gamma_lower(pt, 1.1)
    with pytest.raises(ValueError):
        gamma_lower(pt, 0.5, tol=0.0)


def test_bounds_and_certificates_consistent():
    pt = EvalPoint(100.0, 0.1)
    lo = gamma_lower(pt, 0.141503)
    hi = gamma_upper(pt)
    assert 0.0 < lo < hi
    assert abs(nominal_factor(pt, 0.141503) - lo / hi) < 1e-15
    assert abs(nominal_gap(pt, 0.141503) - (hi - lo)) < 1e-15
    assert abs(hi - 0.5 * math.log1p(10.0)) < 1e-15


def test_gap_limit_is_large_capacity_limit():
    # convergence rate in c varies with (p, s): the last pair needs much
    # deeper capacities, so check shrinkage plus a per-pair final bound
    for (p, s), final in [((0.1, 0.1), 1e-6), ((0.5, 0.7), 1e-6),
                          ((0.9, 0.95), 1e-6), ((0.01, 0.03), 1e-4)]:
        lim = gap_limit(p, s)
        devs = [abs(nominal_gap(EvalPoint(c, p), s) - lim) for c in (1e9, 1e12, 1e15)]
        assert devs[0] > 5.0 * devs[1] > 25.0 * devs[2]
        assert devs[2] < final


def test_gap_limit_greedy_is_infinite():
    assert gap_limit(0.5, 1.0) == math.inf
    with pytest.raises(ValueError):
        gap_limit(0.5, 0.0)
    with pytest.raises(ValueError):
        gap_limit(1.0, 0.5)


def test_gamma_lower_matches_reference_spot():
    pt = EvalPoint(10.0, 0.5)
    want = float(series_mp(10.0, 0.5, 0.677521))
    assert abs(gamma_lower(pt, 0.677521) - want) < 1e-11


@given(
    st.floats(1e-2, 1e5),
    st.floats(1e-4, 0.99),
    st.floats(1e-4, 1.0),
)
def test_lower_never_exceeds_upper(c, p, s):
    pt = EvalPoint(c, p)
    assert gamma_lower(pt, s) <= gamma_upper(pt) + 1e-12


@given(st.floats(1e-4, 0.99), st.floats(1e-4, 1.0))
def test_gamma_lower_increasing_in_c(p, s):
    a = gamma_lower(EvalPoint(1.0, p), s)
    b = gamma_lower(EvalPoint(10.0, p), s)
    assert b >= a - 1e-12
