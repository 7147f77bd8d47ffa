"""Series kernel correctness against high-precision sums, plus parity
between the compiled backend and the pure-Python fallback."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehlin import _kernels_py
from _oracles import series_mp

try:
    from ehlin import _kernels_cy

    BACKENDS = [_kernels_py, _kernels_cy]
except ImportError:
    _kernels_cy = None
    BACKENDS = [_kernels_py]

# regimes chosen to exercise every summation branch: closed-form zone,
# direct zone, alternating small-term zone, and the boundaries between them
SERIES_CASES = [
    (0.001, 0.5, 0.9),
    (0.01, 0.001, 0.481011),
    (0.5, 0.5, 1.0),
    (0.5, 0.5, 0.9),
    (2.0, 0.9, 0.99),
    (10.0, 0.5, 0.7503572),
    (10.0, 0.5, 0.21),     # c*s just above the large-term cutoff
    (10.0, 0.5, 0.199),    # just below
    (10.0, 0.5, 0.081),    # around the small-term cutoff
    (10.0, 0.5, 0.079),
    (100.0, 0.1, 0.141503),
    (1000.0, 0.01, 0.014573),
    (1e6, 1e-5, 2.3e-5),
    (1e6, 1e-6, 2.3e-6),
    (1e7, 1e-4, 1.0),
]


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND_NAME)
@pytest.mark.parametrize("c,p,s", SERIES_CASES)
def test_gamma_series_matches_reference(mod, c, p, s):
    got = mod.gamma_series(c, p, s, 1e-12)
    want = float(series_mp(c, p, s))
    assert abs(got - want) <= 1e-11 + 1e-12 * abs(want)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND_NAME)
@pytest.mark.parametrize("tol", [1e-6, 1e-9, 1e-12])
def test_gamma_series_tolerance_scales(mod, tol):
    want = float(series_mp(100.0, 0.1, 0.14))
    got = mod.gamma_series(100.0, 0.1, 0.14, tol)
    assert abs(got - want) <= tol + 1e-13


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND_NAME)
def test_gamma_series_batch_matches_scalar(mod):
    ss = np.geomspace(1e-4, 1.0, 50)
    batch = mod.gamma_series_batch(10.0, 0.3, ss, 1e-12)
    for s, v in zip(ss, batch):
        assert v == mod.gamma_series(10.0, 0.3, float(s), 1e-12)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND_NAME)
def test_stationarity_sign_flips_at_optimum(mod):
    # interior optimum near 0.677521 for c=10, p=0.5
    assert mod.stationarity_series(10.0, 0.5, 0.65, 1e-12) > 0.0
    assert mod.stationarity_series(10.0, 0.5, 0.70, 1e-12) < 0.0


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND_NAME)
def test_golden_max_matches_dense_scan(mod):
    s_star, g_star, _ = mod.golden_max_gamma(10.0, 0.5, 0.5, 1.0, 1e-10, 1e-12)
    ss = np.linspace(0.5, 1.0, 20001)
    vals = [mod.gamma_series(10.0, 0.5, float(s), 1e-12) for s in ss]
    k = int(np.argmax(vals))
    assert abs(s_star - ss[k]) < 1e-4
    assert g_star >= vals[k] - 1e-10


needs_cython = pytest.mark.skipif(_kernels_cy is None, reason="compiled backend unavailable")


@needs_cython
@given(
    st.floats(1e-3, 1e6),
    st.floats(1e-5, 0.999),
    st.floats(1e-6, 1.0),
    st.sampled_from([1e-8, 1e-10, 1e-12]),
)
@settings(max_examples=150)
def test_backend_parity_series(c, p, s, tol):
    a = _kernels_py.gamma_series(c, p, s, tol)
    b = _kernels_cy.gamma_series(c, p, s, tol)
    assert abs(a - b) <= 2.0 * tol + 1e-12 * abs(a)


@needs_cython
@pytest.mark.parametrize("burn_in,n_batches", [(0, 32), (10, 32), (0, 1), (90, 32)])
def test_backend_parity_simulate(burn_in, n_batches):
    rng = np.random.Generator(np.random.PCG64(3))
    arrivals = np.where(rng.random(99) < 0.3, 5.0, 0.0)
    b1 = min(arrivals[0], 5.0)
    out_py = _kernels_py.simulate_linear(b1, arrivals[1:], 5.0, 0.4, burn_in, n_batches)
    out_cy = _kernels_cy.simulate_linear(b1, arrivals[1:], 5.0, 0.4, burn_in, n_batches)
    assert out_py == tuple(out_cy)


@needs_cython
def test_backend_parity_stationarity_and_golden():
    for c, p, s in [(10.0, 0.5, 0.7), (100.0, 0.1, 0.15), (1e5, 1e-4, 3e-4)]:
        a = _kernels_py.stationarity_series(c, p, s, 1e-12)
        b = _kernels_cy.stationarity_series(c, p, s, 1e-12)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a))
    sa, ga, _ = _kernels_py.golden_max_gamma(100.0, 0.1, 0.1, 1.0, 1e-10, 1e-12)
    sb, gb, _ = _kernels_cy.golden_max_gamma(100.0, 0.1, 0.1, 1.0, 1e-10, 1e-12)
    # one-ulp series differences shift the argmax by ~sqrt(ulp) at a flat peak
    assert abs(sa - sb) < 1e-7
    assert abs(ga - gb) < 1e-11


def test_backend_name_reported():
    from ehlin import backend_name

    assert backend_name() in ("cython", "python")
