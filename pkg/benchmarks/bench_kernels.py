"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths (series evaluation, golden-section slope search,
trajectory simulation) on both backends and prints a speedup table.  Run as

    python3 benchmarks/bench_kernels.py [--repeat N]

The compiled backend must be importable for a comparison; otherwise only the
fallback is timed.
"""

import argparse
import time

import numpy as np

from ehlin import _kernels_py

try:
    from ehlin import _kernels_cy
except ImportError:
    _kernels_cy = None

TOL = 1e-12

SERIES_CASES = [
    ("series small c", 0.5, 0.5, 0.9),
    ("series mid c", 100.0, 0.1, 0.15),
    ("series large c", 1e6, 1e-5, 2.3e-5),
    ("series tiny s", 1e6, 1e-6, 2.3e-6),
]


def _time(fn, repeat):
    # one warm-up call, then best-of-measured to dampen scheduler noise
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(mod, repeat, arrivals):
    rows = []
    for name, c, p, s in SERIES_CASES:
        n = 200
        rows.append((name, _time(lambda: [mod.gamma_series(c, p, s, TOL) for _ in range(n)], repeat) / n))
    rows.append(("golden slope search", _time(lambda: [mod.golden_max_gamma(100.0, 0.1, 0.1, 1.0, 1e-10, TOL) for _ in range(50)], repeat) / 50))
    b1 = min(arrivals[0], 100.0)
    rows.append(("simulate 10^6 steps", _time(lambda: mod.simulate_linear(b1, arrivals[1:], 100.0, 0.15, 0, 32), repeat)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions per case (best is kept)")
    args = ap.parse_args()

    rng = np.random.Generator(np.random.PCG64(7))
    arrivals = np.where(rng.random(10**6 - 1) < 0.1, 100.0, 0.0)

    py_rows = bench_backend(_kernels_py, args.repeat, arrivals)
    if _kernels_cy is None:
        print("compiled backend not importable; timing the pure-Python fallback only\n")
        print(f"{'case':<24}{'python':>12}")
        for name, t in py_rows:
            print(f"{name:<24}{t * 1e6:>10.1f}us")
        return

    cy_rows = bench_backend(_kernels_cy, args.repeat, arrivals)
    print(f"{'case':<24}{'python':>12}{'cython':>12}{'speedup':>10}")
    for (name, tp), (_, tc) in zip(py_rows, cy_rows):
        print(f"{name:<24}{tp * 1e6:>10.1f}us{tc * 1e6:>10.1f}us{tp / tc:>9.1f}x")

    # agreement spot check: identical inputs must give near-identical outputs
    worst = 0.0
    for _, c, p, s in SERIES_CASES:
        worst = max(worst, abs(_kernels_py.gamma_series(c, p, s, TOL) - _kernels_cy.gamma_series(c, p, s, TOL)))
    b1 = min(arrivals[0], 100.0)
    mp = _kernels_py.simulate_linear(b1, arrivals[1:], 100.0, 0.15, 0, 32)
    mc = _kernels_cy.simulate_linear(b1, arrivals[1:], 100.0, 0.15, 0, 32)
    print(f"\nmax |py - cy| over series cases: {worst:.3e}")
    print(f"simulate mean bit-identical: {mp[0] == mc[0]}")


if __name__ == "__main__":
    main()
