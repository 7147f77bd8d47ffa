"""Command-line front end.

Subcommands:

  table     regenerate a published numeric table as CSV
  sweep     adaptively sampled curve data behind the figures
  greedy    thresholds and semi-universal bounds for arrival distributions
  verify    run a named property suite over the standard grids
  simulate  seeded Monte Carlo battery simulation from a JSON config

All output is CSV with a single header line, preceded by one `#` metadata
comment (timestamped; suppress with --no-meta for byte-identical reruns).
Exit codes: 0 success or pass, 1 usage error, 2 data error, 3 verification
failure.  EHLIN_THREADS caps internal parallelism.
"""

import argparse
import datetime
import json
import math
import sys

import numpy as np

from . import __version__
from ._backend import backend_name
from ._par import parallel_map
from .asym import alpha_hat, get_minimax_constants
from .dist import load_distribution
from .greedy import (IntervalMeanFamily, c_bounds_interval_mean,
                     clipped_bounds, greedy_threshold, mcr_upper, q_bar3)
from .grids import (D1, D2, GRID_A, GRID_A1, GRID_B, GRID_B1, NAMED_GRIDS,
                    adaptive_refine, unbounded_transform)
from .linear import EvalPoint, gamma_lower, gamma_upper, gap_limit
from .sim import SimConfig, linear_policy, simulate
from .slopes import optimal_slope, slope_from_stationarity, worst_p_for_c
from .universal import (g_times_curve, maximin_point, s_times_approx,
                        saddle_point)

TABLE_NAMES = ("f-star-infimum", "optimal-slopes", "alpha-limits", "saddle-points", "c-s-times-limits")
FACT_NAMES = ("unimodal", "s-star-monotone", "f-star-monotone", "alpha-finite", "saddle", "limits", "s-times-approx")
QUANTITIES = ("gamma-lower", "f-star", "g-star", "s-star", "s-times", "g-times-curve", "gap-limit")

SLOPE_ROWS = (
    (0.01, 0.001),
    (0.1, 0.001), (0.1, 0.01),
    (1.0, 0.001), (1.0, 0.01), (1.0, 0.1),
    (10.0, 0.001), (10.0, 0.01), (10.0, 0.1), (10.0, 0.5), (10.0, 0.9),
    (100.0, 0.001), (100.0, 0.01), (100.0, 0.1), (100.0, 0.5), (100.0, 0.9), (100.0, 0.99),
    (1000.0, 0.001), (1000.0, 0.01), (1000.0, 0.1), (1000.0, 0.5), (1000.0, 0.9), (1000.0, 0.99),
)
ALPHA_B_ROWS = (0.001, 0.01, 0.1, 0.5, 1.0, 1.5, 1.7938, 2.0, 2.5, 3.0)
ALPHA_P_COLS = (0.1, 0.01, 0.001, 0.0001, 0.00001)
LIMIT_P_ROWS = (0.1, 0.01, 0.001, 0.0001, 0.00001)


class _UsageError(Exception):
    pass


class _DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(v):
    if v == math.inf:
        return "+inf"
    return f"{v:.12g}"


def _emit(args, lines):
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args, extra=""):
    if args.no_meta:
        return []
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    tail = f" {extra}" if extra else ""
    return [f"# ehlin {__version__} generated {stamp} cmd={args.cmd} backend={backend_name()}{tail}"]


# ---------------------------------------------------------------- tables

def _table_optimal_slopes(tol):
    lines = ["c,p,s_star,gamma_at_star,s_star_2,gamma_at_star_2"]
    for c, p in SLOPE_ROWS:
        pt = EvalPoint(c, p)
        res = optimal_slope(pt, tol=tol)
        s2 = slope_from_stationarity(pt, tol=tol)
        g2 = gamma_lower(pt, s2, tol)
        lines.append(",".join(_fmt(v) for v in (c, p, res.s_star, res.gamma_at_star, s2, g2)))
    return lines


def _table_f_star_infimum(tol):
    lines = ["c,p_star,f_star_inf,c_p_star"]
    for k in range(-3, 7):
        c = 10.0**k
        p, f = worst_p_for_c(c, series_tol=tol)
        lines.append(",".join(_fmt(v) for v in (c, p, f, c * p)))
    return lines


def _table_alpha_limits(tol):
    head = "b," + ",".join(f"s_over_p_at_{_fmt(p)}" for p in ALPHA_P_COLS) + ",alpha_hat"
    lines = [head]
    for b in ALPHA_B_ROWS:
        cells = [optimal_slope(EvalPoint(b / p, p), tol=tol).s_star / p for p in ALPHA_P_COLS]
        cells.append(alpha_hat(b))
        lines.append(_fmt(b) + "," + ",".join(_fmt(v) for v in cells))
    return lines


def _table_saddle_points(tol):
    lines = ["p,maximin_value,maximin_c,maximin_s,minimax_value,minimax_c,minimax_s"]
    for p in GRID_B1:
        mv, mc, ms, _ = maximin_point(p)
        sd = saddle_point(p)
        lines.append(",".join(_fmt(v) for v in (p, mv, mc, ms, sd.f_times, sd.c_times, sd.s_times)))
    return lines


def _table_c_s_times_limits(tol):
    lines = ["p,c_times,s_times,p_c_times,s_times_over_p"]
    for p in LIMIT_P_ROWS:
        sd = saddle_point(p)
        lines.append(",".join(_fmt(v) for v in (p, sd.c_times, sd.s_times, p * sd.c_times, sd.s_times / p)))
    return lines


_TABLES = {
    "optimal-slopes": _table_optimal_slopes,
    "f-star-infimum": _table_f_star_infimum,
    "alpha-limits": _table_alpha_limits,
    "saddle-points": _table_saddle_points,
    "c-s-times-limits": _table_c_s_times_limits,
}


def cmd_table(args):
    if args.name not in _TABLES:
        raise _UsageError(f"unknown table {args.name!r}; valid names: {', '.join(TABLE_NAMES)}")
    body = _TABLES[args.name](args.tol)
    _emit(args, _meta(args, f"table={args.name}") + body)
    return 0


# ---------------------------------------------------------------- sweeps

def _parse_grid(text):
    if text in NAMED_GRIDS:
        return NAMED_GRIDS[text]
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise _UsageError(f"grid must be one of {sorted(NAMED_GRIDS)} or comma-separated numbers, got {text!r}")


def _default_grid(variable, transform):
    if variable == "p":
        return GRID_B
    if variable == "s":
        return (0.001,) + tuple(0.01 * i for i in range(1, 100)) + (1.0,)
    if transform:
        return tuple(0.005 * i for i in range(1, 200))
    raise _UsageError(f"sweeping {variable} over an unbounded domain needs --grid or --transform")


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise _UsageError(f"--{name} is required for quantity {args.quantity} over {args.variable}")
    return v


def _sweep_value_fn(args):
    """Map the swept coordinate to the requested quantity."""
    q, var = args.quantity, args.variable
    tol = args.tol
    if q == "gamma-lower":
        if var == "s":
            pt = EvalPoint(_need(args, "c"), _need(args, "p"))
            return lambda s: gamma_lower(pt, s, tol)
        if var == "c":
            p, s = _need(args, "p"), _need(args, "s")
            return lambda c: gamma_lower(EvalPoint(c, p), s, tol)
        if var == "b":
            p, s = _need(args, "p"), _need(args, "s")
            return lambda b: gamma_lower(EvalPoint(b / p, p), s, tol)
        c, s = _need(args, "c"), _need(args, "s")
        return lambda p: gamma_lower(EvalPoint(c, p), s, tol)
    if q in ("f-star", "g-star", "s-star"):
        field = {"f-star": "f_star", "g-star": "g_star", "s-star": "s_star"}[q]
        if var == "c":
            p = _need(args, "p")
            return lambda c: getattr(optimal_slope(EvalPoint(c, p), tol=tol), field)
        if var == "b":
            p = _need(args, "p")
            return lambda b: getattr(optimal_slope(EvalPoint(b / p, p), tol=tol), field)
        if var == "p":
            if args.b is not None:
                b = args.b
                return lambda p: getattr(optimal_slope(EvalPoint(b / p, p), tol=tol), field)
            c = _need(args, "c")
            return lambda p: getattr(optimal_slope(EvalPoint(c, p), tol=tol), field)
        raise _UsageError(f"quantity {q} cannot be swept over s")
    if q == "s-times":
        if var != "p":
            raise _UsageError("quantity s-times is a function of p only")
        return lambda p: saddle_point(p).s_times
    if q == "g-times-curve":
        if var != "p":
            raise _UsageError("quantity g-times-curve is a function of p only")
        return g_times_curve
    if q == "gap-limit":
        if var == "p":
            s = _need(args, "s")
            return lambda p: gap_limit(p, s)
        if var == "s":
            p = _need(args, "p")
            return lambda s: gap_limit(p, s)
        raise _UsageError("quantity gap-limit is a function of p or s")
    raise _UsageError(f"unknown quantity {args.quantity!r}; valid: {', '.join(QUANTITIES)}")


def cmd_sweep(args):
    if args.variable not in ("c", "p", "s", "b"):
        raise _UsageError(f"--variable must be one of c, p, s, b, got {args.variable!r}")
    if args.quantity not in QUANTITIES:
        raise _UsageError(f"unknown quantity {args.quantity!r}; valid: {', '.join(QUANTITIES)}")
    if args.transform and args.variable not in ("c", "b"):
        raise _UsageError("--transform applies only to the unbounded variables c and b")
    grid = _parse_grid(args.grid) if args.grid else _default_grid(args.variable, args.transform)
    fn = _sweep_value_fn(args)
    if args.transform:
        inner = fn
        fn = lambda x: inner(unbounded_transform(x))
    pts = adaptive_refine(fn, grid, args.d1, args.d2)
    lines = []
    if args.quantity == "s-times":
        lines.append("x,s_times,s_times_approx")
        for x, v in pts:
            lines.append(f"{_fmt(x)},{_fmt(v)},{_fmt(s_times_approx(x))}")
    else:
        lines.append("x,value")
        for x, v in pts:
            lines.append(f"{_fmt(x)},{_fmt(v)}")
    extra = f"quantity={args.quantity} variable={args.variable} transform={int(args.transform)} points={len(pts)}"
    _emit(args, _meta(args, extra) + lines)
    return 0


# ---------------------------------------------------------------- greedy

def cmd_greedy(args):
    if not (args.dist_file or args.bounds or args.clipped or args.mcr is not None):
        raise _UsageError("nothing to do: give a distribution file or one of --bounds, --clipped, --mcr")
    lines = []
    if args.dist_file:
        try:
            q = load_distribution(args.dist_file)
        except (OSError, ValueError) as e:
            raise _DataError(str(e))
        lines += ["c_star", _fmt(greedy_threshold(q))]
    if args.bounds:
        x_lo, x_hi, mu = args.bounds
        try:
            fam = IntervalMeanFamily(x_lo, x_hi, mu)
        except ValueError as e:
            raise _DataError(str(e))
        res = c_bounds_interval_mean(fam)
        lines += ["x_lo,x_hi,mu,c_lo,c_hi",
                  ",".join(_fmt(v) for v in (x_lo, x_hi, mu, res.c_lo, res.c_hi))]
    if args.clipped:
        x_lo, mu_bar = args.clipped
        try:
            res = clipped_bounds(x_lo, mu_bar)
        except ValueError as e:
            raise _DataError(str(e))
        lines += ["x_lo,mu_bar,c_lo,c_hi",
                  ",".join(_fmt(v) for v in (x_lo, mu_bar, res.c_lo, res.c_hi))]
        lines.append(f"# c_hi attained by {res.attaining_hi}")
    if args.mcr is not None:
        try:
            res = mcr_upper(args.mcr)
        except ValueError as e:
            raise _DataError(str(e))
        lines += ["p,c_lo,c_hi", ",".join(_fmt(v) for v in (args.mcr, res.c_lo, res.c_hi))]
        if res.c_hi == math.inf:
            w = q_bar3(args.mcr, 10)
            lines.append(f"# threshold unbounded; witness family member n=10: {w}")
        else:
            lines.append(f"# c_hi attained by {res.attaining_hi}")
    _emit(args, _meta(args) + lines)
    return 0


# ---------------------------------------------------------------- verify

def _scan_single_peak(vals, rel_tol):
    """Indices i where vals rises after having fallen, beyond noise."""
    scale = max(abs(v) for v in vals)
    tol = rel_tol * max(scale, 1e-300)
    fallen = False
    bad = []
    for i in range(1, len(vals)):
        d = vals[i] - vals[i - 1]
        if d > tol:
            if fallen:
                bad.append(i)
        elif d < -tol:
            fallen = True
    return bad


def _sgrid(p):
    lo = max(1e-6, 0.125 * p)
    geo = np.geomspace(lo, 1.0, 40)
    lin = np.linspace(0.025, 1.0, 40)
    return np.unique(np.concatenate([geo, lin]))


def _verify_unimodal(tol):
    from ._backend import kernels
    pairs = [(c, p) for c in GRID_A for p in GRID_B if c > p / (1.0 - p)]

    def check(pair):
        c, p = pair
        grid = _sgrid(p)
        vals = list(kernels.gamma_series_batch(c, p, grid, tol))
        bad = _scan_single_peak(vals, 1e-11)
        for i in bad:
            # refine around the suspicious rise before calling it a failure
            fine = np.linspace(grid[max(0, i - 2)], grid[min(len(grid) - 1, i + 1)], 65)
            fvals = list(kernels.gamma_series_batch(c, p, fine, tol))
            if _scan_single_peak(fvals, 1e-10):
                return (c, p)
        return None

    failures = [r for r in parallel_map(check, pairs) if r is not None]
    lines = [f"unimodal: scanned {len(pairs)} (c,p) pairs on mixed slope grids"]
    if failures:
        lines.append(f"unimodal: FAIL, interior local minima at {failures[:5]}")
        return False, lines
    lines.append("unimodal: PASS, no interior local minima detected")
    return True, lines


def _verify_s_star_monotone(tol):
    slack = 1e-6
    ok = True
    lines = []
    worst_c = 0.0
    for p in GRID_B1:
        ss = [optimal_slope(EvalPoint(c, p), tol=tol).s_star for c in GRID_A]
        jump = max(b - a for a, b in zip(ss, ss[1:]))
        worst_c = max(worst_c, jump)
        if jump > slack:
            ok = False
            lines.append(f"s-star-monotone: FAIL, s* rose by {jump:.3g} along c at p={p}")
    worst_p = 0.0
    floor_gap = 0.0
    for c in GRID_A1:
        ss = [optimal_slope(EvalPoint(c, p), tol=tol).s_star for p in GRID_B]
        drop = max(a - b for a, b in zip(ss, ss[1:]))
        worst_p = max(worst_p, drop)
        floor_gap = max(floor_gap, max(p - s for p, s in zip(GRID_B, ss)))
        if drop > slack:
            ok = False
            lines.append(f"s-star-monotone: FAIL, s* fell by {drop:.3g} along p at c={c}")
    if floor_gap > 1e-9:
        ok = False
        lines.append(f"s-star-monotone: FAIL, s* fell below p by {floor_gap:.3g}")
    lines.append(f"s-star-monotone: worst rise along c {worst_c:.3g}, worst drop along p {worst_p:.3g}, slack {slack}")
    lines.append(f"s-star-monotone: {'PASS' if ok else 'FAIL'}")
    return ok, lines


def _verify_f_star_monotone(tol):
    slack = 1e-6
    bs = (0.01, 1.0, get_minimax_constants().b_star, 100.0)
    ps = (1e-5, 1e-4) + GRID_B + (0.999,)
    ok = True
    lines = []
    worst = 0.0
    for b in bs:
        fs = [optimal_slope(EvalPoint(b / p, p), tol=tol).f_star for p in ps]
        drop = max(a - x for a, x in zip(fs, fs[1:]))
        worst = max(worst, drop)
        if drop > slack:
            ok = False
            lines.append(f"f-star-monotone: FAIL, F* fell by {drop:.3g} along p at b={b}")
    lines.append(f"f-star-monotone: worst drop {worst:.3g} over {len(bs)} capacity-mean products, slack {slack}")
    lines.append(f"f-star-monotone: {'PASS' if ok else 'FAIL'}")
    return ok, lines


def _verify_alpha_finite(tol):
    ok = True
    lines = []
    for b in ALPHA_B_ROWS:
        ah = alpha_hat(b)
        errs = [abs(optimal_slope(EvalPoint(b / p, p), tol=tol).s_star / p - ah) for p in (1e-3, 1e-4, 1e-5)]
        rel = errs[-1] / ah
        if rel > 1e-3 or not errs[0] > errs[1] > errs[2]:
            ok = False
            lines.append(f"alpha-finite: FAIL at b={b}: errors {[f'{e:.3g}' for e in errs]}, limit {ah:.6f}")
        else:
            lines.append(f"alpha-finite: b={b} ratio converges to {ah:.6f} (final rel err {rel:.2g})")
    lines.append(f"alpha-finite: {'PASS' if ok else 'FAIL'}")
    return ok, lines


def _verify_saddle(tol):
    slack = 1e-6
    rng = np.random.default_rng(0)
    ps = [p for p in GRID_A if p < 1.0]
    ok = True
    lines = []
    worst = 0.0
    for p in ps:
        sd = saddle_point(p)
        c_pt = EvalPoint(sd.c_times, p)
        here = 0.0
        for _ in range(100):
            s = math.exp(rng.uniform(math.log(1e-4), 0.0))
            here = max(here, gamma_lower(c_pt, s, tol) / gamma_upper(c_pt) - sd.f_times)
        for _ in range(100):
            c = math.exp(rng.uniform(math.log(1e-4), math.log(1e7 / p)))
            pt = EvalPoint(c, p)
            here = max(here, sd.f_times - gamma_lower(pt, sd.s_times, tol) / gamma_upper(pt))
        worst = max(worst, here)
        if here > slack:
            ok = False
            lines.append(f"saddle: FAIL at p={p}, saddle inequality violated by {here:.3g}")
    lines.append(f"saddle: {len(ps)} ratios, 200 random probes each, worst violation {worst:.3g}, slack {slack}")
    lines.append(f"saddle: {'PASS' if ok else 'FAIL'}")
    return ok, lines


def _verify_limits(tol):
    mc = get_minimax_constants()
    ok = True
    lines = []
    b_errs, a_errs = [], []
    for p in (1e-3, 1e-4, 1e-5):
        sd = saddle_point(p)
        b_errs.append(abs(p * sd.c_times - mc.b_star))
        a_errs.append(abs(sd.s_times / p - mc.a_star))
    if not (b_errs[0] > b_errs[1] > b_errs[2] and a_errs[0] > a_errs[1] > a_errs[2]):
        ok = False
        lines.append(f"limits: FAIL, approach not monotone: {b_errs}, {a_errs}")
    if b_errs[-1] > 2e-3 or a_errs[-1] > 2e-3:
        ok = False
        lines.append(f"limits: FAIL, final errors {b_errs[-1]:.3g}, {a_errs[-1]:.3g} exceed 2e-3")
    fx = [saddle_point(p).f_times for p in (0.1, 0.01, 0.001)]
    if not fx[0] > fx[1] > fx[2]:
        ok = False
        lines.append(f"limits: FAIL, saddle value not decreasing toward the limit: {fx}")
    if abs(fx[-1] - mc.f_lower_bar) > 5e-4:
        ok = False
        lines.append(f"limits: FAIL, saddle value at p=0.001 is {fx[-1]:.6f}, limit {mc.f_lower_bar:.6f}")
    lines.append(f"limits: p*c -> {mc.b_star:.6f} (err {b_errs[-1]:.2g}), s/p -> {mc.a_star:.6f} (err {a_errs[-1]:.2g})")
    lines.append(f"limits: {'PASS' if ok else 'FAIL'}")
    return ok, lines


def _verify_s_times_approx(tol):
    ps = [0.001 * i for i in range(1, 1000)]
    errs = parallel_map(lambda p: abs(s_times_approx(p) - saddle_point(p).s_times), ps)
    worst = max(errs)
    at = ps[errs.index(worst)]
    ok = worst < 0.0015
    lines = [f"s-times-approx: max |shat - s| = {worst:.6f} at p={at:.3f} over {len(ps)} ratios (bound 0.0015)",
             f"s-times-approx: {'PASS' if ok else 'FAIL'}"]
    return ok, lines


_FACTS = {
    "unimodal": _verify_unimodal,
    "s-star-monotone": _verify_s_star_monotone,
    "f-star-monotone": _verify_f_star_monotone,
    "alpha-finite": _verify_alpha_finite,
    "saddle": _verify_saddle,
    "limits": _verify_limits,
    "s-times-approx": _verify_s_times_approx,
}


def cmd_verify(args):
    if args.fact not in _FACTS:
        raise _UsageError(f"unknown fact {args.fact!r}; valid names: {', '.join(FACT_NAMES)}")
    ok, lines = _FACTS[args.fact](args.tol)
    _emit(args, _meta(args, f"fact={args.fact}") + lines)
    return 0 if ok else 3


# ---------------------------------------------------------------- simulate

def _cfg_field(cfg, name, kind, required=True, default=None):
    if name not in cfg:
        if required:
            raise _DataError(f"config field {name!r} is missing")
        return default
    v = cfg[name]
    if kind is float and isinstance(v, (int, float)) and not isinstance(v, bool):
        return float(v)
    if kind is int and isinstance(v, int) and not isinstance(v, bool):
        return v
    if kind is str and isinstance(v, str):
        return v
    raise _DataError(f"config field {name!r} must be a {kind.__name__}, got {v!r}")


def _cfg_policy(cfg):
    spec = cfg.get("policy")
    if spec is None:
        raise _DataError("config field 'policy' is missing")
    if spec == "greedy":
        return linear_policy(1.0)
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "greedy":
            return linear_policy(1.0)
        if kind == "linear":
            s = spec.get("s")
            if not isinstance(s, (int, float)) or isinstance(s, bool):
                raise _DataError("config field 'policy.s' must be a number")
            try:
                return linear_policy(float(s))
            except ValueError as e:
                raise _DataError(f"config field 'policy.s': {e}")
        raise _DataError(f"config field 'policy.kind' must be 'linear' or 'greedy', got {kind!r}")
    raise _DataError(f"config field 'policy' must be 'greedy' or an object, got {spec!r}")


def cmd_simulate(args):
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except OSError as e:
        raise _DataError(str(e))
    except json.JSONDecodeError as e:
        raise _DataError(f"config is not valid JSON: {e}")
    if not isinstance(cfg, dict):
        raise _DataError("config must be a JSON object")
    c = _cfg_field(cfg, "c", float)
    dist_path = _cfg_field(cfg, "dist", str)
    horizon = args.horizon if args.horizon is not None else _cfg_field(cfg, "horizon", int)
    burn_in = _cfg_field(cfg, "burn_in", int, required=False, default=0)
    seed = args.seed if args.seed is not None else _cfg_field(cfg, "seed", int, required=False, default=0)
    initial = _cfg_field(cfg, "initial_battery", float, required=False)
    policy = _cfg_policy(cfg)
    try:
        q = load_distribution(dist_path)
    except (OSError, ValueError) as e:
        raise _DataError(f"config field 'dist': {e}")
    try:
        sim_cfg = SimConfig(c, q, policy, horizon, burn_in, seed, initial)
    except (TypeError, ValueError) as e:
        raise _DataError(str(e))
    rep = simulate(sim_cfg)
    lines = ["seed,horizon,throughput,std_error",
             f"{seed},{horizon},{_fmt(rep.throughput_estimate)},{_fmt(rep.std_error)}"]
    _emit(args, _meta(args, f"generator={rep.generator} steps_used={rep.steps_used}") + lines)
    return 0


# ---------------------------------------------------------------- driver

def _build_parser():
    p = _Parser(prog="ehlin", description="linear power-control policy toolkit")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--tol", type=float, default=1e-12, help="series tolerance")
        sp.add_argument("--out", help="write CSV here instead of stdout")
        sp.add_argument("--no-meta", action="store_true", help="omit the timestamped comment line")

    sp = sub.add_parser("table", help="regenerate a published table")
    sp.add_argument("name", help=f"one of: {', '.join(TABLE_NAMES)}")
    common(sp)

    sp = sub.add_parser("sweep", help="adaptively sampled curve data")
    sp.add_argument("quantity", help=f"one of: {', '.join(QUANTITIES)}")
    sp.add_argument("--variable", required=True, help="sweep axis: c, p, s, or b")
    sp.add_argument("--grid", help="named grid (A, B, A1, B1) or comma-separated values")
    sp.add_argument("--transform", action="store_true", help="map [0,1) to c in [0,inf) via x/(1-x)")
    sp.add_argument("--d1", type=float, default=D1, help="max x spacing of adjacent samples")
    sp.add_argument("--d2", type=float, default=D2, help="alternative max Euclidean spacing")
    sp.add_argument("--c", type=float, help="fixed capacity")
    sp.add_argument("--p", type=float, help="fixed mean-to-capacity ratio")
    sp.add_argument("--s", type=float, help="fixed slope")
    sp.add_argument("--b", type=float, help="fixed capacity-mean product c*p")
    common(sp)

    sp = sub.add_parser("greedy", help="greedy threshold and bounds")
    sp.add_argument("dist_file", nargs="?", help="distribution file (value,probability lines)")
    sp.add_argument("--bounds", nargs=3, type=float, metavar=("X_LO", "X_HI", "MU"),
                    help="interval-mean family bounds")
    sp.add_argument("--clipped", nargs=2, type=float, metavar=("X_LO", "MU_BAR"),
                    help="clipped-family bounds")
    sp.add_argument("--mcr", type=float, help="bounds given the mean-to-capacity ratio")
    common(sp)

    sp = sub.add_parser("verify", help="run a named property suite")
    sp.add_argument("fact", help=f"one of: {', '.join(FACT_NAMES)}")
    common(sp)

    sp = sub.add_parser("simulate", help="run the battery simulator from a JSON config")
    sp.add_argument("config", help="JSON config file")
    sp.add_argument("--seed", type=int, help="override the config seed")
    sp.add_argument("--horizon", type=int, help="override the config horizon")
    common(sp)
    return p


_HANDLERS = {
    "table": cmd_table,
    "sweep": cmd_sweep,
    "greedy": cmd_greedy,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        tol = getattr(args, "tol", None)
        if tol is not None and not (math.isfinite(tol) and tol > 0.0):
            raise _UsageError(f"--tol must be positive and finite, got {tol}")
        return _HANDLERS[args.cmd](args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except _DataError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:
        # argparse --help and friends
        return int(e.code or 0)


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
