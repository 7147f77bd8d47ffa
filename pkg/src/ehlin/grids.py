"""Evaluation grids and the adaptive sampling used by sweeps and checks.

The named grids cover capacity (A, with the coarser A1) and ratio (B, B1)
axes.  Qualitative properties (monotonicity, unimodality, curve shapes) are
checked on adaptively refined samples: every adjacent pair must be closer
than D1 on the x axis or closer than D2 in the plane, so no feature wider
than the tolerances can hide between samples.  Unbounded capacity axes are
mapped to [0,1) by c = x/(1-x) before refinement.
"""

import math
from dataclasses import dataclass

D1 = 1e-4      # max x spacing
D2 = 1e-3      # alternative max Euclidean spacing
_MAX_DEPTH = 60

GRID_A = tuple(sorted(float(f"{j}e{i}") for i in range(-3, 3) for j in range(1, 10))) + (1000.0,)
GRID_B = (0.001,) + tuple(float(f"0.{i:02d}") for i in range(1, 100))
GRID_A1 = tuple(10.0**i for i in range(-3, 4))
GRID_B1 = (0.001, 0.01, 0.1, 0.5, 0.9, 0.99)

NAMED_GRIDS = {"A": GRID_A, "B": GRID_B, "A1": GRID_A1, "B1": GRID_B1}


def unbounded_transform(x):
    """Map [0,1) onto [0,inf): the capacity reparameterization c = x/(1-x)."""
    if not 0.0 <= x < 1.0:
        raise ValueError(f"transformed coordinate must lie in [0,1), got {x}")
    return x / (1.0 - x)


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: the variable, its grid, and an optional unbounding map.

    With transform set, grid points live in [0,1) and the swept function
    receives x/(1-x); refinement distances are measured on the transformed
    axis.
    """

    variable: str
    grid: tuple
    transform: bool = False

    def __post_init__(self):
        if self.variable not in ("c", "p", "s", "b"):
            raise ValueError(f"variable must be one of c, p, s, b, got {self.variable!r}")
        grid = tuple(float(x) for x in self.grid)
        if not grid:
            raise ValueError("grid must be non-empty")
        for x in grid:
            if not math.isfinite(x):
                raise ValueError(f"grid values must be finite, got {x}")
        if any(a >= b for a, b in zip(grid, grid[1:])):
            raise ValueError("grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)


def adaptive_refine(f, xs, d1=D1, d2=D2):
    """Sample (x, f(x)) with adjacent points within d1 in x or d2 in the plane.

    Starts from the strictly increasing seed xs and bisects every violating
    gap.  Returns the refined points in ascending x.  Depth is capped, so a
    genuine discontinuity degrades to d1-dense sampling around the jump
    instead of recursing forever.
    """
    xs = [float(x) for x in xs]
    if not xs:
        raise ValueError("need at least one seed point")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValueError("seed points must be strictly increasing")

    out = [(xs[0], f(xs[0]))]

    def fill(a, b, depth):
        if abs(b[0] - a[0]) <= d1 or math.hypot(b[0] - a[0], b[1] - a[1]) <= d2 or depth >= _MAX_DEPTH:
            out.append(b)
            return
        xm = 0.5 * (a[0] + b[0])
        m = (xm, f(xm))
        fill(a, m, depth + 1)
        fill(m, b, depth + 1)

    for x in xs[1:]:
        fill(out[-1], (x, f(x)), 0)
    return out
