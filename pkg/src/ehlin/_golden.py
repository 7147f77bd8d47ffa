"""Golden-section search on a unimodal function of one variable."""

import math

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, tol):
    """Maximize f on [lo, hi]; returns (x, f(x), iterations).

    Assumes f is unimodal on the bracket.  The bracket shrinks until its
    width is at most tol.
    """
    a, b = lo, hi
    x1 = b - INVPHI * (b - a)
    x2 = a + INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while b - a > tol:
        it += 1
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - INVPHI * (b - a)
            f1 = f(x1)
    xm = 0.5 * (a + b)
    return xm, f(xm), it


def golden_min(f, lo, hi, tol):
    """Minimize f on [lo, hi]; returns (x, f(x), iterations)."""
    x, v, it = golden_max(lambda z: -f(z), lo, hi, tol)
    return x, -v, it
