# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same contract as ``_kernels_py`` (the reference implementation documents the
three-zone summation scheme); this twin exists because the throughput series
sits in the innermost loop of several nested optimizations and the simulator
walks 10^6-step recursions.
"""

from libc.math cimport ceil, exp, expm1, log, log1p, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double U_BIG = 2.0
cdef double U_SMALL = 0.8
cdef int K_CAP = 160
cdef double INVPHI = (sqrt(5.0) - 1.0) / 2.0

BACKEND_NAME = "cython"


cdef double _gamma_core(double c, double p, double s, double tol) nogil:
    cdef double q, t, lnq, lnt, half, total, wi, u, u0, lnu0
    cdef double G0, G1, lnum1, corr, sign, a, sk, lb, g
    cdef double d1, uk, den
    cdef long M, k
    if s >= 1.0:
        return p * 0.5 * log1p(c)
    if s <= 0.0:
        return 0.0
    q = 1.0 - p
    t = 1.0 - s
    lnq = log1p(-p)
    lnt = log1p(-s)
    half = 0.5 * tol
    total = 0.0
    wi = p
    u = c * s
    if u > U_BIG and t > 0.0:
        # zone 1: closed forms for indices with u_i > U_BIG
        u0 = u
        lnu0 = log(u0)
        M = <long>ceil((lnu0 - log(U_BIG)) / (-lnt))
        if M < 1:
            M = 1
        G0 = -expm1(M * lnq) / p
        G1 = q * (1.0 - exp((M - 1) * lnq) * (M * p + q)) / (p * p)
        total = 0.5 * p * (lnu0 * G0 + lnt * G1)
        lnum1 = lnu0 + (M - 1) * lnt
        corr = 0.0
        sign = 1.0
        lb = log(U_BIG)
        for k in range(1, K_CAP + 1):
            a = lnq - k * lnt
            if a > 0.0:
                sk = exp((M - 1) * lnq - k * lnum1) * expm1(-M * a) / expm1(-a)
            elif a < 0.0:
                sk = exp(-k * lnu0) * expm1(M * a) / expm1(a)
            else:
                sk = M * exp(-k * lnu0)
            corr += sign / k * sk
            sign = -sign
            if p * G0 * exp(-(k + 1) * lb) / (k + 1) <= 0.01 * half:
                break
        total += 0.5 * p * corr
        wi = p * exp(M * lnq)
        u = u0 * exp(M * lnt)
    # zone 2: direct summation
    while u > U_SMALL:
        g = 0.5 * log1p(u)
        if (wi / p) * g <= half:
            return total
        total += wi * g
        wi *= q
        u *= t
    # zone 3: alternating closed-form tail
    if u > 0.0 and wi > 0.0:
        d1 = -expm1(lnq + lnt)
        uk = u
        k = 1
        while True:
            den = -expm1(lnq + k * lnt)
            if k % 2:
                total += 0.5 / k * wi * uk / den
            else:
                total -= 0.5 / k * wi * uk / den
            if (wi / d1) * uk * u / ((k + 1) * (1.0 - u)) <= half or k >= K_CAP:
                break
            uk *= u
            k += 1
    return total


def gamma_series(double c, double p, double s, double tol=1e-12):
    """Worst-case throughput of the slope-s linear policy at (c, p)."""
    cdef double out
    with nogil:
        out = _gamma_core(c, p, s, tol)
    return out


def gamma_series_batch(double c, double p, s_values, double tol=1e-12):
    """gamma_series over an array of slopes; returns a float64 array."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sv = np.ascontiguousarray(s_values, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(sv.shape[0], dtype=np.float64)
    cdef Py_ssize_t i, n = sv.shape[0]
    cdef double[::1] svv = sv
    cdef double[::1] ov = out
    with nogil:
        for i in range(n):
            ov[i] = _gamma_core(c, p, svv[i], tol)
    return out


def stationarity_series(double c, double p, double s, double tol=1e-12):
    """Residual of the interior-optimality equation (see the Python twin)."""
    cdef double q = 1.0 - p
    cdef double t = 1.0 - s
    cdef double lnq = log1p(-p)
    cdef double lnt = log1p(-s)
    cdef double half = 0.5 * tol
    cdef double total = 0.0
    cdef double wi = p
    cdef double u = c * s
    cdef double m, wn, rho, bound, uk, d1, rho_k, g0, g1, inner
    cdef long i = 0, n0, k
    while u > U_SMALL:
        m = s * (i + 1) - 1.0
        total -= wi * m * u / (1.0 + u)
        wn = wi * q
        rho = q * t
        bound = wn * ((s * (i + 2) + 1.0) / (1.0 - rho) + s * rho / ((1.0 - rho) * (1.0 - rho)))
        if bound <= half:
            return total
        wi = wn
        u *= t
        i += 1
    if u > 0.0 and wi > 0.0:
        n0 = i
        uk = u
        k = 1
        d1 = -expm1(lnq + lnt)
        while True:
            rho_k = q * t ** k
            g0 = 1.0 / -expm1(lnq + k * lnt)
            g1 = rho_k * g0 * g0
            inner = (s * (n0 + 1) - 1.0) * g0 + s * g1
            if k % 2:
                total -= wi * uk * inner
            else:
                total += wi * uk * inner
            bound = (wi / d1) * uk * u * ((s * (n0 + 1) + 1.0) + s / d1) / (1.0 - u)
            if bound <= half or k >= K_CAP:
                return total
            uk *= u
            k += 1
    return total


def golden_max_gamma(double c, double p, double lo, double hi,
                     double tol_s=1e-10, double tol_series=1e-12):
    """Golden-section maximization of gamma_series over s in [lo, hi]."""
    cdef double a = lo, b = hi
    cdef double x1, x2, f1, f2, sm, fm
    cdef long it = 0
    with nogil:
        x1 = b - INVPHI * (b - a)
        x2 = a + INVPHI * (b - a)
        f1 = _gamma_core(c, p, x1, tol_series)
        f2 = _gamma_core(c, p, x2, tol_series)
        while b - a > tol_s:
            it += 1
            if f1 < f2:
                a = x1
                x1 = x2
                f1 = f2
                x2 = a + INVPHI * (b - a)
                f2 = _gamma_core(c, p, x2, tol_series)
            else:
                b = x2
                x2 = x1
                f2 = f1
                x1 = b - INVPHI * (b - a)
                f1 = _gamma_core(c, p, x1, tol_series)
        sm = 0.5 * (a + b)
        fm = _gamma_core(c, p, sm, tol_series)
    return sm, fm, it


def simulate_linear(double b1, arrivals, double c, double s, long burn_in, long n_batches):
    """Battery recursion for the linear policy (see the Python twin)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] arr = np.ascontiguousarray(arrivals, dtype=np.float64)
    cdef double[::1] av = arr
    cdef long horizon = arr.shape[0] + 1
    cdef long n_used = horizon - burn_in
    cdef long batch_len = n_used // n_batches
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sums = np.zeros(n_batches, dtype=np.float64)
    cdef double[::1] sv = sums
    cdef double total = 0.0, b = b1, bmin = b1, bmax = b1
    cdef double g, rw, mean, mu, var, se, x
    cdef long step, k = 0, j, i
    with nogil:
        for step in range(1, horizon + 1):
            g = s * b
            if step > burn_in:
                rw = 0.5 * log1p(g)
                total += rw
                if batch_len > 0:
                    j = k // batch_len
                    if j < n_batches:
                        sv[j] += rw
                k += 1
            if step < horizon:
                b = b - g + av[step - 1]
                if b > c:
                    b = c
                if b < bmin:
                    bmin = b
                if b > bmax:
                    bmax = b
    mean = total / n_used
    se = 0.0
    if n_batches > 1 and batch_len > 0:
        mu = 0.0
        for i in range(n_batches):
            mu += sums[i] / batch_len
        mu /= n_batches
        var = 0.0
        for i in range(n_batches):
            x = sums[i] / batch_len - mu
            var += x * x
        var /= n_batches - 1
        se = sqrt(var / n_batches)
    return mean, se, n_used, bmin, bmax
