"""Pure-Python numerical kernels.

Reference implementation of the hot inner loops: the worst-case throughput
series, its stationarity companion, a golden-section slope search, and the
battery-recursion simulator.  A compiled twin lives in ``_kernels_cy``; the
active backend is chosen in ``_backend``.  Both implement the same contract
and are cross-checked by the test suite.

The throughput of a linear policy with slope s at capacity c under the
two-point worst-case arrival process with mean-to-capacity ratio p is

    S(c, p, s) = sum_{i>=0} p (1-p)^i r(c s (1-s)^i),   r(x) = log(1+x)/2.

Direct summation needs about log(2cs)/s terms, which explodes for the small
slopes probed by the optimizers at large c.  The kernel therefore splits the
index range into three zones by the size of u_i = c s (1-s)^i:

  zone 1 (u > 2):    r(u) = (log u + log(1+1/u))/2.  The log u part is an
                     arithmetico-geometric sum with closed form; the 1/u part
                     expands into geometric sums, one per power of 1/u.
  zone 2 (2>=u>0.8): plain term-by-term summation (a short stretch, about
                     0.92/s terms).
  zone 3 (u<=0.8):   log(1+u) expands into the alternating series
                     sum_k (-1)^(k+1) u^k / k, and each power of u again sums
                     to a closed-form geometric expression over i.

Each zone is exact up to an explicit remainder bound, so the documented
absolute tolerance holds with no asymptotic hand-waving.
"""

import math

U_BIG = 2.0      # zone 1 / zone 2 boundary
U_SMALL = 0.8    # zone 2 / zone 3 boundary
K_CAP = 160      # hard cap on expansion order in zones 1 and 3

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

_HAVE_NUMPY = True
try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _HAVE_NUMPY = False

BACKEND_NAME = "python"


def _zone1(c, p, s, lnq, lnt, tol):
    """Closed-form sum of all leading terms with u_i > U_BIG.

    Returns (partial sum, first index M past the zone).  Assumes u_0 > U_BIG
    and 0 < s < 1.
    """
    u0 = c * s
    lnu0 = math.log(u0)
    M = max(1, int(math.ceil((lnu0 - math.log(U_BIG)) / (-lnt))))
    q = 1.0 - p
    # G0 = sum_{i<M} q^i, G1 = sum_{i<M} i q^i; the G1 numerator is arranged
    # so the near-cancellation at small p happens analytically, not in floats
    G0 = -math.expm1(M * lnq) / p
    G1 = q * (1.0 - math.exp((M - 1) * lnq) * (M * p + q)) / (p * p)
    total = 0.5 * p * (lnu0 * G0 + lnt * G1)
    # correction sum_{i<M} q^i log(1+1/u_i) expanded in powers of 1/u;
    # the k-th geometric sum has ratio q t^-k which may exceed 1, so it is
    # evaluated from whichever end dominates to stay inside float range
    lnum1 = lnu0 + (M - 1) * lnt          # log u_{M-1} >= log U_BIG
    corr = 0.0
    sign = 1.0
    lb = math.log(U_BIG)
    for k in range(1, K_CAP + 1):
        a = lnq - k * lnt
        if a > 0.0:
            sk = math.exp((M - 1) * lnq - k * lnum1) * math.expm1(-M * a) / math.expm1(-a)
        elif a < 0.0:
            sk = math.exp(-k * lnu0) * math.expm1(M * a) / math.expm1(a)
        else:
            sk = M * math.exp(-k * lnu0)
        corr += sign / k * sk
        sign = -sign
        # everything beyond order k is below G0 * U_BIG^-(k+1) / (k+1)
        if p * G0 * math.exp(-(k + 1) * lb) / (k + 1) <= 0.01 * tol:
            break
    total += 0.5 * p * corr
    return total, M


def _zone3(wi, u, lnq, lnt, tol):
    """Closed-form tail from the first index with u <= U_SMALL.

    wi is p(1-p)^N at that index, u the corresponding u_N.
    """
    if u <= 0.0 or wi <= 0.0:
        return 0.0
    total = 0.0
    d1 = -math.expm1(lnq + lnt)           # 1 - (1-p)(1-s)
    uk = u
    k = 1
    while True:
        den = -math.expm1(lnq + k * lnt)  # 1 - (1-p)(1-s)^k
        total += 0.5 * (1.0 if k % 2 else -1.0) / k * wi * uk / den
        if (wi / d1) * uk * u / ((k + 1) * (1.0 - u)) <= tol or k >= K_CAP:
            return total
        uk *= u
        k += 1


def gamma_series(c, p, s, tol=1e-12):
    """Worst-case throughput of the slope-s linear policy at (c, p).

    Absolute truncation error at most tol (default 1e-12); termination is
    guaranteed by the tail bound (1-p)^N r(c s (1-s)^N).  s=1 returns the
    exact single term p*r(c); s=0 returns 0.
    """
    if s >= 1.0:
        return p * 0.5 * math.log1p(c)
    if s <= 0.0:
        return 0.0
    q = 1.0 - p
    t = 1.0 - s
    lnq = math.log1p(-p)
    lnt = math.log1p(-s)
    half = 0.5 * tol
    total = 0.0
    wi = p
    u = c * s
    if u > U_BIG and t > 0.0:
        z1, M = _zone1(c, p, s, lnq, lnt, half)
        total = z1
        wi = p * math.exp(M * lnq)
        u = c * s * math.exp(M * lnt)
    # zone 2: direct summation, vectorized in blocks when the stretch is long
    if _HAVE_NUMPY and u > U_SMALL and math.log(u / U_SMALL) / s > 4096.0:
        total, wi, u = _zone2_blocked(total, wi, u, q, t, p, half)
    while u > U_SMALL:
        g = 0.5 * math.log1p(u)
        if (wi / p) * g <= half:
            return total
        total += wi * g
        wi *= q
        u *= t
    return total + _zone3(wi, u, lnq, lnt, half)


def _zone2_blocked(total, wi, u, q, t, p, half):
    """numpy-blocked zone-2 summation for very long direct stretches."""
    block = 8192
    while u > U_SMALL:
        if (wi / p) * 0.5 * math.log1p(u) <= half:
            return total, 0.0, 0.0
        idx = _np.arange(block)
        uv = u * _np.power(t, idx)
        wv = wi * _np.power(q, idx)
        live = uv > U_SMALL
        if not live.all():
            n = int(_np.argmin(live))   # first index past the zone
            total += float(_np.dot(wv[:n], 0.5 * _np.log1p(uv[:n])))
            return total, wi * q ** n, u * t ** n
        total += float(_np.dot(wv, 0.5 * _np.log1p(uv)))
        wi *= q ** block
        u *= t ** block
    return total, wi, u


def gamma_series_batch(c, p, s_values, tol=1e-12):
    """gamma_series evaluated over an array of slopes; returns a float array."""
    if _HAVE_NUMPY:
        out = _np.empty(len(s_values), dtype=float)
        for i, s in enumerate(s_values):
            out[i] = gamma_series(c, p, float(s), tol)
        return out
    return [gamma_series(c, p, float(s), tol) for s in s_values]


def stationarity_series(c, p, s, tol=1e-12):
    """Residual of the interior-optimality equation for the slope.

    Computes E_N[(s(N+1)-1)/(1+u_N)] - (s/p - 1) for geometric N through the
    cancellation-free rearrangement

        R = -sum_i p(1-p)^i (s(i+1)-1) u_i/(1+u_i),

    which uses sum_i p(1-p)^i (s(i+1)-1) = s/p - 1 exactly.  Positive below
    the maximizer, negative above it, zero at the interior optimum.
    """
    q = 1.0 - p
    t = 1.0 - s
    lnq = math.log1p(-p)
    lnt = math.log1p(-s)
    half = 0.5 * tol
    total = 0.0
    wi = p
    u = c * s
    i = 0
    while u > U_SMALL:
        m = s * (i + 1) - 1.0
        total -= wi * m * u / (1.0 + u)
        # |remaining| <= sum_{j>i} w_j (s(j+1)+1): arithmetico-geometric bound
        wn = wi * q
        rho = q * t
        bound = wn * ((s * (i + 2) + 1.0) / (1.0 - rho) + s * rho / (1.0 - rho) ** 2)
        if bound <= half:
            return total
        wi = wn
        u *= t
        i += 1
    # closed-form tail: expand u/(1+u) = sum_k (-1)^(k+1) u^k and sum each
    # power over the remaining indices (geometric + arithmetico-geometric)
    if u > 0.0 and wi > 0.0:
        n0 = i
        uk = u
        k = 1
        d1 = -math.expm1(lnq + lnt)
        while True:
            rho_k = q * t ** k
            g0 = 1.0 / -math.expm1(lnq + k * lnt)          # sum_j rho_k^j
            g1 = rho_k * g0 * g0                            # sum_j j rho_k^j
            # sum_{j>=0} q^j t^(kj) (s(n0+j+1)-1) = (s(n0+1)-1) g0 + s g1
            inner = (s * (n0 + 1) - 1.0) * g0 + s * g1
            total -= (1.0 if k % 2 else -1.0) * wi * uk * inner
            bound = (wi / d1) * uk * u * ((s * (n0 + 1) + 1.0) + s / d1) / (1.0 - u)
            if bound <= half or k >= K_CAP:
                return total
            uk *= u
            k += 1
    return total


def golden_max_gamma(c, p, lo, hi, tol_s=1e-10, tol_series=1e-12):
    """Golden-section maximization of gamma_series over s in [lo, hi].

    Returns (s_star, gamma_at_star, iterations).  Assumes unimodality on the
    bracket; the caller layers its own multistart guard on top.
    """
    a, b = lo, hi
    x1 = b - INVPHI * (b - a)
    x2 = a + INVPHI * (b - a)
    f1 = gamma_series(c, p, x1, tol_series)
    f2 = gamma_series(c, p, x2, tol_series)
    it = 0
    while b - a > tol_s:
        it += 1
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + INVPHI * (b - a)
            f2 = gamma_series(c, p, x2, tol_series)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - INVPHI * (b - a)
            f1 = gamma_series(c, p, x1, tol_series)
    sm = 0.5 * (a + b)
    return sm, gamma_series(c, p, sm, tol_series), it


def simulate_linear(b1, arrivals, c, s, burn_in, n_batches):
    """Battery recursion for the linear policy, with batch-means error bars.

    b1 is the battery level at the first step (already clipped to [0, c]);
    arrivals[k] is the energy arriving before step k+2.  Total steps equal
    len(arrivals)+1.  Returns (mean, std_error, steps_used, b_min, b_max)
    where the mean covers all post-burn-in steps and the standard error comes
    from n_batches equal contiguous batches tiling the start of that span.
    """
    horizon = len(arrivals) + 1
    n_used = horizon - burn_in
    batch_len = n_used // n_batches
    sums = [0.0] * n_batches
    total = 0.0
    b = b1
    bmin = b
    bmax = b
    k = 0                      # post-burn-in step counter
    for step in range(1, horizon + 1):
        g = s * b
        if step > burn_in:
            rw = 0.5 * math.log1p(g)
            total += rw
            j = k // batch_len if batch_len else 0
            if j < n_batches:
                sums[j] += rw
            k += 1
        if step < horizon:
            b = b - g + arrivals[step - 1]
            if b > c:
                b = c
            if b < bmin:
                bmin = b
            if b > bmax:
                bmax = b
    mean = total / n_used
    if n_batches > 1 and batch_len > 0:
        bm = [x / batch_len for x in sums]
        mu = sum(bm) / n_batches
        var = sum((x - mu) ** 2 for x in bm) / (n_batches - 1)
        se = math.sqrt(var / n_batches)
    else:
        se = 0.0
    return mean, se, n_used, bmin, bmax
