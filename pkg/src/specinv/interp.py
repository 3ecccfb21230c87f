"""Monotone piecewise-cubic Hermite interpolation.

Slopes default to the Fritsch-Butland weighted harmonic mean (the same
rule as ``scipy.interpolate.PchipInterpolator``).  Callers that know the
exact derivative at the knots may pass it instead; it is then clipped
so that monotone data stays monotone.
"""

import numpy as np


def pchip_slopes(x, y):
    """Shape-preserving knot slopes for monotone data."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    h = np.diff(x)
    delta = np.diff(y) / h
    n = x.size
    if n == 2:
        return np.full(2, delta[0])

    m = np.zeros(n)
    w1 = 2.0 * h[1:] + h[:-1]
    w2 = h[1:] + 2.0 * h[:-1]
    same_sign = np.sign(delta[1:]) * np.sign(delta[:-1]) > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        hmean = (w1 + w2) / (w1 / delta[:-1] + w2 / delta[1:])
    m[1:-1] = np.where(same_sign, hmean, 0.0)
    m[0] = _edge_slope(h[0], h[1], delta[0], delta[1])
    m[-1] = _edge_slope(h[-1], h[-2], delta[-1], delta[-2])
    return m


def _edge_slope(h0, h1, d0, d1):
    # non-centered three-point formula, clipped to keep the end monotone
    d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1)
    if np.sign(d) != np.sign(d0):
        return 0.0
    if np.sign(d0) != np.sign(d1) and abs(d) > abs(3.0 * d0):
        return 3.0 * d0
    return d


def limit_slopes(x, y, m):
    """Clip slopes so every Hermite segment is monotone.

    Uses the sufficient box condition 0 <= m_k / delta_k <= 3 on each
    segment; slopes already produced by :func:`pchip_slopes` pass unchanged.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    m = np.array(m, dtype=float)
    delta = np.diff(y) / np.diff(x)
    for k, dk in enumerate(delta):
        if dk == 0.0:
            m[k] = m[k + 1] = 0.0
            continue
        for j in (k, k + 1):
            r = m[j] / dk
            if r < 0.0:
                m[j] = 0.0
            elif r > 3.0:
                m[j] = 3.0 * dk
    return m


class MonotoneCubic:
    """Piecewise-cubic Hermite interpolant on strictly increasing knots.

    Evaluation outside ``[x[0], x[-1]]`` raises ``ValueError``; the caller
    decides how to report it.
    """

    def __init__(self, x, y, slopes=None):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise ValueError("x and y must be 1-D arrays of equal length")
        if x.size < 2:
            raise ValueError("need at least two knots")
        if np.any(np.diff(x) <= 0):
            raise ValueError("knots must be strictly increasing")
        self.x = x
        self.y = y
        if slopes is None:
            m = pchip_slopes(x, y)
        else:
            m = np.asarray(slopes, dtype=float)
            if m.shape != x.shape:
                raise ValueError("slopes must match knots")
        self.m = limit_slopes(x, y, m)

    @property
    def domain(self):
        return float(self.x[0]), float(self.x[-1])

    def __call__(self, t, nu=0):
        t = np.asarray(t, dtype=float)
        lo, hi = self.x[0], self.x[-1]
        if np.any((t < lo) | (t > hi)):
            raise ValueError(f"query outside [{lo!r}, {hi!r}]")
        k = np.clip(np.searchsorted(self.x, t, side="right") - 1, 0, self.x.size - 2)
        h = self.x[k + 1] - self.x[k]
        u = (t - self.x[k]) / h
        y0, y1 = self.y[k], self.y[k + 1]
        m0, m1 = self.m[k] * h, self.m[k + 1] * h
        if nu == 0:
            h00 = (1 + 2 * u) * (1 - u) ** 2
            h10 = u * (1 - u) ** 2
            h01 = u * u * (3 - 2 * u)
            h11 = u * u * (u - 1)
            out = h00 * y0 + h10 * m0 + h01 * y1 + h11 * m1
        elif nu == 1:
            d00 = 6 * u * (u - 1)
            d10 = (1 - u) * (1 - 3 * u)
            d11 = u * (3 * u - 2)
            out = (d00 * (y0 - y1) + d10 * m0 + d11 * m1) / h
        else:
            raise ValueError("only nu=0 and nu=1 are supported")
        return out if out.ndim else float(out)
