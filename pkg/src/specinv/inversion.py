"""Upper reconstruction of f from its kinetic potential, and energy round trips.

For f(x) = g(x^2) with g convex and increasing,

    g(1/(4s)) <= fbar(s)            (envelope lower bound)
    f(x) <= fbar(1/(4x^2)) =: A(x)  (inversion upper bound)
    F(v) = min_s { s + v fbar(s) }

The first two follow from s<x^2> >= 1/4 and Jensen's inequality; the third
recovers energies from the kinetic potential.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import BoundaryWarning, NumericalError, RangeError
from .minimize import bracket_minimum, golden_section
from .potential import evaluate

INEQUALITY_SLACK = 1e-6


@dataclass(eq=False)
class ReconstructionCurve:
    """Samples ``(x, A)`` with optional exact ``f`` for comparison."""

    x: np.ndarray
    A: np.ndarray
    f_exact: np.ndarray = None
    source: str = ""
    window: tuple = (math.nan, math.nan)
    omitted: np.ndarray = field(default_factory=lambda: np.empty(0))

    @property
    def gap(self):
        """A - f, or ``None`` without an exact shape."""
        return None if self.f_exact is None else self.A - self.f_exact

    def inequality_violations(self, slack=INEQUALITY_SLACK):
        if self.f_exact is None:
            return []
        return np.flatnonzero(self.A < self.f_exact - slack).tolist()

    def columns(self):
        f = self.f_exact if self.f_exact is not None else np.full(self.x.shape, np.nan)
        return {"x": self.x, "A": self.A, "f_exact": f}


def coverage_window(curve):
    """x-interval on which 1/(4x^2) stays inside the sampled s-range."""
    s_lo, s_hi = curve.s_range
    return 0.5 / math.sqrt(s_hi), 0.5 / math.sqrt(s_lo)


def reconstruct_upper(curve, x_grid, shape=None):
    """A(x) = fbar(1/(4x^2)) on the part of ``x_grid`` inside the coverage window.

    Points outside the window are dropped and listed in ``omitted``.
    """
    x = np.asarray(x_grid, dtype=float)
    if x.ndim != 1 or np.any(x <= 0) or np.any(np.diff(x) <= 0):
        raise ValueError("x grid must be positive and strictly increasing")
    lo, hi = coverage_window(curve)
    inside = (x >= lo * (1 - 1e-13)) & (x <= hi * (1 + 1e-13))
    if not np.any(inside):
        raise RangeError(f"no x inside the coverage window [{lo!r}, {hi!r}]")
    xs = x[inside]
    A = np.asarray(curve(0.25 / xs**2), dtype=float).reshape(xs.shape)
    f = None if shape is None else np.asarray(evaluate(shape, xs), dtype=float).reshape(xs.shape)
    return ReconstructionCurve(x=xs, A=A, f_exact=f, source=curve.source,
                               window=(lo, hi), omitted=x[~inside])


def semiclassical_energy(curve, v, rtol=1e-10):
    """``(min_s {s + v fbar(s)}, argmin)`` over the sampled s-range.

    The search runs over log s, so ``rtol`` is a relative tolerance on s.
    A minimizer at the edge of the range raises a :class:`BoundaryWarning`.
    """
    if not v > 0:
        raise ValueError(f"coupling v must be > 0, got {v!r}")
    lo, hi = (math.log(s) for s in curve.s_range)

    def phi(u):
        s = min(max(math.exp(u), curve.s[0]), curve.s[-1])
        return s + v * curve(s)

    u, e = golden_section(phi, lo, hi, rtol)
    if u - lo <= 2 * rtol or hi - u <= 2 * rtol:
        warnings.warn(f"minimizer at the edge of the sampled s-range for v={v!r}; "
                      "the true minimum may lie outside the data", BoundaryWarning, stacklevel=2)
    return e, min(max(math.exp(u), curve.s[0]), curve.s[-1])


def envelope_kinetic(transform, s_grid):
    """``(s, g(1/(4s)))``: the lower envelope of fbar built on the oscillator."""
    s = np.asarray(s_grid, dtype=float)
    if np.any(~(s > 0)):
        raise ValueError("envelope requires s > 0")
    return s, np.asarray(transform(0.25 / s), dtype=float)


def envelope_energy_bound(transform, v, rtol=1e-12):
    """``min_s {s + v g(1/(4s))}``, a lower bound on F(v) for convex g."""
    if not v > 0:
        raise ValueError(f"coupling v must be > 0, got {v!r}")
    y_lo, y_hi = transform.y_range
    u_lo = math.log(0.25 / y_hi) if y_hi < math.inf else -math.inf
    u_hi = math.log(0.25 / y_lo) if y_lo > 0 else math.inf

    def phi(u):
        s = math.exp(u)
        return s + v * float(transform(min(max(0.25 / s, y_lo), y_hi)))

    # the oscillator optimum s = sqrt(v)/2 is a natural starting scale
    start = min(max(math.log(0.5 * math.sqrt(v)), u_lo), u_hi)
    try:
        a, _, c = bracket_minimum(phi, start, 0.5, lo=u_lo, hi=u_hi)
    except NumericalError as exc:
        raise NumericalError(f"could not bracket the envelope minimum for v={v!r}",
                             **exc.diagnostics) from None
    _, e = golden_section(phi, a, c, rtol)
    return e
