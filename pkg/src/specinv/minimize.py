"""Golden-section search and downhill bracketing for unimodal functions."""

import math

from .errors import NumericalError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section(func, a, b, xtol, max_iter=500):
    """Minimize a unimodal ``func`` on ``[a, b]``.

    Returns ``(x, fx)`` with the bracket shrunk below ``xtol`` (or to the
    resolution of floating point, whichever comes first).
    """
    a, b = min(a, b), max(a, b)
    c = a + INV_PHI2 * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = func(c), func(d)
    for _ in range(max_iter):
        if b - a <= xtol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = a + INV_PHI2 * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = func(d)
        if not a < c < d < b:
            break
    return (c, fc) if fc <= fd else (d, fd)


def bracket_minimum(func, x0, step, lo=-math.inf, hi=math.inf, grow=2.0, max_iter=200):
    """Walk downhill from ``x0`` until ``f(a) > f(m) < f(c)``.

    The walk is confined to ``[lo, hi]``.  Returns ``(a, m, c)``; raises
    :class:`NumericalError` when no interior minimum is found.
    """
    x1 = min(max(x0, lo), hi)
    f1 = func(x1)
    x2 = min(max(x1 + step, lo), hi)
    f2 = func(x2)
    if f2 > f1:
        step = -step
        x1, x2, f1, f2 = x2, x1, f2, f1
    for _ in range(max_iter):
        x3 = min(max(x2 + step, lo), hi)
        if x3 == x2:
            raise NumericalError("minimum not bracketed inside the admissible range",
                                 edge=x2, value=f2)
        f3 = func(x3)
        if f3 > f2:
            return (x1, x2, x3) if x1 < x3 else (x3, x2, x1)
        x1, f1, x2, f2 = x2, f2, x3, f3
        step *= grow
    raise NumericalError("minimum not bracketed", last=x2, value=f2, iterations=max_iter)
