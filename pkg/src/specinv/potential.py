"""Potential shapes f(x) = g(x^2) with g increasing and convex.

A shape is always built from its transform ``g``; the value of ``f`` is
obtained by evaluating ``g`` at ``x**2``, which makes every shape exactly
even in ``x``.
"""

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import RangeError
from .interp import MonotoneCubic

EPS_CONV = 1e-10


class ConvexTransform:
    """Base class for the transforms ``g`` with ``f(x) = g(x**2)``."""

    #: smallest and largest admissible argument
    y_range = (0.0, math.inf)

    def __call__(self, y):
        raise NotImplementedError

    def spec(self):
        """The shape-grammar string that rebuilds this transform."""
        raise NotImplementedError

    def default_grid(self):
        return np.concatenate([[0.0], np.geomspace(1e-3, 1e3, 61)])


@dataclass(frozen=True)
class Power(ConvexTransform):
    """g(y) = y**p, i.e. f(x) = |x|**(2p).  ``Power(1)`` is the oscillator."""

    p: float

    def __post_init__(self):
        if not self.p > 0:
            raise ValueError(f"power p must be > 0, got {self.p!r}")

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        out = y if self.p == 1 else np.power(y, self.p)
        return out if out.ndim else float(out)

    def spec(self):
        return f"power:p={self.p!r}"


@dataclass(frozen=True)
class OscBarrier(ConvexTransform):
    """g(y) = a*y + b/(c + y): an oscillator with a central barrier."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if not getattr(self, name) > 0:
                raise ValueError(f"oscbarrier {name} must be > 0, got {getattr(self, name)!r}")

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        out = self.a * y + self.b / (self.c + y)
        return out if out.ndim else float(out)

    def spec(self):
        return f"oscbarrier:a={self.a!r},b={self.b!r},c={self.c!r}"


@dataclass(frozen=True, eq=False)
class Tabulated(ConvexTransform):
    """g given at knots (y_i, g_i), monotone-cubic between them."""

    y: tuple
    g: tuple
    source: str = ""
    _interp: MonotoneCubic = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        y = np.asarray(self.y, dtype=float)
        g = np.asarray(self.g, dtype=float)
        if y.ndim != 1 or y.shape != g.shape:
            raise ValueError("tabulated knots need matching 1-D y and g")
        if y.size < 4:
            raise ValueError(f"tabulated transform needs >= 4 knots, got {y.size}")
        if y[0] < 0:
            raise ValueError("tabulated knots must have y >= 0")
        if np.any(np.diff(y) <= 0):
            raise ValueError("tabulated knots must be strictly increasing in y")
        object.__setattr__(self, "y", tuple(y.tolist()))
        object.__setattr__(self, "g", tuple(g.tolist()))
        object.__setattr__(self, "_interp", MonotoneCubic(y, g))

    def __eq__(self, other):
        return isinstance(other, Tabulated) and (self.y, self.g) == (other.y, other.g)

    def __hash__(self):
        return hash((self.y, self.g))

    @property
    def y_range(self):
        return self.y[0], self.y[-1]

    def __call__(self, y):
        try:
            return self._interp(y)
        except ValueError:
            raise RangeError(
                f"y outside tabulated knot range [{self.y[0]!r}, {self.y[-1]!r}]"
            ) from None

    def spec(self):
        return f"tabulated:file={self.source}"

    def default_grid(self):
        return np.asarray(self.y)


@dataclass(frozen=True)
class PotentialShape:
    """A symmetric potential f(x) = g(x**2)."""

    transform: ConvexTransform

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def x_max(self):
        """Largest |x| at which the shape is defined."""
        return math.sqrt(self.transform.y_range[1])

    def spec(self):
        return self.transform.spec()


def evaluate(shape, x):
    """f(x) = g(x**2).  Tabulated shapes raise ``RangeError`` off their knots."""
    x = np.asarray(x, dtype=float)
    y = x * x
    t = shape.transform
    lo, hi = t.y_range
    bad = (y < lo) | (y > hi)
    if np.any(bad):
        offending = float(x[bad].flat[0]) if x.ndim else float(x)
        raise RangeError(
            f"x = {offending!r} outside the tabulated range (x^2 must lie in [{lo!r}, {hi!r}])"
        )
    return t(y)


@dataclass
class ValidationReport:
    """Indices ``i`` of failed checks on a y-grid.

    ``monotonicity`` holds i with g(y[i+1]) <= g(y[i]); ``convexity`` holds
    the centre index i of every second divided difference below ``-eps``.
    """

    monotonicity: list
    convexity: list
    eps: float = EPS_CONV

    @property
    def accepted(self):
        return not self.monotonicity and not self.convexity

    def __bool__(self):
        return self.accepted

    def describe(self):
        if self.accepted:
            return "accepted"
        parts = []
        if self.monotonicity:
            parts.append(f"not increasing at grid index {self.monotonicity}")
        if self.convexity:
            parts.append(f"concave (2nd divided difference < -{self.eps:g}) at grid index {self.convexity}")
        return "; ".join(parts)


def validate_transform(t, y_grid=None, eps=EPS_CONV):
    """Check that ``t`` is increasing and convex on ``y_grid``.

    Tabulated transforms default to their own knots, the analytic families
    to a log-spaced grid on [1e-3, 1e3] plus the origin.
    """
    y = t.default_grid() if y_grid is None else np.asarray(y_grid, dtype=float)
    if y.ndim != 1 or y.size < 4:
        raise ValueError(f"validation grid needs >= 4 points, got {y.size}")
    if y[0] < 0 or np.any(np.diff(y) <= 0):
        raise ValueError("validation grid must be nonnegative and strictly increasing")
    g = np.asarray(t(y), dtype=float)
    dg = np.diff(g)
    slope = dg / np.diff(y)
    second = 2.0 * np.diff(slope) / (y[2:] - y[:-2])
    return ValidationReport(
        monotonicity=[int(i) for i in np.flatnonzero(dg <= 0)],
        convexity=[int(i) + 1 for i in np.flatnonzero(second < -eps)],
        eps=eps,
    )


def load_tabulated(path):
    """Read a ``y,g`` CSV file into a :class:`Tabulated` transform."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [c.strip() for c in reader.fieldnames] != ["y", "g"]:
            raise ValueError(f"{path}: expected header 'y,g', got {reader.fieldnames}")
        rows = [(float(r["y"]), float(r["g"])) for r in reader]
    if not rows:
        raise ValueError(f"{path}: no data rows")
    y, g = zip(*rows)
    return Tabulated(y, g, source=str(path))


def parse_shape(spec):
    """Build a shape from ``power:p=..``, ``oscbarrier:a=..,b=..,c=..`` or
    ``tabulated:file=<path>``."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"shape spec {spec!r} lacks '<kind>:' prefix")
    params = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"shape parameter {item!r} is not key=value")
        params[key.strip()] = value.strip()
    kind = kind.strip().lower()
    expected = {"power": {"p"}, "oscbarrier": {"a", "b", "c"}, "tabulated": {"file"}}
    if kind not in expected:
        raise ValueError(f"unknown shape kind {kind!r}; choose from {sorted(expected)}")
    if set(params) != expected[kind]:
        raise ValueError(f"{kind} needs parameters {sorted(expected[kind])}, got {sorted(params)}")
    if kind == "tabulated":
        return PotentialShape(load_tabulated(params["file"]))
    try:
        values = {k: float(v) for k, v in params.items()}
    except ValueError as exc:
        raise ValueError(f"bad numeric parameter in {spec!r}: {exc}") from None
    if kind == "power":
        return PotentialShape(Power(**values))
    return PotentialShape(OscBarrier(**values))
