"""Ground state of H = -d^2/dx^2 + v f(x) on [-L, L] with Dirichlet ends.

Units are hbar = 2m = 1.  The operator is discretized with the three-point
stencil on a uniform grid; the lowest eigenvalue of the tridiagonal matrix
is found by Sturm-sequence bisection and its eigenvector by inverse
iteration.  By default the solve is repeated on the grid with half the
spacing and every reported scalar is Richardson-extrapolated in h^2.
"""

import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from scipy.linalg import LinAlgError, solveh_banded
from scipy.optimize import brentq

from ._sturm import bisect_kth, sturm_count
from .errors import DataQualityError, NumericalError
from .minimize import golden_section
from .potential import evaluate

BOUNDARY_RATIO = 1e-12
_GH_T, _GH_W = hermgauss(64)
_GL_T, _GL_W = leggauss(64)


@dataclass(frozen=True)
class SolverConfig:
    """Discretization settings.

    ``half_width=None`` picks L per coupling from a WKB decay margin:
    the tunnelling exponent from the turning point to L equals
    ``decay_margin``.
    """

    half_width: float = None
    n_points: int = 4001
    auto_domain: bool = True
    extrapolate: bool = True
    decay_margin: float = 36.0
    tol: float = 1e-12
    max_sweeps: int = 8

    def __post_init__(self):
        if self.half_width is not None and not self.half_width > 0:
            raise ValueError(f"half_width must be > 0, got {self.half_width!r}")
        if int(self.n_points) != self.n_points or self.n_points < 3 or self.n_points % 2 == 0:
            raise ValueError(f"n_points must be an odd integer >= 3, got {self.n_points!r}")
        if not self.decay_margin > 0:
            raise ValueError("decay_margin must be > 0")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")


@dataclass(frozen=True, eq=False)
class GroundState:
    """Lowest eigenpair on ``x`` plus the expectation values built from it.

    ``psi`` is normalized so that ``sum(psi**2) * h == 1`` and ``psi(0) > 0``.
    """

    energy: float
    psi: np.ndarray = field(repr=False)
    x: np.ndarray = field(repr=False)
    v: float
    s_kinetic: float
    f_mean: float
    x2_mean: float
    shape: object = field(repr=False)
    half_width: float = 0.0
    nodes: int = 0
    sturm_index: int = 0

    @property
    def h(self):
        return float(self.x[1] - self.x[0])

    @property
    def norm_error(self):
        return abs(float(np.sum(self.psi**2) * self.h) - 1.0)

    @property
    def partition_error(self):
        """Relative mismatch of E against s + v<f>."""
        return abs(self.energy - (self.s_kinetic + self.v * self.f_mean)) / abs(self.energy)

    @property
    def boundary_ratio(self):
        edge = max(abs(self.psi[1]), abs(self.psi[-2]))
        return edge / np.max(np.abs(self.psi))


ExpectationProfile = namedtuple("ExpectationProfile", "s f_mean x2_mean g_of_x2mean")


def gaussian_estimate(shape, v):
    """Best Gaussian variational energy and its exponent alpha.

    The trial density is proportional to exp(-alpha x^2); this is an upper
    bound on the ground-state energy of the continuum problem.
    """
    t = shape.transform
    y_lo, y_hi = t.y_range

    def energy(log_alpha):
        alpha = math.exp(log_alpha)
        y = np.clip(_GH_T**2 / alpha, y_lo, y_hi)
        return 0.5 * alpha + v * float(np.dot(_GH_W, t(y))) / math.sqrt(math.pi)

    grid = np.linspace(-20.0, 20.0, 81)
    vals = [energy(u) for u in grid]
    k = int(np.argmin(vals))
    a, b = grid[max(k - 1, 0)], grid[min(k + 1, grid.size - 1)]
    u, e = golden_section(energy, a, b, 1e-6)
    return e, math.exp(u)


def choose_half_width(shape, v, decay_margin=36.0):
    """Half-width L at which the WKB tunnelling exponent reaches ``decay_margin``."""
    e_est, alpha = gaussian_estimate(shape, v)
    sigma = 1.0 / math.sqrt(alpha)
    x_cap = shape.x_max * (1.0 - 1e-12)

    def excess(x):
        return v * float(evaluate(shape, x)) - e_est

    if excess(0.0) >= 0.0:
        x_t = 0.0
    else:
        hi = min(sigma, x_cap)
        while excess(hi) < 0.0:
            if hi >= x_cap:
                return x_cap
            hi = min(2.0 * hi, x_cap)
        x_t = brentq(excess, 0.0, hi, xtol=1e-14 * hi)

    def exponent(length):
        xs = x_t + 0.5 * (length - x_t) * (_GL_T + 1.0)
        k = np.sqrt(np.maximum(v * evaluate(shape, xs) - e_est, 0.0))
        return 0.5 * (length - x_t) * float(np.dot(_GL_W, k))

    hi = x_t + sigma
    while exponent(min(hi, x_cap)) < decay_margin:
        if hi >= x_cap:
            return x_cap
        hi = x_t + 2.0 * (hi - x_t)
    hi = min(hi, x_cap)
    return brentq(lambda length: exponent(length) - decay_margin, x_t, hi, xtol=1e-13 * hi)


def _solve_grid(shape, v, half_width, n, tol, max_sweeps):
    # integer multiples of h: exactly symmetric with an exact node at 0
    m = (n - 1) // 2
    h = half_width / m
    x = h * np.arange(-m, m + 1, dtype=float)
    f = evaluate(shape, x)
    vf = v * f[1:-1]
    off = -1.0 / (h * h)
    d = 2.0 / (h * h) + vf
    e2 = np.full(d.size - 1, off * off)

    # Gershgorin floor and a Rayleigh-quotient ceiling bracket the lowest eigenvalue
    lo = float(np.min(vf))
    trial = np.exp(-20.0 * (x[1:-1] / half_width) ** 2)
    rq = (np.dot(d * trial, trial) + 2.0 * off * np.dot(trial[1:], trial[:-1])) / np.dot(trial, trial)
    hi = float(rq) * (1.0 + 1e-12) + 1e-12
    if sturm_count(d, e2, lo) != 0 or sturm_count(d, e2, hi) < 1:
        raise NumericalError("initial eigenvalue bracket is invalid", v=v, lo=lo, hi=hi)
    lo, hi, _ = bisect_kth(d, e2, 0, lo, hi, tol)
    index = sturm_count(d, e2, hi)

    # shift a little below lo so the Cholesky factor of T - shift*I exists
    ab = np.empty((2, d.size))
    ab[0, 0] = 0.0
    ab[0, 1:] = off
    gap = max(tol, 1e-10 * abs(lo))
    ab[1] = d - (lo - gap)
    y = np.ones(d.size)
    energy = 0.5 * (lo + hi)
    scale = 4.0 / (h * h) + float(np.max(vf))
    history = []
    for _ in range(max_sweeps):
        try:
            y = solveh_banded(ab, y)
        except LinAlgError:
            ab[1] += gap
            gap *= 2.0
            history.append(math.nan)
            continue
        y /= np.linalg.norm(y)
        ty = d * y
        ty[1:] += off * y[:-1]
        ty[:-1] += off * y[1:]
        res = float(np.linalg.norm(ty - energy * y))
        history.append(res)
        if res <= 1e-9 * max(1.0, abs(energy)) + 1e3 * np.finfo(float).eps * scale:
            break
    else:
        raise NumericalError("inverse iteration did not converge", v=v, half_width=half_width,
                             n_points=n, residuals=history)

    psi = np.zeros(n)
    psi[1:-1] = y
    if psi[n // 2] < 0:
        psi = -psi
    psi /= math.sqrt(np.sum(psi * psi) * h)
    rho = psi * psi
    return {
        "energy": energy,
        "psi": psi,
        "x": x,
        "s": float(np.sum(np.diff(psi) ** 2) / h),
        "f": float(np.dot(f, rho) * h),
        "x2": float(np.dot(x * x, rho) * h),
        "index": int(index),
    }


def _sign_changes(psi):
    nz = psi[psi != 0.0]
    return int(np.count_nonzero(np.signbit(nz[1:]) != np.signbit(nz[:-1])))


def _boundary_ratio(psi):
    return max(abs(psi[1]), abs(psi[-2])) / np.max(np.abs(psi))


def ground_state(shape, v, cfg=None):
    """Lowest eigenpair of -d^2/dx^2 + v f(x)."""
    cfg = cfg or SolverConfig()
    if not (isinstance(v, (int, float, np.floating)) and v > 0 and math.isfinite(v)):
        raise ValueError(f"coupling v must be a finite number > 0, got {v!r}")
    v = float(v)
    L = cfg.half_width if cfg.half_width is not None else choose_half_width(shape, v, cfg.decay_margin)
    x_cap = shape.x_max * (1.0 - 1e-12)
    L = min(L, x_cap)
    n = cfg.n_points
    for _ in range(60):
        coarse = _solve_grid(shape, v, L, n, cfg.tol, cfg.max_sweeps)
        fine = _solve_grid(shape, v, L, 2 * n - 1, cfg.tol, cfg.max_sweeps) if cfg.extrapolate else None
        top = fine or coarse
        ratio = _boundary_ratio(top["psi"])
        if not cfg.auto_domain or ratio <= BOUNDARY_RATIO:
            break
        if L >= x_cap:
            raise NumericalError("wavefunction does not decay inside the shape's domain",
                                 v=v, half_width=L, boundary_ratio=ratio)
        L = min(1.25 * L, x_cap)
    else:
        raise NumericalError("domain growth did not reach negligible boundary amplitude",
                             v=v, half_width=L, boundary_ratio=ratio)

    if fine is None:
        vals = {k: coarse[k] for k in ("energy", "s", "f", "x2")}
        psi = coarse["psi"]
    else:
        vals = {k: (4.0 * fine[k] - coarse[k]) / 3.0 for k in ("energy", "s", "f", "x2")}
        psi = fine["psi"][::2].copy()
        psi /= math.sqrt(np.sum(psi * psi) * (coarse["x"][1] - coarse["x"][0]))
    index = max(coarse["index"], fine["index"] if fine else 0)
    return GroundState(
        energy=vals["energy"],
        psi=psi,
        x=coarse["x"],
        v=v,
        s_kinetic=vals["s"],
        f_mean=vals["f"],
        x2_mean=vals["x2"],
        shape=shape,
        half_width=float(L),
        nodes=_sign_changes(psi),
        sturm_index=index,
    )


def solve_many(shape, v_grid, cfg=None, workers=1):
    """``ground_state`` over ``v_grid``, in order; threads when ``workers > 1``."""
    v_grid = [float(v) for v in v_grid]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda v: ground_state(shape, v, cfg), v_grid))
    return [ground_state(shape, v, cfg) for v in v_grid]


def expectation_profile(gs, shape):
    """``(s, <f>, <x^2>, g(<x^2>))`` for a state computed from ``shape``."""
    if shape != gs.shape:
        raise ValueError("state was computed for a different shape")
    return ExpectationProfile(gs.s_kinetic, gs.f_mean, gs.x2_mean,
                              float(shape.transform(gs.x2_mean)))


def check_coupling_grid(v_grid):
    v = np.asarray(v_grid, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("coupling grid must be a non-empty 1-D sequence")
    if np.any(~np.isfinite(v)) or np.any(v <= 0):
        raise ValueError("couplings must be finite and > 0")
    if np.any(np.diff(v) <= 0):
        raise ValueError("coupling grid must be strictly increasing")
    return v


def concentration_curve(shape, v_grid, cfg=None, workers=1):
    """``[(v, <x^2>), ...]``; <x^2> must fall strictly as v grows."""
    v = check_coupling_grid(v_grid)
    states = solve_many(shape, v, cfg, workers)
    out = [(gs.v, gs.x2_mean) for gs in states]
    x2 = np.array([p[1] for p in out])
    bad = np.flatnonzero(np.diff(x2) >= 0)
    if bad.size:
        raise DataQualityError(f"<x^2> not decreasing at grid indices {bad.tolist()}", bad)
    return out
