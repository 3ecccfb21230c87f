"""Runtime verification of every inequality and identity in the chain

    s<x^2> >= 1/4,   <g(x^2)> >= g(<x^2>),   fbar(s) >= g(1/(4s)),
    f(x) <= fbar(1/(4x^2)),   F(v) = min_s {s + v fbar(s)},
    fbar''(s) F''(v) v^3 = -1,   <x^2> decreasing in v.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryWarning
from .inversion import INEQUALITY_SLACK, coverage_window, envelope_kinetic, reconstruct_upper, semiclassical_energy
from .trajectory import convexity_identity_residual, residual_tolerance, sample_trajectory, to_kinetic_potential

STATE_SLACK = 1e-9
ROUND_TRIP_RTOL = 1e-5


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    margin: float
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name:<22} margin={self.margin:+.3e} {self.detail}".rstrip()


def check_uncertainty(states):
    margin = min(gs.s_kinetic * gs.x2_mean - 0.25 for gs in states)
    return CheckResult("uncertainty", margin >= -STATE_SLACK, margin, "min s<x^2> - 1/4")


def check_jensen(states, shape):
    margin = min(gs.f_mean - float(shape.transform(gs.x2_mean)) for gs in states)
    return CheckResult("jensen", margin >= -STATE_SLACK, margin, "min <f> - g(<x^2>)")


def check_envelope(curve, shape):
    _, env = envelope_kinetic(shape.transform, curve.s)
    margin = float(np.min(curve.fbar - env))
    return CheckResult("envelope", margin >= -INEQUALITY_SLACK, margin, "min fbar(s) - g(1/(4s))")


def check_inversion(recon):
    margin = float(np.min(recon.gap))
    lo, hi = recon.window
    return CheckResult("inversion", margin >= -INEQUALITY_SLACK, margin,
                       f"min A(x) - f(x) on {recon.x.size} points in [{lo:.6g}, {hi:.6g}]")


def check_round_trip(traj, curve):
    with warnings.catch_warnings():
        # the extreme couplings sit on the edges of the sampled s-range by construction
        warnings.simplefilter("ignore", BoundaryWarning)
        err = max(abs(semiclassical_energy(curve, v)[0] - e) / abs(e) for v, e in zip(traj.v, traj.E))
    return CheckResult("round_trip", err <= ROUND_TRIP_RTOL, ROUND_TRIP_RTOL - err,
                       f"max relative |min_s(s + v fbar) - E| = {err:.3e}")


def check_convexity_identity(traj, curve):
    if len(traj) < 5:
        return CheckResult("convexity_identity", True, 0.0, "skipped: fewer than 5 couplings")
    _, res = convexity_identity_residual(traj, curve)
    tol = residual_tolerance(traj.v)
    worst = float(np.max(np.abs(res)))
    return CheckResult("convexity_identity", worst <= tol, tol - worst,
                       f"max |fbar'' F'' v^3 + 1| = {worst:.3e} (tol {tol:.3g})")


def check_concentration(states):
    x2 = np.array([gs.x2_mean for gs in states])
    if x2.size < 2:
        return CheckResult("concentration", True, 0.0, "single coupling")
    drop = -np.diff(x2)
    margin = float(np.min(drop))
    return CheckResult("concentration", margin > 0, margin, "min decrease of <x^2> between couplings")


def run_checks(shape, v_grid, cfg=None, x_grid=None, workers=1):
    """Solve once and run every check; returns a list of :class:`CheckResult`."""
    traj = sample_trajectory(shape, v_grid, cfg, workers)
    curve = to_kinetic_potential(traj)
    if x_grid is None:
        lo, hi = coverage_window(curve)
        x_grid = np.linspace(lo, hi, 200)
    recon = reconstruct_upper(curve, x_grid, shape)
    states = traj.states
    return [
        check_uncertainty(states),
        check_jensen(states, shape),
        check_envelope(curve, shape),
        check_inversion(recon),
        check_round_trip(traj, curve),
        check_convexity_identity(traj, curve),
        check_concentration(states),
    ]
