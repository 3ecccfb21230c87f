"""Plot-ready data for the energy curve, the reconstruction and the
wavefunction family.  No plotting happens here."""

import numpy as np

from .eigensolver import check_coupling_grid, solve_many


def rescale_to_peak(psi, x, normalization=20.0):
    """Scale ``psi`` so that its value at x = 0 equals ``normalization``."""
    if not normalization > 0:
        raise ValueError(f"normalization must be > 0, got {normalization!r}")
    centre = int(np.argmin(np.abs(x)))
    if x[centre] != 0.0:
        raise ValueError("grid has no node at x = 0")
    # divide first so the centre value is exactly normalization
    return (psi / psi[centre]) * normalization


def half_width_half_max(x, psi):
    """Smallest x > 0 where an even, unimodal profile drops to half its peak."""
    centre = int(np.argmin(np.abs(x)))
    half = 0.5 * psi[centre]
    right = psi[centre:]
    k = int(np.argmax(right < half))
    if k == 0:
        raise ValueError("profile never falls below half maximum on the grid")
    x0, x1 = x[centre + k - 1], x[centre + k]
    p0, p1 = right[k - 1], right[k]
    return float(x0 + (half - p0) * (x1 - x0) / (p1 - p0))


def wavefunction_family(shape, v_list, cfg=None, normalization=20.0, workers=1):
    """``[(v, x, psi), ...]`` with every profile scaled to psi(0) = normalization."""
    v = check_coupling_grid(v_list)
    states = solve_many(shape, v, cfg, workers)
    return [(gs.v, gs.x, rescale_to_peak(gs.psi, gs.x, normalization)) for gs in states]


def long_format(family):
    """Stack a wavefunction family into ``v, x, psi`` columns."""
    v = np.concatenate([np.full(x.size, vv) for vv, x, _ in family])
    x = np.concatenate([x for _, x, _ in family])
    psi = np.concatenate([p for _, _, p in family])
    return {"v": v, "x": x, "psi": psi}
