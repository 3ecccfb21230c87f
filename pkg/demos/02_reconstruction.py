"""Recover an upper bound on the potential from its energy trajectory.

The trajectory F(v) is turned into the kinetic potential fbar(s), and
A(x) = fbar(1/(4x^2)) bounds f(x) from above.  For the oscillator the
bound is tight; with a barrier it is loose near the origin and tightens in
the tail.
"""

import sys
from pathlib import Path

import numpy as np

from specinv import (
    OscBarrier, PotentialShape, Power, coverage_window, default_coupling_grid, reconstruct_upper,
    sample_trajectory, to_kinetic_potential,
)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-output")
out.mkdir(exist_ok=True)

results = {}
for name, g in (("oscillator", Power(1)), ("barrier", OscBarrier(1, 1, 1))):
    shape = PotentialShape(g)
    curve = to_kinetic_potential(sample_trajectory(shape, default_coupling_grid()))
    lo, hi = coverage_window(curve)
    recon = reconstruct_upper(curve, np.linspace(lo, min(hi, 4.0), 300), shape)
    results[name] = recon
    print(f"{name}: window [{lo:.4f}, {hi:.4f}], min A - f = {recon.gap.min():.3e}, "
          f"max A - f = {recon.gap.max():.3e}")

gap = results["barrier"].gap
x = results["barrier"].x
for probe in (0.5, 1.0, 2.0, 3.0):
    print(f"  barrier gap at x={probe}: {np.interp(probe, x, gap):.4f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(figsize=(5, 4))
r = results["barrier"]
ax.plot(r.x, r.f_exact, label="f(x)")
ax.plot(r.x, r.A, "--", label="A(x)")
ax.set_xlabel("x")
ax.legend()
fig.tight_layout()
fig.savefig(out / "reconstruction.png", dpi=120)
print("wrote", out / "reconstruction.png")
