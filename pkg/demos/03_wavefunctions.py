"""Ground states concentrate at the origin as the coupling grows.

Profiles are rescaled so that psi(0) = 20, which makes the narrowing easy
to see on one set of axes.
"""

import sys
from pathlib import Path

from specinv import OscBarrier, PotentialShape, concentration_curve
from specinv.figures import half_width_half_max, wavefunction_family

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-output")
out.mkdir(exist_ok=True)

shape = PotentialShape(OscBarrier(1, 1, 1))
family = wavefunction_family(shape, [3e-4, 0.1, 1.0, 10.0])
for v, x, psi in family:
    print(f"v={v:<8g} psi(0)={psi[x.size // 2]:g}  half width at half max={half_width_half_max(x, psi):.4f}")

for v, x2 in concentration_curve(shape, [3e-4, 1e-2, 1.0, 10.0]):
    print(f"<x^2>({v:g}) = {x2:.6f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(figsize=(5, 4))
for v, x, psi in family:
    keep = abs(x) <= 12
    ax.plot(x[keep], psi[keep], label=f"v = {v:g}")
ax.set_xlabel("x")
ax.set_ylabel(r"$\psi$")
ax.legend()
fig.tight_layout()
fig.savefig(out / "wavefunctions.png", dpi=120)
print("wrote", out / "wavefunctions.png")
