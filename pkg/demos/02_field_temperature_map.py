"""Map thermal entanglement over the field-temperature plane.

At zero temperature the negativity is a step: 1 below the critical field,
0 above it.  Heating smears the step, kills entanglement above a threshold
temperature, and, just above B_c, does something less obvious: a state that
is separable at T = 0 becomes entangled on moderate heating, because the
thermal mix picks up weight on the entangled singlet before the product
ground state is fully depopulated.

Run:  python3 demos/02_field_temperature_map.py
"""

import numpy as np

from spindimer import AxisSpec, ModelParams, negativity_at, sweep, threshold_temperature_numeric

J, K = -0.4, -0.6

grid = sweep(
    AxisSpec("B", 0.0, 1.0, 81),
    AxisSpec("T", 0.005, 1.0, 81),
    {"J": J, "K": K},
)
print(f"grid: {grid.values.shape}, max negativity {grid.values.max():.6f}")

# Reentrance slice just above the critical field.
b = 0.35
print(f"\nnegativity along T at B = {b} (separable at T -> 0, then not):")
for t in (0.001, 0.05, 0.1, 0.2, 0.4, 0.6):
    print(f"  T = {t:5.3f}: N = {negativity_at(ModelParams(J, K, b, t)):.5f}")
tc = threshold_temperature_numeric(J, K, b)
print(f"upper threshold at B = {b}: T_c = {tc.value:.5f} ({tc.iterations} bisections)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

from pathlib import Path

fig, ax = plt.subplots(figsize=(5.2, 4))
mesh = ax.pcolormesh(
    grid.x_axis.values(), grid.y_axis.values(), grid.values.T, shading="auto"
)
fig.colorbar(mesh, label="negativity")
ax.axvline(0.3, color="w", ls=":", lw=1)
ax.set_xlabel("B")
ax.set_ylabel("T")
ax.set_title(f"thermal entanglement, J={J}, K={K}")
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "field_temperature_map.png", dpi=150, bbox_inches="tight")
print(f"wrote {out / 'field_temperature_map.png'}")
