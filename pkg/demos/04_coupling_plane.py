"""Where in the (J, K) plane does a field-bathed dimer stay entangled?

Fix B = 0.8 and T = 0.2, then sweep both couplings.  Entanglement survives
only where the critical field B_c = (3/2)(J - K) comfortably exceeds the
applied field, i.e. at large |K| or small |J|; near the line B_c = B the
polarized product state takes over.

Run:  python3 demos/04_coupling_plane.py
"""

import numpy as np

from spindimer import AxisSpec, critical_field, sweep

B, T = 0.8, 0.2

grid = sweep(
    AxisSpec("J", -1.0, -0.01, 61),
    AxisSpec("K", -1.5, -0.01, 61),
    {"B": B, "T": T},
)

js = grid.x_axis.values()
ks = grid.y_axis.values()
entangled = grid.values > 1e-6
print(f"grid {grid.values.shape}: {entangled.sum()} of {entangled.size} points entangled")

# Spot-check the B_c = B line: crossing it flips the phase.
for j in (-0.2, -0.5, -0.9):
    k_line = j - 2 * B / 3  # critical_field(j, k_line) == B
    row = np.argmin(np.abs(js - j))
    below = grid.values[row, np.argmin(np.abs(ks - (k_line - 0.3)))]
    above = grid.values[row, np.argmin(np.abs(ks - (k_line + 0.3)))]
    print(
        f"  J = {j:+.1f}: B_c = B at K = {k_line:+.3f}; "
        f"N deep side {below:.3f}, shallow side {above:.3f}"
    )
    assert abs(critical_field(j, k_line) - B) < 1e-12

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

from pathlib import Path

fig, ax = plt.subplots(figsize=(5.2, 4))
mesh = ax.pcolormesh(js, ks, grid.values.T, shading="auto")
fig.colorbar(mesh, label="negativity")
ax.plot(js, js - 2 * B / 3, "w:", lw=1, label="$B_c = B$")
ax.set_ylim(ks[0], ks[-1])
ax.set_xlabel("J")
ax.set_ylabel("K")
ax.set_title(f"negativity at B={B}, T={T}")
ax.legend(loc="lower right")
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "coupling_plane.png", dpi=150, bbox_inches="tight")
print(f"wrote {out / 'coupling_plane.png'}")
