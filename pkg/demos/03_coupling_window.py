"""The zero-field entanglement window in the biquadratic coupling.

With B = 0 there is a closed-form condition: the thermal state is entangled
exactly when K < J - (T/3) ln((5 + 3 e^{2J/T}) / 2).  Solving it for T at
fixed couplings gives the threshold temperature in closed form, which this
script compares against a solver that knows nothing about the formula and
just bisects on the computed negativity.

Run:  python3 demos/03_coupling_window.py
"""

import numpy as np

from spindimer import (
    ModelParams,
    existence_bound_K,
    negativity_at,
    threshold_temperature_numeric,
    threshold_temperature_zero_field,
)

J = -0.4

print(f"zero-field existence bound at J = {J}:")
for t in (0.05, 0.1, 0.2, 0.4, 0.6):
    k_star = existence_bound_K(J, t)
    inside = negativity_at(ModelParams(J, k_star - 0.02, 0.0, t))
    outside = negativity_at(ModelParams(J, k_star + 0.02, 0.0, t))
    print(
        f"  T = {t:4.2f}: K* = {k_star:+.4f}   "
        f"N(K*-0.02) = {inside:.2e}   N(K*+0.02) = {outside:.2e}"
    )

print("\nthreshold temperature, closed form vs blind bisection on N:")
for k in (-0.5, -0.6, -0.8, -1.0):
    exact = threshold_temperature_zero_field(J, k).value
    scan = threshold_temperature_numeric(J, k, 0.0).value
    print(f"  K = {k:+.1f}: T_c = {exact:.6f}  (numeric {scan:.6f}, diff {abs(exact - scan):.1e})")

# The window closes entirely once K >= J: the singlet is no longer the
# zero-field ground state and no temperature recovers entanglement.
print("\nN at K = J (window closed):",
      negativity_at(ModelParams(J, J, 0.0, 0.05)))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

from pathlib import Path

ts = np.linspace(0.02, 1.5, 120)
bounds = [existence_bound_K(J, float(t)) for t in ts]
fig, ax = plt.subplots(figsize=(5.2, 4))
ax.plot(bounds, ts, "k-", label="closed-form boundary")
ax.fill_betweenx(ts, -1.6, bounds, alpha=0.25, label="entangled")
ax.set_xlim(-1.6, 0.0)
ax.set_xlabel("K")
ax.set_ylabel("T")
ax.set_title(f"zero-field entanglement window, J={J}")
ax.legend()
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "coupling_window.png", dpi=150, bbox_inches="tight")
print(f"wrote {out / 'coupling_window.png'}")
