"""Characterization of the entangled region of the spin-1 dimer.

Closed-form results: the critical field B_c = (3/2)(J - K) where the product
level (label 8) crosses the singlet (label 9), and the zero-field existence
bound K < J - (T/3) ln((5 + 3 e^{2J/T}) / 2).  Numeric results: threshold
temperatures found by scan plus bisection on the negativity itself, and dense
negativity sweeps over any two of (J, K, B, T).

The closed-form and numeric routes are deliberately independent so each can
serve as an oracle for the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .entanglement import negativity_at
from .model import ModelParams
from .thermal import NonpositiveTemperatureError

PARAM_NAMES = ("J", "K", "B", "T")

# Negativity at or below this counts as zero in all boundary detection:
# well above eigensolver noise (~1e-12), well below physical plateaus (~0.1).
ZERO_NEGATIVITY_THRESHOLD = 1e-6
BISECTION_TOL = 1e-8
MAX_BISECTIONS = 200

# Coarse scan for the numeric threshold solver.  Log spacing resolves the
# narrow reentrant windows that open just above the critical field.
SCAN_T_MIN = 1e-3
SCAN_T_MAX = 10.0
SCAN_POINTS = 200

_BRACKET_T_MAX = 1e7


class NoRootError(RuntimeError):
    """The target function has no sign change on the maximal bracket."""


class NeverEntangledError(RuntimeError):
    """Negativity is zero across the entire temperature scan."""


class InvalidAxisError(ValueError):
    """Malformed or inconsistent sweep axis specification."""


@dataclass(frozen=True)
class ThresholdResult:
    """Root of a scalar equation: final bracket, iteration count, and whether
    the bracket shrank below the requested tolerance."""

    value: float
    bracket: tuple[float, float]
    iterations: int
    converged: bool


@dataclass(frozen=True)
class AxisSpec:
    name: str
    start: float
    stop: float
    count: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepGrid:
    """Negativity over a 2-D parameter grid.

    ``values[i, j]`` is the negativity at x-axis point i, y-axis point j
    (x-major layout).  ``fixed`` holds the two parameters not swept.
    """

    x_axis: AxisSpec
    y_axis: AxisSpec
    fixed: dict[str, float]
    values: np.ndarray


def critical_field(J: float, K: float) -> float:
    """B_c = (3/2)(J - K), the level crossing E_8(B_c) = E_9."""
    return 1.5 * (J - K)


def existence_bound_K(J: float, T: float) -> float:
    """Largest K (exclusive) admitting zero-field thermal entanglement at T.

    Entanglement exists at B = 0 iff K < J - (T/3) ln((5 + 3 e^{2J/T}) / 2).
    The log is evaluated as logaddexp(ln 5, ln 3 + 2J/T) - ln 2 so large
    positive 2J/T cannot overflow.
    """
    if not T > 0:
        raise NonpositiveTemperatureError(f"temperature must be > 0, got {T}")
    log_term = np.logaddexp(math.log(5.0), math.log(3.0) + 2.0 * J / T) - math.log(2.0)
    return float(J - (T / 3.0) * log_term)


def _bisect(
    f: Callable[[float], float], lo: float, hi: float, f_lo: float, tol: float
) -> ThresholdResult:
    # Invariant: sign(f(lo)) == sign(f_lo) != sign(f(hi)) throughout.
    iterations = 0
    while hi - lo > tol and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0.0) == (f_lo > 0.0):
            lo = mid
        else:
            hi = mid
        iterations += 1
    return ThresholdResult(
        value=0.5 * (lo + hi),
        bracket=(lo, hi),
        iterations=iterations,
        converged=hi - lo <= tol,
    )


def threshold_temperature_zero_field(
    J: float, K: float, tol: float = BISECTION_TOL
) -> ThresholdResult:
    """Zero-field threshold temperature from the closed-form existence bound.

    Solves existence_bound_K(J, T) = K by bisection on a bracket grown from
    (1e-6, 10).  Raises NoRootError when the bound never crosses K there,
    which includes every K at or above the T -> 0 limit of the bound.
    """

    def f(t: float) -> float:
        return existence_bound_K(J, t) - K

    lo, hi = 1e-6, 10.0
    f_lo = f(lo)
    f_hi = f(hi)
    while f_hi > 0.0 and hi < _BRACKET_T_MAX:
        hi *= 2.0
        f_hi = f(hi)
    if f_lo <= 0.0 or f_hi > 0.0:
        raise NoRootError(
            f"existence bound never crosses K={K} for J={J} on (1e-6, {hi})"
        )
    return _bisect(f, lo, hi, f_lo, tol)


def threshold_temperature_numeric(
    J: float, K: float, B: float, tol: float = BISECTION_TOL
) -> ThresholdResult:
    """Largest T at which the thermal negativity crosses zero.

    Scans SCAN_POINTS log-spaced temperatures in [SCAN_T_MIN, SCAN_T_MAX],
    then bisects from the largest scan point with negativity above
    ZERO_NEGATIVITY_THRESHOLD.  Starting from the largest such point keeps
    the result meaningful when N(T) is non-monotonic (entanglement that
    appears only on heating).

    Raises NeverEntangledError if no scan point is entangled, NoRootError if
    the state is still entangled at the scan's upper limit.
    """
    ts = np.geomspace(SCAN_T_MIN, SCAN_T_MAX, SCAN_POINTS)

    def g(t: float) -> float:
        return negativity_at(ModelParams(J, K, B, t)) - ZERO_NEGATIVITY_THRESHOLD

    gs = np.array([g(float(t)) for t in ts])
    entangled = np.nonzero(gs > 0.0)[0]
    if entangled.size == 0:
        raise NeverEntangledError(
            f"negativity <= {ZERO_NEGATIVITY_THRESHOLD} for all T in "
            f"[{SCAN_T_MIN}, {SCAN_T_MAX}] at J={J}, K={K}, B={B}"
        )
    i = int(entangled[-1])
    if i == ts.size - 1:
        raise NoRootError(f"still entangled at T={SCAN_T_MAX}")
    return _bisect(g, float(ts[i]), float(ts[i + 1]), float(gs[i]), tol)


def _validate_axis(axis: AxisSpec) -> None:
    if axis.name not in PARAM_NAMES:
        raise InvalidAxisError(f"axis name must be one of {PARAM_NAMES}, got {axis.name!r}")
    if axis.count < 2:
        raise InvalidAxisError(f"axis {axis.name} needs count >= 2, got {axis.count}")
    if not (math.isfinite(axis.start) and math.isfinite(axis.stop)):
        raise InvalidAxisError(f"axis {axis.name} has non-finite endpoints")
    if axis.start == axis.stop:
        raise InvalidAxisError(f"axis {axis.name} has zero width")


def sweep(x_axis: AxisSpec, y_axis: AxisSpec, fixed: Mapping[str, float]) -> SweepGrid:
    """Dense negativity evaluation over the grid x_axis x y_axis.

    ``fixed`` must supply exactly the two parameters not named by the axes.
    Points are independent, so evaluation order cannot affect the result;
    this implementation is sequential.
    """
    _validate_axis(x_axis)
    _validate_axis(y_axis)
    if x_axis.name == y_axis.name:
        raise InvalidAxisError(f"axes must differ, both are {x_axis.name!r}")
    expected = set(PARAM_NAMES) - {x_axis.name, y_axis.name}
    if set(fixed) != expected:
        raise InvalidAxisError(
            f"fixed parameters must be exactly {sorted(expected)}, got {sorted(fixed)}"
        )
    for axis in (x_axis, y_axis):
        if axis.name == "T" and (axis.start <= 0.0 or axis.stop <= 0.0):
            raise NonpositiveTemperatureError(f"T axis must be positive, got {axis}")
    if "T" in fixed and not fixed["T"] > 0.0:
        raise NonpositiveTemperatureError(f"fixed T must be > 0, got {fixed['T']}")

    xs = x_axis.values()
    ys = y_axis.values()
    values = np.empty((x_axis.count, y_axis.count))
    base = {name: float(v) for name, v in fixed.items()}
    for i, xv in enumerate(xs):
        for j, yv in enumerate(ys):
            point = {**base, x_axis.name: float(xv), y_axis.name: float(yv)}
            values[i, j] = negativity_at(ModelParams(**point))
    return SweepGrid(x_axis=x_axis, y_axis=y_axis, fixed=base, values=values)
