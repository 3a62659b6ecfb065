"""Two coupled spin-1 sites with bilinear and biquadratic exchange in a z-field.

The Hamiltonian is

    H = J (S1 . S2) + K (S1 . S2)^2 + B (S1z + S2z)

on the 9-dimensional product space.  The product basis is |m1, m2> with
m in (1, 0, -1) descending and site 1 major, i.e. index = 3*(1 - m1) + (1 - m2):

    |1,1>, |1,0>, |1,-1>, |0,1>, |0,0>, |0,-1>, |-1,1>, |-1,0>, |-1,-1>

Because S1.S2, its square, and the total-Sz Zeeman term commute, H has a
parameter-independent eigenbasis and a closed-form level structure with nine
levels, labelled 1..9.  Energies in terms of (J, K, B):

    label 1: K + J - B      label 4: K - J - B      label 7: K + J + 2B
    label 2: K + J + B      label 5: K + J          label 8: K + J - 2B
    label 3: K - J + B      label 6: K - J          label 9: 4K - 2J

Levels 7 and 8 are the product states |1,1> and |-1,-1>; all other levels are
entangled, with label 9 the maximally entangled total-spin singlet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import kron


class ZeroRepulsionError(ValueError):
    """A vanishing Hubbard repulsion admits no exchange-coupling map."""


@dataclass(frozen=True)
class ModelParams:
    """Exchange couplings ``J`` (bilinear), ``K`` (biquadratic), field ``B``,
    and temperature ``T``, all in units with the Boltzmann constant set to 1.
    """

    J: float
    K: float
    B: float
    T: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.J, self.K, self.B, self.T)):
            raise ValueError("model parameters must be finite")
        if self.T < 0:
            raise ValueError(f"temperature must be >= 0, got {self.T}")


@dataclass(frozen=True)
class HubbardParams:
    """Hopping ``t`` and spin-channel repulsions ``U0`` (total spin 0) and
    ``U2`` (total spin 2) of the underlying two-well lattice model."""

    t: float
    U0: float
    U2: float


@dataclass(frozen=True)
class EnergyLevel:
    label: int
    energy: float
    state: np.ndarray


@dataclass(frozen=True)
class AnalyticSpectrum:
    """The nine closed-form levels in label order (1..9)."""

    levels: tuple[EnergyLevel, ...]

    def energies(self) -> np.ndarray:
        return np.array([lv.energy for lv in self.levels])

    def states(self) -> np.ndarray:
        """9x9 matrix whose column ``i`` is the state of label ``i + 1``."""
        return np.column_stack([lv.state for lv in self.levels])

    def level(self, label: int) -> EnergyLevel:
        return self.levels[label - 1]


_SQRT2 = math.sqrt(2.0)

_SX = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128) / _SQRT2
_SY = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=np.complex128) / _SQRT2
_SZ = np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=np.complex128)
_I3 = np.eye(3, dtype=np.complex128)

_SPIN_DOT = kron(_SX, _SX) + kron(_SY, _SY) + kron(_SZ, _SZ)
_SPIN_DOT_SQ = _SPIN_DOT @ _SPIN_DOT
_TOTAL_SZ = kron(_SZ, _I3) + kron(_I3, _SZ)

# Energy of level i is the row i-1 of this table dotted with (J, K, B).
_ENERGY_COEFFS = np.array(
    [
        [1, 1, -1],
        [1, 1, 1],
        [-1, 1, 1],
        [-1, 1, -1],
        [1, 1, 0],
        [-1, 1, 0],
        [1, 1, 2],
        [1, 1, -2],
        [-2, 4, 0],
    ],
    dtype=float,
)


def _ket(m1: int, m2: int) -> np.ndarray:
    v = np.zeros(9, dtype=np.complex128)
    v[3 * (1 - m1) + (1 - m2)] = 1.0
    return v


def _build_eigenstates() -> np.ndarray:
    s2, s3, s6 = math.sqrt(2.0), math.sqrt(3.0), math.sqrt(6.0)
    cols = [
        (_ket(0, -1) + _ket(-1, 0)) / s2,
        (_ket(1, 0) + _ket(0, 1)) / s2,
        (-_ket(1, 0) + _ket(0, 1)) / s2,
        (-_ket(0, -1) + _ket(-1, 0)) / s2,
        (_ket(1, -1) + _ket(-1, 1) + 2 * _ket(0, 0)) / s6,
        (_ket(1, -1) - _ket(-1, 1)) / s2,
        _ket(1, 1),
        _ket(-1, -1),
        (_ket(1, -1) + _ket(-1, 1) - _ket(0, 0)) / s3,
    ]
    return np.column_stack(cols)


# Column i holds the (parameter independent) eigenstate of label i + 1.
EIGENSTATES = _build_eigenstates()

for _arr in (_SX, _SY, _SZ, _I3, _SPIN_DOT, _SPIN_DOT_SQ, _TOTAL_SZ, EIGENSTATES):
    _arr.setflags(write=False)


def spin1_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The spin-1 matrices (Sx, Sy, Sz) in the |1>, |0>, |-1> basis."""
    return _SX.copy(), _SY.copy(), _SZ.copy()


def couplings_from_hubbard(h: HubbardParams) -> tuple[float, float, float]:
    """Map Hubbard parameters to (J, K, epsilon).

    J = -2 t^2 / U2,  K = -2 t^2 / (3 U2) - 4 t^2 / U0,  epsilon = J - K.
    The constant epsilon is reported but never enters the Hamiltonian.
    """
    if h.U0 == 0 or h.U2 == 0:
        raise ZeroRepulsionError("Hubbard repulsions U0 and U2 must be nonzero")
    t_sq = h.t * h.t
    J = -2.0 * t_sq / h.U2
    K = -2.0 * t_sq / (3.0 * h.U2) - 4.0 * t_sq / h.U0
    return J, K, J - K


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """9x9 Hermitian matrix J*(S1.S2) + K*(S1.S2)^2 + B*(S1z + S2z)."""
    return p.J * _SPIN_DOT + p.K * _SPIN_DOT_SQ + p.B * _TOTAL_SZ


def level_energies(p: ModelParams) -> np.ndarray:
    """The nine closed-form energies in label order (index i -> label i + 1)."""
    return _ENERGY_COEFFS @ np.array([p.J, p.K, p.B])


def analytic_spectrum(p: ModelParams) -> AnalyticSpectrum:
    """All nine (energy, state) pairs of the closed-form level structure."""
    energies = level_energies(p)
    levels = tuple(
        EnergyLevel(label=i + 1, energy=float(energies[i]), state=EIGENSTATES[:, i].copy())
        for i in range(9)
    )
    return AnalyticSpectrum(levels)


def ground_state(p: ModelParams, gap_tol: float = 1e-12) -> tuple[set[int], float]:
    """Labels of all levels within ``gap_tol`` of the minimum energy, and that
    minimum.  Ties (level crossings) are reported together."""
    energies = level_energies(p)
    e_min = float(energies.min())
    labels = {i + 1 for i, e in enumerate(energies) if e <= e_min + gap_tol}
    return labels, e_min
