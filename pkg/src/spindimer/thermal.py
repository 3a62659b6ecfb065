"""Thermal (Gibbs) states of the spin-1 dimer.

Two independent routes are provided for cross-checking:

* a closed-form partition function built from the nine-level structure, and
* a numeric route that diagonalizes the Hamiltonian matrix directly.

Both use the overflow-safe shift w_i = exp(-(E_i - E_min)/T), so arbitrarily
low temperatures are fine; only ratios of the w_i ever matter.
"""

from __future__ import annotations

import numpy as np

from . import model
from .linalg import hermitian_eig


class NonpositiveTemperatureError(ValueError):
    """Gibbs states require T > 0."""


# Rank-1 projectors |psi_i><psi_i| onto the parameter-independent eigenstates,
# stacked along axis 0 in label order.  Built once at import.
_PROJECTORS = np.einsum(
    "ik,jk->kij", model.EIGENSTATES, model.EIGENSTATES.conj()
)
_PROJECTORS.setflags(write=False)


def _check_temperature(t: float) -> None:
    if not t > 0:
        raise NonpositiveTemperatureError(f"temperature must be > 0, got {t}")


def boltzmann_weights(p: model.ModelParams) -> np.ndarray:
    """Shifted weights exp(-(E_i - E_min)/T) in label order; max entry is 1."""
    _check_temperature(p.T)
    energies = model.level_energies(p)
    return np.exp(-(energies - energies.min()) / p.T)


def partition_function(p: model.ModelParams) -> float:
    """Closed-form Z = sum_i exp(-E_i / T).

    Z = 2 e^{-K/T} cosh(J/T) (1 + 2 cosh(B/T))
        + 2 e^{-(K+J)/T} cosh(2B/T) + e^{-(4K-2J)/T}

    Not overflow-safe by design: the unshifted sum is the quantity of
    interest.  At low T prefer ``boltzmann_weights``.
    """
    _check_temperature(p.T)
    beta = 1.0 / p.T
    return float(
        2.0 * np.exp(-beta * p.K) * np.cosh(beta * p.J) * (1.0 + 2.0 * np.cosh(beta * p.B))
        + 2.0 * np.exp(-beta * (p.K + p.J)) * np.cosh(2.0 * beta * p.B)
        + np.exp(-beta * (4.0 * p.K - 2.0 * p.J))
    )


def partition_function_numeric(p: model.ModelParams) -> float:
    """Z as a direct spectral sum over the diagonalized Hamiltonian."""
    _check_temperature(p.T)
    values = hermitian_eig(model.build_hamiltonian(p)).values
    return float(np.sum(np.exp(-values / p.T)))


def gibbs_state(p: model.ModelParams) -> np.ndarray:
    """Density matrix exp(-H/T) / Z from the closed-form level structure.

    Uses the cached eigenprojectors, so this is a weighted sum of nine fixed
    9x9 matrices; no diagonalization happens per call.
    """
    w = boltzmann_weights(p)
    rho = np.tensordot(w, _PROJECTORS, axes=1)
    return rho / w.sum()


def gibbs_state_numeric(hamiltonian: np.ndarray, temperature: float) -> np.ndarray:
    """Density matrix exp(-H/T) normalized by its trace, any Hermitian H.

    Fully numeric (eigendecomposition of the matrix as given), so it is an
    independent cross-check of the closed-form ``gibbs_state`` route.
    """
    _check_temperature(temperature)
    spec = hermitian_eig(hamiltonian)
    w = np.exp(-(spec.values - spec.values.min()) / temperature)
    rho = (spec.vectors * w) @ spec.vectors.conj().T
    return rho / w.sum()
