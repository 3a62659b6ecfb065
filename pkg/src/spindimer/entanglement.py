"""Negativity of two-site density matrices.

For a state rho on a (d x d)-partitioned space the negativity is

    N(rho) = (||rho^{T_A}||_1 - 1) / 2 = |sum of negative eigenvalues of rho^{T_A}|

where T_A is the partial transpose on the first site.  N > 0 certifies
entanglement; for the 3x3 case treated here N = 0 does not by itself prove
separability, but for thermal states of this model the level structure makes
the N = 0 region separable in practice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import thermal
from .linalg import hermitian_eig, is_hermitian, partial_transpose_a
from .model import ModelParams

# rho must be Hermitian / unit trace / PSD to these tolerances.
VALIDATION_TOL = 1e-10
# Negativities at or below this are eigensolver noise and clamp to 0.
CLAMP_TOL = 1e-12


class InvalidStateError(ValueError):
    """Input is not a density matrix (non-Hermitian, wrong trace, or not PSD)."""


@dataclass(frozen=True)
class NegativityResult:
    negativity: float
    negative_eigenvalues: np.ndarray
    trace_norm: float


def _validate_density_matrix(rho: np.ndarray, dim: int) -> None:
    if rho.shape != (dim * dim, dim * dim):
        raise InvalidStateError(f"expected shape {(dim * dim,) * 2}, got {rho.shape}")
    if not is_hermitian(rho, tol=VALIDATION_TOL):
        raise InvalidStateError("state is not Hermitian")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > VALIDATION_TOL:
        raise InvalidStateError(f"state has trace {tr}, expected 1")
    if hermitian_eig(rho).values[0] < -VALIDATION_TOL:
        raise InvalidStateError("state is not positive semidefinite")


def negativity(rho: np.ndarray, dim: int = 3, validate: bool = True) -> NegativityResult:
    """Negativity of ``rho`` on a dim x dim bipartite space.

    The negativity is computed from the negative eigenvalues of the partial
    transpose; the trace norm is accumulated independently as sum(|eigenvalue|)
    so the identity N = (||rho^{T_A}||_1 - 1)/2 stays a genuine cross-check.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if validate:
        _validate_density_matrix(rho, dim)
    pt_values = hermitian_eig(partial_transpose_a(rho, dim, dim)).values
    negative = pt_values[pt_values < 0.0]
    n = float(-negative.sum())
    if n <= CLAMP_TOL:
        n = 0.0
    return NegativityResult(
        negativity=n,
        negative_eigenvalues=negative,
        trace_norm=float(np.abs(pt_values).sum()),
    )


def negativity_at(p: ModelParams) -> float:
    """Negativity of the thermal state at parameters ``p``.

    The Gibbs construction guarantees a valid state, so validation is skipped.
    """
    return negativity(thermal.gibbs_state(p), validate=False).negativity
