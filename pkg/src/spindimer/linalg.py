"""Dense complex linear algebra for small (dim <= 9) Hermitian problems.

Matrices are plain ``numpy.ndarray`` of ``complex128``.  Everything here is a
pure function; nothing mutates its input.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

DEFAULT_TOL = 1e-12


class NotHermitianError(ValueError):
    """Matrix fails the Hermiticity check at the requested tolerance."""


class NoConvergenceError(RuntimeError):
    """The eigensolver exhausted its iteration budget."""


class DimensionMismatchError(ValueError):
    """Matrix shape is incompatible with the requested operation."""


class Spectrum(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and ascending; ``vectors[:, k]`` is the unit-norm
    eigenvector belonging to ``values[k]``.
    """

    values: np.ndarray
    vectors: np.ndarray


def _as_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    """True when ``max |M - M^dagger| <= tol``."""
    a = _as_square(m)
    return float(np.max(np.abs(a - a.conj().T))) <= tol


def kron(a, b) -> np.ndarray:
    """Kronecker product; entry ((i*dimB+k), (j*dimB+l)) = A[i,j] * B[k,l]."""
    return np.kron(_as_square(a), _as_square(b))


def hermitian_eig(m, tol: float = DEFAULT_TOL) -> Spectrum:
    """Eigendecompose a Hermitian matrix.

    Raises :class:`NotHermitianError` if the input is not Hermitian at
    tolerance ``tol`` and :class:`NoConvergenceError` if the iteration fails.
    """
    a = _as_square(m)
    if not is_hermitian(a, tol):
        raise NotHermitianError(f"matrix is not Hermitian at tolerance {tol}")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergenceError(str(exc)) from exc
    return Spectrum(values, vectors)


def partial_transpose_a(m, dim_a: int, dim_b: int) -> np.ndarray:
    """Transpose the first tensor factor only.

    With composite indices (i, k), (j, l), the result holds
    ``M[(j, k), (i, l)]`` at position ((i, k), (j, l)).  This is an exact
    entry permutation: trace and Hermiticity are preserved identically.
    """
    a = _as_square(m)
    n = a.shape[0]
    if dim_a < 1 or dim_b < 1 or dim_a * dim_b != n:
        raise DimensionMismatchError(
            f"cannot split dimension {n} into {dim_a} x {dim_b}"
        )
    return a.reshape(dim_a, dim_b, dim_a, dim_b).transpose(2, 1, 0, 3).reshape(n, n)


def trace_norm_hermitian(m, tol: float = DEFAULT_TOL) -> float:
    """Trace norm of a Hermitian matrix: the sum of |eigenvalue|."""
    return float(np.sum(np.abs(hermitian_eig(m, tol).values)))
