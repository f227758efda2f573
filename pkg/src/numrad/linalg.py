"""Dense complex matrix kernels.

Everything downstream reduces to two operations on small dense matrices:
a Hermitian eigendecomposition and the operator (spectral) norm. Both are
backed by LAPACK through numpy and are deterministic for a fixed input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DimensionMismatch",
    "NotHermitian",
    "NoConvergence",
    "HermitianEigen",
    "as_matrix",
    "identity",
    "adjoint",
    "add",
    "matmul",
    "scale",
    "shift",
    "hermitian_eigen",
    "operator_norm",
]

# Relative Frobenius tolerance for the Hermitian precondition. Inputs are
# constructed rather than measured, so near-misses are not symmetrized
# silently; the caller must pass a genuinely Hermitian matrix.
HERMITIAN_RTOL = 1e-10


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class NotHermitian(ValueError):
    """Matrix is not Hermitian to the required tolerance."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""


def as_matrix(a) -> np.ndarray:
    """Coerce to a square complex ndarray and validate it.

    Rejects non-square shapes, empty matrices, and non-finite entries.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix with n >= 1, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(int(n), dtype=complex)


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. An involution: adjoint(adjoint(a)) == a exactly."""
    return as_matrix(a).conj().T


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return a + b


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def scale(alpha, a) -> np.ndarray:
    return complex(alpha) * as_matrix(a)


def shift(a, lam) -> np.ndarray:
    """A - lam * I."""
    a = as_matrix(a)
    return a - complex(lam) * np.eye(a.shape[0], dtype=complex)


@dataclass(frozen=True)
class HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    values are real and sorted descending; vectors holds the matching
    orthonormal eigenvectors as columns, so a @ vectors[:, i] equals
    values[i] * vectors[:, i] up to roundoff.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eigen(a) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix.

    Raises NotHermitian when the asymmetry exceeds HERMITIAN_RTOL relative to
    max(1, Frobenius norm), and NoConvergence when the LAPACK kernel fails.
    """
    a = as_matrix(a)
    fro = float(np.linalg.norm(a))
    dev = float(np.linalg.norm(a - a.conj().T))
    if dev > HERMITIAN_RTOL * max(1.0, fro):
        raise NotHermitian(
            f"asymmetry {dev:.3e} exceeds {HERMITIAN_RTOL:g} * max(1, {fro:.3e})"
        )
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianEigen(values=vals[::-1].copy(), vectors=vecs[:, ::-1].copy())


def operator_norm(a) -> float:
    """Spectral norm, the largest singular value.

    Computed as sqrt of the top eigenvalue of A*A. The product A*A is exactly
    Hermitian in floating point, so the values-only Hermitian kernel applies
    directly. Squaring costs a few digits near the bottom of the spectrum but
    is harmless for the top singular value at the scales handled here.
    """
    a = as_matrix(a)
    try:
        top = float(np.linalg.eigvalsh(a.conj().T @ a)[-1])
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return float(np.sqrt(max(top, 0.0)))
