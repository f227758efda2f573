"""Numerical range boundary, numerical radius, and a sampling cross-check.

The numerical range W(A) of a square complex matrix A is the set of Rayleigh
quotients <Ax, x> over unit vectors x; it is a convex, compact subset of the
plane. Its support function in direction theta is the top eigenvalue of the
rotated Hermitian part

    H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2,

because Re(e^{i theta} <Ax, x>) = <H(theta) x, x>. Two consequences drive
this module: the boundary of W(A) is traced by the Rayleigh quotients of the
top eigenvectors of H(theta), and the numerical radius w(A) = max |W(A)|
equals max over theta of the top eigenvalue of H(theta). Everything therefore
reduces to Hermitian eigenproblems, swept over a theta grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import as_matrix, operator_norm

__all__ = [
    "Boundary",
    "RangeSummary",
    "rotated_hermitian_part",
    "support_values",
    "numerical_range_boundary",
    "numerical_radius",
    "numerical_radius_oracle",
    "range_summary",
    "polygon_cross_products",
    "is_convex_polyline",
]

# Coarse grid for the radius sweep. The support function is continuous with a
# handful of local maxima at desk scale, so 512 points bracket the global
# basin; a golden-section pass then refines the angle below REFINE_TOL.
RADIUS_GRID = 512
REFINE_TOL = 1e-10

_ORACLE_CHUNK = 1 << 16
_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def rotated_hermitian_part(a, theta: float) -> np.ndarray:
    """H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2, Hermitian by construction."""
    a = as_matrix(a)
    ph = np.exp(1j * float(theta))
    return 0.5 * (ph * a + np.conj(ph) * a.conj().T)


def _hermitian_stack(a: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    ph = np.exp(1j * np.asarray(thetas, dtype=float))
    return 0.5 * (ph[:, None, None] * a + np.conj(ph)[:, None, None] * a.conj().T)


def support_values(a, thetas) -> np.ndarray:
    """Support function samples: top eigenvalue of H(theta) for each theta."""
    a = as_matrix(a)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    return np.linalg.eigvalsh(_hermitian_stack(a, thetas))[:, -1]


class Boundary(NamedTuple):
    """Sampled boundary of the numerical range.

    For each grid angle theta: the Rayleigh quotient <Ax, x> of a top
    eigenvector x of H(theta), and the support value (top eigenvalue). When
    the top eigenvalue is degenerate any top eigenvector is accepted, so a
    flat face contributes one of its points.
    """

    thetas: np.ndarray
    points: np.ndarray
    supports: np.ndarray


@dataclass(frozen=True)
class RangeSummary:
    radius: float
    norm: float
    boundary: Boundary


def numerical_range_boundary(a, n_theta: int) -> Boundary:
    """Sample the boundary of W(A) at n_theta uniform angles over [0, 2 pi).

    Re(e^{i theta} point) equals the support value at each angle up to
    eigensolver roundoff.
    """
    a = as_matrix(a)
    n_theta = int(n_theta)
    if n_theta < 8:
        raise ValueError(f"need at least 8 boundary angles, got {n_theta}")
    thetas = np.arange(n_theta) * (2.0 * np.pi / n_theta)
    vals, vecs = np.linalg.eigh(_hermitian_stack(a, thetas))
    x = vecs[:, :, -1]
    points = np.einsum("ki,ij,kj->k", x.conj(), a, x)
    return Boundary(thetas=thetas, points=points, supports=vals[:, -1])


def numerical_radius(a, grid: int = RADIUS_GRID, refine_tol: float = REFINE_TOL) -> float:
    """Numerical radius w(A) = max over theta of the top eigenvalue of H(theta).

    A coarse sweep over `grid` angles locates the basin of the global
    maximum; golden-section search then shrinks the bracket around the best
    grid angle until it is narrower than refine_tol.
    """
    a = as_matrix(a)
    grid = int(grid)
    if grid < 8:
        raise ValueError(f"need at least 8 grid angles, got {grid}")
    thetas = np.arange(grid) * (2.0 * np.pi / grid)
    sup = np.linalg.eigvalsh(_hermitian_stack(a, thetas))[:, -1]
    k = int(np.argmax(sup))
    best = float(sup[k])

    at = a.conj().T

    def f(t: float) -> float:
        ph = np.exp(1j * t)
        return float(np.linalg.eigvalsh(0.5 * (ph * a + np.conj(ph) * at))[-1])

    step = 2.0 * np.pi / grid
    lo = thetas[k] - step
    hi = thetas[k] + step
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > refine_tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    return max(best, fc, fd)


def numerical_radius_oracle(a, samples: int, seed: int) -> float:
    """Sampling lower bound on w(A): max |<Ax, x>| over random unit vectors.

    Vectors are standard complex Gaussians normalized to the unit sphere
    (uniform on the sphere), drawn from numpy's seeded PCG64 generator. The
    chunk size is a fixed constant, so the draw stream and the result depend
    only on the seed. Since |<Ax, x>| <= w(A) pointwise, the value never
    exceeds the numerical radius beyond roundoff.
    """
    a = as_matrix(a)
    samples = int(samples)
    if samples < 1:
        raise ValueError(f"need at least 1 sample, got {samples}")
    rng = np.random.default_rng(seed)
    n = a.shape[0]
    best = 0.0
    left = samples
    while left > 0:
        m = min(_ORACLE_CHUNK, left)
        left -= m
        x = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
        x /= np.linalg.norm(x, axis=1)[:, None]
        vals = np.abs(np.einsum("bi,ij,bj->b", x.conj(), a, x))
        best = max(best, float(vals.max()))
    return best


def range_summary(a, n_theta: int = RADIUS_GRID) -> RangeSummary:
    """Radius, operator norm, and boundary sampled at n_theta angles."""
    a = as_matrix(a)
    return RangeSummary(
        radius=numerical_radius(a, grid=max(n_theta, 8)),
        norm=operator_norm(a),
        boundary=numerical_range_boundary(a, n_theta),
    )


def polygon_cross_products(points) -> np.ndarray:
    """Cross products of consecutive edges of a closed polyline.

    All entries sharing one sign (within a tolerance) certifies convexity of
    the polyline; degenerate edges contribute zeros.
    """
    z = np.asarray(points, dtype=complex)
    e = np.roll(z, -1) - z
    nxt = np.roll(e, -1)
    return e.real * nxt.imag - e.imag * nxt.real


def is_convex_polyline(points, tol: float = 1e-9) -> bool:
    c = polygon_cross_products(points)
    return bool(np.all(c >= -tol) or np.all(c <= tol))
