"""Hermitian eigensolver and spectral decompositions.

The solver is a cyclic Jacobi iteration on the full complex Hermitian
matrix: each rotation is a 2-by-2 unitary chosen to zero one off-diagonal
pair, and a sweep visits every pair once.  Convergence is declared when
the off-diagonal Frobenius mass drops below ``JACOBI_OFF_TOL`` times the
matrix norm.  Real symmetric input stays exactly real throughout, because
every rotation then has a phase factor of +-1.

A characteristic-polynomial root finder (Faddeev-LeVerrier coefficients
plus companion-matrix roots) is kept as an independent cross-check path
for small matrices; it never feeds the production decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ShapeError, SymmetryError
from .matrices import REAL, field_of, frobenius, hermitian_conjugate

__all__ = [
    "JACOBI_OFF_TOL",
    "JACOBI_MAX_SWEEPS",
    "CLUSTER_TOL_FACTOR",
    "HERMITIAN_TOL",
    "SpectralDecomposition",
    "jacobi_hermitian",
    "cluster_eigenvalues",
    "eigen_hermitian",
    "characteristic_polynomial",
    "charpoly_eigenvalues",
]

# Convergence: off-diagonal Frobenius mass <= JACOBI_OFF_TOL * ||A||_F.
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

# Eigenvalues closer than CLUSTER_TOL_FACTOR * max(1, ||A||_F) merge into
# one eigenspace.
CLUSTER_TOL_FACTOR = 1e-8

# Relative Frobenius tolerance for the Hermitian precondition.
HERMITIAN_TOL = 1e-9


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_hermitian(a, off_tol: float = JACOBI_OFF_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(diag, vectors, sweeps)`` where ``diag`` is the converged
    complex diagonal (imaginary parts are roundoff-level), the columns of
    ``vectors`` are orthonormal eigenvectors, and ``sweeps`` counts the
    full sweeps performed.  Raises ConvergenceError if the off-diagonal
    mass has not dropped below tolerance within ``max_sweeps`` sweeps.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    work = np.array(a, dtype=np.complex128)
    vectors = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.diag(work).copy(), vectors, 0
    threshold = off_tol * frobenius(work)
    # Rotations on entries this small cannot move the off-diagonal mass
    # past the convergence threshold; skip them.
    skip = threshold / (10.0 * n * n) if threshold > 0.0 else 0.0

    for sweep in range(max_sweeps):
        if _off_diagonal_norm(work) <= threshold:
            return np.diag(work).copy(), vectors, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= skip:
                    continue
                app = work[p, p].real
                aqq = work[q, q].real
                mag = abs(apq)
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p - s * np.conj(phase) * col_q
                work[:, q] = s * phase * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p - s * phase * row_q
                work[q, :] = s * np.conj(phase) * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0

                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * np.conj(phase) * vec_q
                vectors[:, q] = s * phase * vec_p + c * vec_q

    if _off_diagonal_norm(work) <= threshold:
        return np.diag(work).copy(), vectors, max_sweeps
    raise ConvergenceError(
        f"Jacobi iteration did not converge within {max_sweeps} sweeps "
        f"(off-diagonal mass {_off_diagonal_norm(work):.3e}, threshold {threshold:.3e})"
    )


def cluster_eigenvalues(values, tol: float):
    """Group nearly equal real eigenvalues, descending.

    Returns ``(distinct, groups)``: the representative (mean) eigenvalue
    of each cluster and the index groups into the original array.
    """
    values = np.asarray(values, dtype=np.float64)
    order = np.argsort(values)[::-1]
    distinct: list[float] = []
    groups: list[list[int]] = []
    for idx in order:
        if groups and values[groups[-1][-1]] - values[idx] <= tol:
            groups[-1].append(int(idx))
            distinct[-1] = float(np.mean(values[groups[-1]]))
        else:
            groups.append([int(idx)])
            distinct.append(float(values[idx]))
    return distinct, groups


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues with their multiplicities and projectors.

    The projectors are idempotent, mutually annihilating, and sum to the
    identity; ``reconstruct()`` rebuilds the decomposed operator.
    """

    eigenvalues: tuple  # distinct, descending
    multiplicities: tuple
    projectors: tuple  # one matrix per distinct eigenvalue

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def reconstruct(self) -> np.ndarray:
        out = np.zeros_like(self.projectors[0])
        for value, proj in zip(self.eigenvalues, self.projectors):
            out = out + value * proj
        return out

    def kernel_dimension(self, tol: float = CLUSTER_TOL_FACTOR) -> int:
        """Multiplicity of the zero eigenvalue (0 if the operator is regular)."""
        for value, mult in zip(self.eigenvalues, self.multiplicities):
            if abs(value) <= tol * max(1.0, abs(self.eigenvalues[0])):
                return mult
        return 0


def eigen_hermitian(a, hermitian_tol: float = HERMITIAN_TOL) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    The input must be Hermitian to ``hermitian_tol`` relative Frobenius
    error, otherwise SymmetryError is raised.
    """
    a = np.asarray(a)
    scale = max(1.0, frobenius(a))
    if frobenius(hermitian_conjugate(a) - a) > hermitian_tol * scale:
        raise SymmetryError("matrix is not Hermitian within tolerance")
    diag, vectors, _ = jacobi_hermitian(a)
    cluster_tol = CLUSTER_TOL_FACTOR * max(1.0, frobenius(a))
    distinct, groups = cluster_eigenvalues(diag.real, cluster_tol)
    real_input = field_of(a) == REAL
    projectors = []
    for group in groups:
        cols = vectors[:, group]
        proj = cols @ hermitian_conjugate(cols)
        projectors.append(proj.real if real_input else proj)
    return SpectralDecomposition(
        eigenvalues=tuple(distinct),
        multiplicities=tuple(len(g) for g in groups),
        projectors=tuple(projectors),
    )


def characteristic_polynomial(a) -> np.ndarray:
    """Coefficients of det(lambda*1 - A), highest degree first.

    Uses the trace recursion on powers of A; costs O(n^4) and is intended
    for small cross-check problems only.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    m = np.array(a)
    for k in range(1, n + 1):
        if k > 1:
            m = a @ (m + coeffs[k - 1] * np.eye(n))
        coeffs[k] = -np.trace(m) / k
    return coeffs


def charpoly_eigenvalues(a) -> np.ndarray:
    """Roots of the characteristic polynomial, sorted by descending real part.

    Independent of the Jacobi path: coefficients come from the trace
    recursion and roots from the companion matrix.
    """
    roots = np.roots(characteristic_polynomial(a))
    return roots[np.argsort(-roots.real)]
