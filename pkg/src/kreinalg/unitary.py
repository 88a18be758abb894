"""Definite inner products and the operator theory they induce.

An inner product is carried by its Gram matrix ``G`` in the natural
frame: ``(x, y) = x^+ G y``, antilinear in the first argument.  The
Hermitian square root of ``G`` (cached at construction) turns every
G-selfadjoint eigenproblem into an ordinary Hermitian one, which the
Jacobi solver handles; eigenvectors come back G-orthonormal and the
spectral projectors are G-selfadjoint.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateFormError, DependentSetError, ShapeError, SymmetryError
from .eigen import (
    CLUSTER_TOL_FACTOR,
    SpectralDecomposition,
    cluster_eigenvalues,
    jacobi_hermitian,
)
from .matrices import COMPLEX, REAL, as_matrix, frobenius, hermitian_conjugate
from .spaces import Basis, VectorSpace

__all__ = [
    "GRAM_HERMITIAN_TOL",
    "POSITIVE_DEFINITE_TOL",
    "GRAM_SCHMIDT_BREAKDOWN",
    "SELFADJOINT_TOL",
    "UNITARY_TOL",
    "InnerProduct",
    "standard_inner_product",
    "inner_product",
    "norm",
    "riesz_map",
    "riesz_inverse",
    "orthonormalize",
    "adjoint",
    "g_selfadjoint_eigen",
    "spectral_representation",
    "is_unitary_wrt",
]

GRAM_HERMITIAN_TOL = 1e-10
POSITIVE_DEFINITE_TOL = 1e-10
GRAM_SCHMIDT_BREAKDOWN = 1e-12
SELFADJOINT_TOL = 1e-9
UNITARY_TOL = 1e-9


class InnerProduct:
    """A positive-definite Hermitian Gram matrix on a space.

    Construction validates Hermiticity and positive definiteness and
    caches the inverse and the Hermitian square-root factors used by the
    adjoint and spectral machinery.
    """

    def __init__(self, space: VectorSpace, gram) -> None:
        g = as_matrix(gram, space.field)
        if g.shape != (space.dim, space.dim):
            raise ShapeError(f"Gram matrix shape {g.shape} does not match dim {space.dim}")
        g_norm = frobenius(g)
        if frobenius(hermitian_conjugate(g) - g) > GRAM_HERMITIAN_TOL * max(g_norm, 1e-300):
            raise SymmetryError("Gram matrix is not Hermitian within tolerance")
        g = (g + hermitian_conjugate(g)) / 2.0
        diag, vectors, _ = jacobi_hermitian(g)
        eigenvalues = diag.real
        if np.min(eigenvalues) <= POSITIVE_DEFINITE_TOL * g_norm:
            raise DegenerateFormError(
                f"Gram matrix is not positive definite "
                f"(min eigenvalue {np.min(eigenvalues):.3e})"
            )
        self.space = space
        self.gram = g
        self.gram_inv = np.linalg.inv(g)
        sqrt = vectors @ np.diag(np.sqrt(eigenvalues)) @ hermitian_conjugate(vectors)
        sqrt_inv = vectors @ np.diag(1.0 / np.sqrt(eigenvalues)) @ hermitian_conjugate(vectors)
        if space.field == REAL:
            sqrt = sqrt.real
            sqrt_inv = sqrt_inv.real
        self.sqrt = sqrt
        self.sqrt_inv = sqrt_inv

    def __repr__(self) -> str:
        return f"InnerProduct(space={self.space!r})"


def standard_inner_product(space: VectorSpace) -> InnerProduct:
    """The inner product whose Gram matrix is the identity."""
    return InnerProduct(space, np.eye(space.dim))


def _as_ket(x, ip: InnerProduct) -> np.ndarray:
    x = as_matrix(x, ip.space.field)
    if x.shape != (ip.space.dim, 1):
        raise ShapeError(f"expected a ket of shape ({ip.space.dim}, 1), got {x.shape}")
    return x


def inner_product(x, y, ip: InnerProduct):
    """(x, y) = x^+ G y; antilinear in x, linear in y."""
    x = _as_ket(x, ip)
    y = _as_ket(y, ip)
    value = (hermitian_conjugate(x) @ ip.gram @ y)[0, 0]
    return complex(value) if ip.space.field == COMPLEX else float(value)


def norm(x, ip: InnerProduct) -> float:
    """sqrt((x, x)); the tiny negative that roundoff can produce is clamped."""
    value = inner_product(x, x, ip)
    return float(np.sqrt(max(np.real(value), 0.0)))


def riesz_map(x, ip: InnerProduct) -> np.ndarray:
    """The covector x^+ G, pairing with y to give (x, y)."""
    x = _as_ket(x, ip)
    return hermitian_conjugate(x) @ ip.gram


def riesz_inverse(y_bra, ip: InnerProduct) -> np.ndarray:
    """The ket G^{-1} y^+ mapped back from a covector row."""
    y = as_matrix(y_bra, ip.space.field)
    if y.shape != (1, ip.space.dim):
        raise ShapeError(f"expected a bra of shape (1, {ip.space.dim}), got {y.shape}")
    return ip.gram_inv @ hermitian_conjugate(y)


def orthonormalize(vectors, ip: InnerProduct) -> Basis:
    """Gram-Schmidt a full set of vectors into an orthonormal Basis.

    Modified Gram-Schmidt, column at a time, with one reorthogonalization
    pass against the already accepted columns.  Raises DependentSetError
    when a vector collapses below the breakdown threshold.
    """
    dim = ip.space.dim
    cols = [_as_ket(v, ip) for v in vectors]
    if len(cols) != dim:
        raise ShapeError(f"need exactly {dim} vectors, got {len(cols)}")
    basis_cols: list[np.ndarray] = []
    for col in cols:
        v = col.copy()
        for _ in range(2):
            for e in basis_cols:
                v = v - e * inner_product(e, v, ip)
        length = norm(v, ip)
        if length < GRAM_SCHMIDT_BREAKDOWN:
            raise DependentSetError(
                "vector became numerically zero after projection; input set is dependent"
            )
        basis_cols.append(v / length)
    return Basis(ip.space, np.hstack(basis_cols))


def adjoint(f, ip: InnerProduct) -> np.ndarray:
    """G^{-1} f^+ G, the operator with (adjoint(f) x, y) = (x, f y)."""
    f = as_matrix(f, ip.space.field)
    if f.shape != (ip.space.dim, ip.space.dim):
        raise ShapeError(f"operator must be {ip.space.dim}x{ip.space.dim}, got {f.shape}")
    return ip.gram_inv @ hermitian_conjugate(f) @ ip.gram


def g_selfadjoint_eigen(f, ip: InnerProduct):
    """Eigenvalues (descending) and G-orthonormal eigenvector columns.

    The input must already be selfadjoint with respect to ``ip``; the
    similarity transform by the Gram square root hands the problem to the
    Hermitian Jacobi solver.
    """
    f = as_matrix(f, ip.space.field)
    work = ip.sqrt @ f @ ip.sqrt_inv
    work = (work + hermitian_conjugate(work)) / 2.0
    diag, u, _ = jacobi_hermitian(work)
    w = diag.real
    order = np.argsort(-w)
    w = w[order]
    columns = ip.sqrt_inv @ u[:, order]
    if ip.space.field == REAL:
        columns = columns.real
    return w, columns


def spectral_representation(f, ip: InnerProduct, selfadjoint_tol: float = SELFADJOINT_TOL) -> SpectralDecomposition:
    """Spectral decomposition of a G-selfadjoint operator.

    The projectors are G-selfadjoint, idempotent, mutually annihilating,
    and complete, and distinct eigenspaces are G-orthogonal.
    """
    f = as_matrix(f, ip.space.field)
    scale = max(1.0, frobenius(f))
    if frobenius(adjoint(f, ip) - f) > selfadjoint_tol * scale:
        raise SymmetryError("operator is not selfadjoint w.r.t. the inner product")
    w, columns = g_selfadjoint_eigen(f, ip)
    cluster_tol = CLUSTER_TOL_FACTOR * max(1.0, float(np.linalg.norm(w)))
    distinct, groups = cluster_eigenvalues(w, cluster_tol)
    projectors = []
    for group in groups:
        cols = columns[:, group]
        proj = cols @ hermitian_conjugate(cols) @ ip.gram
        projectors.append(proj.real if ip.space.field == REAL else proj)
    return SpectralDecomposition(
        eigenvalues=tuple(distinct),
        multiplicities=tuple(len(g) for g in groups),
        projectors=tuple(projectors),
    )


def is_unitary_wrt(f, ip: InnerProduct, tol: float = UNITARY_TOL) -> bool:
    """True when adjoint(f) f equals the identity, i.e. f preserves (.,.)."""
    f = as_matrix(f, ip.space.field)
    if f.shape != (ip.space.dim, ip.space.dim):
        raise ShapeError(f"operator must be {ip.space.dim}x{ip.space.dim}, got {f.shape}")
    residual = adjoint(f, ip) @ f - np.eye(ip.space.dim)
    return frobenius(residual) <= tol
