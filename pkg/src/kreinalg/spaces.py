"""Vector spaces with explicit bases, dual bases, and matrix representations.

A space is modeled concretely: it carries a natural reference frame, and a
``Basis`` stores the coordinates of its vectors as the columns of an
invertible matrix ``B`` relative to that frame.  The rows of ``B^{-1}``
then realize the dual covector basis, and representation of vectors,
covectors, and linear maps reduces to multiplication by ``B`` and
``B^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import ShapeError, SingularBasisError, SpaceError
from .matrices import COMPLEX, REAL, as_matrix, field_of, frobenius

__all__ = [
    "RANK_PIVOT_TOL",
    "VectorSpace",
    "Basis",
    "VectorInBasis",
    "CovectorInBasis",
    "LinearMapRep",
    "natural_basis",
    "dual_basis",
    "rep_vector",
    "rep_covector",
    "change_of_basis",
    "represent_map",
    "conjugate_representation",
    "operator_determinant",
    "rank",
    "kernel_dimension",
    "canonical_form_bases",
]

# Pivot magnitude below which a row-echelon pivot counts as zero.
RANK_PIVOT_TOL = 1e-10


@dataclass(frozen=True)
class VectorSpace:
    """A finite-dimensional space over the real or complex field."""

    dim: int
    field: str = REAL
    label: str = "V"

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError(f"space dimension must be >= 1, got {self.dim}")
        if self.field not in (REAL, COMPLEX):
            raise SpaceError(f"unknown field {self.field!r}")


def _singularity_threshold(b: np.ndarray) -> float:
    # Scale-aware: 1e-12 * ||B||_F^n, so rescaling B rescales the threshold
    # the same way the determinant rescales.
    n = b.shape[0]
    return 1e-12 * frobenius(b) ** n


class Basis:
    """An ordered basis: column j of ``matrix`` is the j-th basis vector.

    The inverse is computed once (LU) and cached; its rows are the dual
    covectors, so ``inverse @ matrix`` is the identity up to roundoff.
    """

    def __init__(self, space: VectorSpace, matrix) -> None:
        b = as_matrix(matrix, space.field)
        if b.shape != (space.dim, space.dim):
            raise ShapeError(
                f"basis matrix shape {b.shape} does not match dim {space.dim}"
            )
        det = np.linalg.det(b)
        if abs(det) <= _singularity_threshold(b):
            raise SingularBasisError(
                f"basis matrix is numerically singular (|det| = {abs(det):.3e})"
            )
        self.space = space
        self.matrix = b
        self.inverse = np.linalg.inv(b)

    def __repr__(self) -> str:
        return f"Basis(space={self.space!r}, matrix=\n{self.matrix!r})"


def natural_basis(space: VectorSpace) -> Basis:
    """The reference frame itself as a Basis (identity matrix)."""
    return Basis(space, np.eye(space.dim))


@dataclass(frozen=True)
class VectorInBasis:
    """Component column of a vector relative to a basis."""

    basis: Basis
    components: np.ndarray  # shape (dim, 1)

    def to_natural(self) -> np.ndarray:
        """Coordinates in the natural reference frame."""
        return self.basis.matrix @ self.components


@dataclass(frozen=True)
class CovectorInBasis:
    """Component row of a covector relative to the dual of a basis."""

    basis: Basis
    components: np.ndarray  # shape (1, dim)

    def to_natural(self) -> np.ndarray:
        return self.components @ self.basis.inverse

    def pair(self, vector: VectorInBasis):
        """Dual pairing <covector, vector>; both must share the basis."""
        if vector.basis is not self.basis and not np.array_equal(
            vector.basis.matrix, self.basis.matrix
        ):
            raise SpaceError("pairing requires components in the same basis")
        return (self.components @ vector.components)[0, 0]


@dataclass(frozen=True)
class LinearMapRep:
    """Matrix of a linear map relative to a domain and a codomain basis."""

    domain_basis: Basis
    codomain_basis: Basis
    matrix: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        expected = (self.codomain_basis.space.dim, self.domain_basis.space.dim)
        if np.shape(self.matrix) != expected:
            raise ShapeError(
                f"representation matrix must have shape {expected}, "
                f"got {np.shape(self.matrix)}"
            )

    @property
    def is_endomorphism(self) -> bool:
        return (
            self.domain_basis.space == self.codomain_basis.space
            and np.array_equal(self.domain_basis.matrix, self.codomain_basis.matrix)
        )


def dual_basis(basis: Basis) -> np.ndarray:
    """Rows of the returned matrix are the dual covectors of ``basis``."""
    return basis.inverse.copy()


def rep_vector(x_natural, basis: Basis) -> VectorInBasis:
    """Components of a natural-frame ket in the given basis."""
    x = as_matrix(x_natural, basis.space.field)
    if x.shape != (basis.space.dim, 1):
        raise ShapeError(f"expected a ket of shape ({basis.space.dim}, 1), got {x.shape}")
    return VectorInBasis(basis, basis.inverse @ x)


def rep_covector(y_natural, basis: Basis) -> CovectorInBasis:
    """Components of a natural-frame bra in the dual of the given basis."""
    y = as_matrix(y_natural, basis.space.field)
    if y.shape != (1, basis.space.dim):
        raise ShapeError(f"expected a bra of shape (1, {basis.space.dim}), got {y.shape}")
    return CovectorInBasis(basis, y @ basis.matrix)


def _require_same_space(a: Basis, b: Basis) -> None:
    if a.space != b.space:
        raise SpaceError(f"bases live on different spaces: {a.space} vs {b.space}")


def change_of_basis(old: Basis, new: Basis) -> np.ndarray:
    """Matrix M with components transforming as x' = M x, y' = y M^{-1}."""
    _require_same_space(old, new)
    return new.inverse @ old.matrix


def represent_map(f_natural, domain_basis: Basis, codomain_basis: Basis) -> LinearMapRep:
    """Representation matrix of a natural-frame map in the given bases."""
    f = as_matrix(f_natural)
    expected = (codomain_basis.space.dim, domain_basis.space.dim)
    if f.shape != expected:
        raise ShapeError(f"map must have shape {expected}, got {f.shape}")
    matrix = codomain_basis.inverse @ f @ domain_basis.matrix
    return LinearMapRep(domain_basis, codomain_basis, matrix)


def conjugate_representation(rep: LinearMapRep, new_basis: Basis) -> LinearMapRep:
    """Re-express an endomorphism representation in another basis."""
    if not rep.is_endomorphism:
        raise ShapeError("conjugate_representation requires an endomorphism")
    _require_same_space(rep.domain_basis, new_basis)
    m = change_of_basis(rep.domain_basis, new_basis)
    matrix = m @ rep.matrix @ np.linalg.inv(m)
    return LinearMapRep(new_basis, new_basis, matrix)


def operator_determinant(rep: LinearMapRep):
    """Determinant of an endomorphism; independent of the chosen basis."""
    if not rep.is_endomorphism:
        raise ShapeError("operator determinant requires an endomorphism")
    d = np.linalg.det(rep.matrix)
    return complex(d) if field_of(rep.matrix) == COMPLEX else float(d)


def rank(a, pivot_tol: float = RANK_PIVOT_TOL) -> int:
    """Rank by row echelon reduction with partial pivoting."""
    m = as_matrix(a, COMPLEX)
    rows, cols = m.shape
    r = 0
    for col in range(cols):
        if r == rows:
            break
        pivot_row = r + int(np.argmax(np.abs(m[r:, col])))
        if abs(m[pivot_row, col]) <= pivot_tol:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r + 1 :] -= np.outer(m[r + 1 :, col] / m[r, col], m[r])
        r += 1
    return r


def kernel_dimension(a, tol: float = RANK_PIVOT_TOL) -> int:
    """Kernel dimension counted from the singular-value profile.

    Deliberately a different route than :func:`rank` so the rank-nullity
    identity is a genuine cross-check, not a tautology.
    """
    a = np.asarray(a)
    s = np.linalg.svd(a, compute_uv=False)
    scale = s[0] if s.size and s[0] > 1.0 else 1.0
    return int(a.shape[1] - np.sum(s > tol * scale))


def canonical_form_bases(
    f_natural, domain_space: VectorSpace, codomain_space: VectorSpace
):
    """Bases in which a map is represented by the block matrix diag(1_r, 0).

    Returns ``(domain_basis, codomain_basis, r)`` built from the singular
    value decomposition; ``r`` is the numerical rank.
    """
    f = as_matrix(f_natural)
    if f.shape != (codomain_space.dim, domain_space.dim):
        raise ShapeError(
            f"map must have shape ({codomain_space.dim}, {domain_space.dim})"
        )
    u, s, vh = np.linalg.svd(f)
    scale = s[0] if s.size and s[0] > 1.0 else 1.0
    r = int(np.sum(s > RANK_PIVOT_TOL * scale))
    stretch = np.ones(domain_space.dim)
    stretch[:r] = 1.0 / s[:r]
    domain_b = vh.conj().T @ np.diag(stretch)
    if domain_space.field == REAL:
        domain_b = domain_b.real
        u = u.real
    return (
        Basis(domain_space, domain_b),
        Basis(codomain_space, u),
        r,
    )
