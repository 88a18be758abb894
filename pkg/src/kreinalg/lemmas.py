"""Seeded numerical verification of the package's theorem inventory.

Every registered lemma draws random instances from a deterministic
sub-stream and reports the worst residual it saw, together with the
tolerance it must stay under.  Sub-seeds are derived by hashing
``(seed, lemma_id, dim, instance)`` with SHA-256 and feeding 64 bits to
``numpy.random.default_rng`` (PCG64), so the suite is reproducible
instance by instance and safe to evaluate in parallel.

Residual conventions: residuals named "relative" are scaled by the
magnitude of the quantity checked; structural counts (rank, signature)
use a tolerance of zero, as do identities that hold exactly in floating
point for the dyadic-rational instances generated for them.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from . import generators as gen
from .errors import KreinAlgError
from .eigen import charpoly_eigenvalues, eigen_hermitian, jacobi_hermitian
from .indefinite import (
    MetricStructure,
    canonical_projectors,
    compatible_structure_from_hform,
    dirac_adjoint_operator,
    dirac_spectral,
    h_orthonormal_basis,
    hform_value,
    metric_structure_from,
    raise_lower_index,
)
from .matrices import (
    COMPLEX,
    REAL,
    determinant,
    determinant_permutation_sum,
    frobenius,
    hermitian_conjugate,
    kronecker_product,
    matmul,
)
from .spaces import (
    VectorSpace,
    change_of_basis,
    conjugate_representation,
    dual_basis,
    kernel_dimension,
    operator_determinant,
    rank,
    rep_covector,
    rep_vector,
    represent_map,
)
from .tensors import (
    DOWN,
    UP,
    Tensor,
    contract,
    kron_flatten,
    kron_unflatten,
    tensor_from_ket,
    tensor_product,
    transform_tensor,
)
from .unitary import (
    InnerProduct,
    adjoint,
    g_selfadjoint_eigen,
    inner_product,
    norm,
    orthonormalize,
    riesz_inverse,
    riesz_map,
    spectral_representation,
)

__all__ = ["Lemma", "LemmaReport", "REGISTRY", "DEFAULT_DIMS", "run_lemma_suite"]

DEFAULT_DIMS = (1, 2, 3, 4, 5, 6)

_FIELDS = (REAL, COMPLEX)


def _subseed(seed: int, lemma_id: str, dim: int, instance: int) -> int:
    digest = hashlib.sha256(f"{seed}:{lemma_id}:{dim}:{instance}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class Lemma:
    lemma_id: str
    tolerance: float
    check: callable
    min_dim: int = 1
    max_dim: int = 12
    description: str = ""


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    instances: int
    max_error: float
    tolerance: float
    status: str
    seed: int

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "instances": self.instances,
            # JSON has no infinity; a check that blew up reports the
            # largest finite double instead.
            "max_error": min(self.max_error, 1.7976931348623157e308),
            "tolerance": self.tolerance,
            "status": self.status,
            "seed": self.seed,
        }


def _random_structure(rng, n, field) -> MetricStructure:
    """Alternate between a synthesized-G structure and a generic (G, K) pair."""
    if rng.integers(0, 2):
        return compatible_structure_from_hform(gen.random_nondegenerate_hform(rng, n, field))
    space = VectorSpace(n, field, "V")
    g = gen.random_positive_definite(rng, n, field)
    ip = InnerProduct(space, g)
    n_plus = int(rng.integers(0, n + 1))
    signs = np.concatenate([np.ones(n_plus), -np.ones(n - n_plus)])
    u = gen.random_unitary(rng, n, field)
    involution = u @ np.diag(signs).astype(u.dtype) @ hermitian_conjugate(u)
    k = ip.sqrt @ involution @ ip.sqrt
    k = (k + hermitian_conjugate(k)) / 2.0
    if field == REAL:
        k = k.real
    return metric_structure_from(ip.gram, k, space)


def _random_ip(rng, n, field) -> InnerProduct:
    space = VectorSpace(n, field, "V")
    return InnerProduct(space, gen.random_positive_definite(rng, n, field))


# --------------------------------------------------------------------------
# matrix checks


def _check_det_product(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_invertible(rng, n, field)
        b = gen.random_invertible(rng, n, field)
        lhs = determinant(a @ b)
        rhs = determinant(a) * determinant(b)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst


def _check_det_oracle(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_invertible(rng, n, field)
        lu = determinant(a)
        perm = determinant_permutation_sum(a)
        worst = max(worst, abs(lu - perm) / max(1.0, abs(perm)))
    return worst


def _dyadic(rng, rows, cols, field):
    m = rng.integers(-8, 9, size=(rows, cols)) / 8.0
    if field == COMPLEX:
        m = m + 1j * (rng.integers(-8, 9, size=(rows, cols)) / 8.0)
    return m


def _check_conjugation_rules(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = _dyadic(rng, n, n, field)
        b = _dyadic(rng, n, n, field)
        alpha = complex(*(rng.integers(-8, 9, size=2) / 8.0)) if field == COMPLEX else float(rng.integers(-8, 9) / 8.0)
        worst = max(worst, np.max(np.abs(hermitian_conjugate(a + b) - (hermitian_conjugate(a) + hermitian_conjugate(b)))))
        worst = max(worst, np.max(np.abs(hermitian_conjugate(alpha * a) - np.conj(alpha) * hermitian_conjugate(a))))
        worst = max(worst, np.max(np.abs(hermitian_conjugate(a @ b) - hermitian_conjugate(b) @ hermitian_conjugate(a))))
    return float(worst)


def _check_kron_mixed_product(rng, n):
    m = max(1, n - 1)
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_matrix(rng, n, m, field)
        c = gen.random_matrix(rng, m, n, field)
        b = gen.random_matrix(rng, m, n, field)
        d = gen.random_matrix(rng, n, m, field)
        lhs = kronecker_product(a, b) @ kronecker_product(c, d)
        rhs = kronecker_product(a @ c, b @ d)
        worst = max(worst, frobenius(lhs - rhs) / max(1.0, frobenius(rhs)))
    return worst


def _check_det_conjugate(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_matrix(rng, n, n, field)
        worst = max(worst, abs(determinant(hermitian_conjugate(a)) - np.conj(determinant(a))) / max(1.0, abs(determinant(a))))
    return worst


# --------------------------------------------------------------------------
# duality checks


def _check_dual_basis(rng, n):
    worst = 0.0
    for field in _FIELDS:
        basis = gen.random_basis(rng, VectorSpace(n, field, "V"))
        worst = max(worst, frobenius(matmul(dual_basis(basis), basis.matrix) - np.eye(n)))
    return worst


def _check_pairing_invariance(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        basis = gen.random_basis(rng, space)
        x = gen.random_ket(rng, n, field)
        y = gen.random_bra(rng, n, field)
        natural = (y @ x)[0, 0]
        represented = rep_covector(y, basis).pair(rep_vector(x, basis))
        worst = max(worst, abs(natural - represented))
    return worst


def _check_composition_functorial(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        basis = gen.random_basis(rng, space)
        f = gen.random_matrix(rng, n, n, field)
        g = gen.random_matrix(rng, n, n, field)
        lhs = represent_map(matmul(f, g), basis, basis).matrix
        rhs = matmul(represent_map(f, basis, basis).matrix, represent_map(g, basis, basis).matrix)
        worst = max(worst, frobenius(lhs - rhs) / max(1.0, frobenius(rhs)))
    return worst


def _check_inverse_functorial(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        basis = gen.random_basis(rng, space)
        f = gen.random_invertible(rng, n, field)
        lhs = represent_map(np.linalg.inv(f), basis, basis).matrix
        rhs = np.linalg.inv(represent_map(f, basis, basis).matrix)
        worst = max(worst, frobenius(lhs - rhs) / max(1.0, frobenius(rhs)))
    return worst


def _check_rank_nullity(rng, n):
    worst = 0.0
    for field in _FIELDS:
        r = int(rng.integers(0, n + 1))
        u = gen.random_invertible(rng, n, field)
        v = gen.random_invertible(rng, n, field)
        f = u[:, :r] @ v[:r, :] if r else np.zeros((n, n), dtype=u.dtype)
        worst = max(worst, abs(rank(f) + kernel_dimension(f) - n))
    return float(worst)


def _check_det_invariant(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        basis = gen.random_basis(rng, space)
        new = gen.random_basis(rng, space)
        rep = represent_map(gen.random_matrix(rng, n, n, field), basis, basis)
        moved = conjugate_representation(rep, new)
        d0 = operator_determinant(rep)
        d1 = operator_determinant(moved)
        worst = max(worst, abs(d1 - d0) / max(1.0, abs(d0)))
        worst = max(worst, abs(np.trace(moved.matrix) - np.trace(rep.matrix)) / max(1.0, abs(np.trace(rep.matrix))))
    return worst


# --------------------------------------------------------------------------
# tensor checks


def _check_multilinearity(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        x = gen.random_tensor(rng, space, (UP,))
        x2 = gen.random_tensor(rng, space, (UP,))
        y = gen.random_tensor(rng, space, (DOWN, UP))
        alpha, beta = rng.uniform(-1, 1, size=2)
        combo = Tensor(space, (UP,), alpha * x.components + beta * x2.components)
        lhs = tensor_product(combo, y).components
        rhs = alpha * tensor_product(x, y).components + beta * tensor_product(x2, y).components
        worst = max(worst, np.max(np.abs(lhs - rhs)))
    return float(worst)


def _int_tensor(rng, space, variance):
    shape = (space.dim,) * len(variance)
    comp = rng.integers(-4, 5, size=shape).astype(np.float64)
    return Tensor(space, tuple(variance), comp)


def _check_associativity(rng, n):
    space = VectorSpace(n, REAL, "V")
    t1 = _int_tensor(rng, space, (UP,))
    t2 = _int_tensor(rng, space, (DOWN,))
    t3 = _int_tensor(rng, space, (UP,))
    lhs = tensor_product(tensor_product(t1, t2), t3)
    rhs = tensor_product(t1, tensor_product(t2, t3))
    if lhs.variance != rhs.variance:
        return 1.0
    return float(np.max(np.abs(lhs.components - rhs.components)))


def _check_dimension_count(rng, n):
    space = VectorSpace(n, REAL, "V")
    rank_total = int(rng.integers(0, 4))
    variance = tuple(UP if rng.integers(0, 2) else DOWN for _ in range(rank_total))
    t = gen.random_tensor(rng, space, variance)
    return float(abs(t.components.size - n**rank_total))


def _check_contract_transform(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        t = gen.random_tensor(rng, space, (UP, UP, DOWN))
        m = gen.random_invertible(rng, n, field)
        lhs = contract(transform_tensor(t, m), 1, 3)
        rhs = transform_tensor(contract(t, 1, 3), m)
        worst = max(worst, np.max(np.abs(lhs.components - rhs.components)))
    return float(worst)


def _check_kron_flatten(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        t = gen.random_tensor(rng, space, (UP, UP, UP))
        back = kron_unflatten(kron_flatten(t), space, t.variance)
        if not np.array_equal(back.components, t.components):
            worst = max(worst, 1.0)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        flat = kron_flatten(tensor_product(tensor_from_ket(space, x), tensor_from_ket(space, y)))
        worst = max(worst, float(np.max(np.abs(flat - np.kron(x, y)))))
    return worst


# --------------------------------------------------------------------------
# inner product / spectral checks


def _check_cauchy_schwarz(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        margin = abs(inner_product(x, y, ip)) - norm(x, ip) * norm(y, ip)
        worst = max(worst, margin)
    return max(0.0, float(worst))


def _check_riesz_pairing(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        lhs = (riesz_map(x, ip) @ y)[0, 0]
        worst = max(worst, abs(lhs - inner_product(x, y, ip)))
    return worst


def _check_orthonormal_transition(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        vs1 = [gen.random_ket(rng, n, field) for _ in range(n)]
        vs2 = [gen.random_ket(rng, n, field) for _ in range(n)]
        b1 = orthonormalize(vs1, ip)
        b2 = orthonormalize(vs2, ip)
        m = change_of_basis(b1, b2)
        worst = max(worst, frobenius(hermitian_conjugate(m) @ m - np.eye(n)))
    return worst


def _check_real_eigenvalues(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_hermitian(rng, n, field)
        diag, _, _ = jacobi_hermitian(a)
        worst = max(worst, float(np.max(np.abs(diag.imag))))
    return worst


def _check_eigenspace_orthogonality(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        f = gen.random_g_selfadjoint(rng, ip)
        _, columns = g_selfadjoint_eigen(f, ip)
        gram = hermitian_conjugate(columns) @ ip.gram @ columns
        worst = max(worst, float(np.max(np.abs(gram - np.eye(n)))))
    return worst


def _check_projector_system(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        dec = spectral_representation(gen.random_g_selfadjoint(rng, ip), ip)
        total = np.zeros((n, n), dtype=dec.projectors[0].dtype)
        for i, p in enumerate(dec.projectors):
            total = total + p
            for j, q in enumerate(dec.projectors):
                expected = p if i == j else 0.0
                worst = max(worst, frobenius(p @ q - expected))
        worst = max(worst, frobenius(total - np.eye(n)))
    return worst


def _check_spectral_reconstruction(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        f = gen.random_g_selfadjoint(rng, ip)
        dec = spectral_representation(f, ip)
        worst = max(worst, frobenius(f - dec.reconstruct()) / max(1.0, frobenius(f)))
    return worst


def _check_spectral_basis_independence(rng, n):
    worst = 0.0
    for field in _FIELDS:
        space = VectorSpace(n, field, "V")
        ip = _random_ip(rng, n, field)
        f = gen.random_g_selfadjoint(rng, ip)
        dec = spectral_representation(f, ip)
        b = gen.random_invertible(rng, n, field)
        new_gram = hermitian_conjugate(b) @ ip.gram @ b
        new_ip = InnerProduct(space, new_gram)
        moved = spectral_representation(np.linalg.inv(b) @ f @ b, new_ip)
        if moved.multiplicities != dec.multiplicities:
            return 1.0
        for value, moved_value in zip(dec.eigenvalues, moved.eigenvalues):
            worst = max(worst, abs(value - moved_value) / max(1.0, abs(value)))
        b_inv = np.linalg.inv(b)
        for p, q in zip(dec.projectors, moved.projectors):
            worst = max(worst, frobenius(q - b_inv @ p @ b) / max(1.0, frobenius(p)))
    return worst


def _check_charpoly_oracle(rng, n):
    worst = 0.0
    for field in _FIELDS:
        a = gen.random_hermitian(rng, n, field)
        dec = eigen_hermitian(a)
        mine = np.repeat(dec.eigenvalues, dec.multiplicities)
        oracle = np.sort(charpoly_eigenvalues(a).real)[::-1]
        worst = max(worst, float(np.max(np.abs(mine - oracle))))
    return worst


def _check_isometry_injective(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ip = _random_ip(rng, n, field)
        u = gen.random_unitary(rng, n, field)
        f = ip.sqrt_inv @ u @ ip.sqrt
        if field == REAL:
            f = f.real
        worst = max(worst, abs(rank(f) - n))
    return float(worst)


# --------------------------------------------------------------------------
# indefinite checks


def _check_metric_selfadjoint(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        worst = max(worst, frobenius(adjoint(ms.h, ms.ip) - ms.h) / max(1.0, frobenius(ms.h)))
    return worst


def _check_compatibility(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        worst = max(worst, frobenius(ms.h @ ms.h - np.eye(n)))
    return worst


def _check_dual_covector_action(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        y = gen.random_bra(rng, n, field)
        lhs = riesz_map(ms.h @ riesz_inverse(y, ms.ip), ms.ip)
        worst = max(worst, float(np.max(np.abs(lhs - y @ ms.h))))
    return worst


def _check_dirac_involution(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        f = gen.random_matrix(rng, n, n, field)
        twice = dirac_adjoint_operator(dirac_adjoint_operator(f, ms), ms)
        worst = max(worst, frobenius(twice - f) / max(1.0, frobenius(f)))
        alpha = complex(*rng.uniform(-1, 1, size=2)) if field == COMPLEX else float(rng.uniform(-1, 1))
        lhs = dirac_adjoint_operator(alpha * f, ms)
        rhs = np.conj(alpha) * dirac_adjoint_operator(f, ms)
        worst = max(worst, frobenius(lhs - rhs) / max(1.0, frobenius(rhs)))
    return worst


def _check_dirac_product_reversal(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        f = gen.random_matrix(rng, n, n, field)
        g = gen.random_matrix(rng, n, n, field)
        lhs = dirac_adjoint_operator(f @ g, ms)
        rhs = dirac_adjoint_operator(g, ms) @ dirac_adjoint_operator(f, ms)
        worst = max(worst, frobenius(lhs - rhs) / max(1.0, frobenius(rhs)))
    return worst


def _pseudo_unitary_in_frame(rng, ms):
    basis = h_orthonormal_basis(ms).basis
    n_plus, n_minus = ms.signature
    canonical = gen.random_pseudo_unitary(rng, n_plus, n_minus, ms.space.field)
    return basis.matrix @ canonical @ basis.inverse


def _check_hform_invariance(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        f = _pseudo_unitary_in_frame(rng, ms)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        worst = max(worst, abs(hform_value(f @ x, f @ y, ms) - hform_value(x, y, ms)))
    return worst


def _check_preserves_h_orthonormality(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        hb = h_orthonormal_basis(ms)
        f = _pseudo_unitary_in_frame(rng, ms)
        moved = f @ hb.basis.matrix
        gram = hermitian_conjugate(moved) @ ms.hform.matrix @ moved
        worst = max(worst, frobenius(gram - np.diag(np.asarray(hb.eta_diag, dtype=float))))
    return worst


def _check_sylvester(rng, n):
    worst = 0.0
    for field in _FIELDS:
        k = gen.random_nondegenerate_hform(rng, n, field)
        before = compatible_structure_from_hform(k).signature
        b = gen.random_invertible(rng, n, field)
        after = compatible_structure_from_hform(hermitian_conjugate(b) @ k @ b).signature
        worst = max(worst, abs(before[0] - after[0]) + abs(before[1] - after[1]))
    return float(worst)


def _check_hbasis_canonical(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        hb = h_orthonormal_basis(ms)
        gram = hermitian_conjugate(hb.basis.matrix) @ ms.hform.matrix @ hb.basis.matrix
        worst = max(worst, frobenius(gram - np.diag(np.asarray(hb.eta_diag, dtype=float))))
    return worst


def _check_hform_bracket(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        hb = h_orthonormal_basis(ms)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        xc = hb.basis.inverse @ x
        yc = hb.basis.inverse @ y
        eta = np.diag(np.asarray(hb.eta_diag, dtype=float))
        bracket = (hermitian_conjugate(xc) @ eta.astype(xc.dtype) @ yc)[0, 0]
        worst = max(worst, abs(hform_value(x, y, ms) - bracket))
    return worst


def _check_projector_representation(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        hb = h_orthonormal_basis(ms)
        p_plus, p_minus = canonical_projectors(ms)
        n_plus, _ = ms.signature
        rep_plus = hb.basis.inverse @ p_plus @ hb.basis.matrix
        rep_minus = hb.basis.inverse @ p_minus @ hb.basis.matrix
        expected = np.diag([1.0] * n_plus + [0.0] * (n - n_plus))
        worst = max(worst, float(np.max(np.abs(rep_plus - expected))))
        rep_h = hb.basis.inverse @ ms.h @ hb.basis.matrix
        worst = max(worst, float(np.max(np.abs(rep_h - (rep_plus - rep_minus)))))
    return worst


def _check_projector_split(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        p_plus, p_minus = canonical_projectors(ms)
        x = gen.random_ket(rng, n, field)
        y = gen.random_ket(rng, n, field)
        split = inner_product(x, p_plus @ y, ms.ip) - inner_product(x, p_minus @ y, ms.ip)
        worst = max(worst, abs(hform_value(x, y, ms) - split))
    return worst


def _check_dirac_canonical_matrix(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        hb = h_orthonormal_basis(ms)
        f = gen.random_matrix(rng, n, n, field)
        eta = np.diag(np.asarray(hb.eta_diag, dtype=float))
        rep_f = hb.basis.inverse @ f @ hb.basis.matrix
        rep_conj = hb.basis.inverse @ dirac_adjoint_operator(f, ms) @ hb.basis.matrix
        expected = eta.astype(rep_f.dtype) @ hermitian_conjugate(rep_f) @ eta.astype(rep_f.dtype)
        worst = max(worst, frobenius(rep_conj - expected) / max(1.0, frobenius(rep_f)))
    return worst


def _check_dirac_spectral_reconstruction(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        f = gen.random_dirac_selfadjoint(rng, ms)
        dec = dirac_spectral(f, ms)
        worst = max(worst, frobenius(f - dec.reconstruct()) / max(1.0, frobenius(f)))
    return worst


def _check_signature_sum(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        worst = max(worst, abs(ms.signature[0] + ms.signature[1] - n))
    return float(worst)


def _check_index_roundtrip(rng, n):
    worst = 0.0
    for field in _FIELDS:
        ms = _random_structure(rng, n, field)
        t = gen.random_tensor(rng, ms.space, (UP, DOWN, UP))
        slot = int(rng.integers(1, t.rank + 1))
        lowered = raise_lower_index(t, slot, ms)
        if lowered.slot(slot) == t.slot(slot):
            return 1.0
        back = raise_lower_index(lowered, slot, ms)
        if back.variance != t.variance:
            return 1.0
        worst = max(worst, float(np.max(np.abs(back.components - t.components))))
        # Entrywise: flipping one up slot applies the +-1 pattern along it.
        eta = ms.eta.reshape([n if i == slot - 1 else 1 for i in range(t.rank)])
        worst = max(worst, float(np.max(np.abs(lowered.components - eta * t.components))))
    return worst


REGISTRY = (
    Lemma("matrix.det-product", 1e-9, _check_det_product,
          description="det(AB) = det(A) det(B)"),
    Lemma("matrix.det-oracle", 1e-10, _check_det_oracle, max_dim=6,
          description="LU determinant matches the permutation-sum oracle"),
    Lemma("matrix.conjugation-rules", 0.0, _check_conjugation_rules,
          description="conjugate-transpose is additive, antilinear, product-reversing"),
    Lemma("matrix.kron-mixed-product", 1e-10, _check_kron_mixed_product,
          description="(A kron B)(C kron D) = (AC) kron (BD)"),
    Lemma("matrix.det-conjugate", 1e-10, _check_det_conjugate,
          description="det of the conjugate transpose is the conjugate determinant"),
    Lemma("duality.dual-basis", 1e-10, _check_dual_basis,
          description="dual covectors times basis columns give the identity"),
    Lemma("duality.pairing-invariance", 1e-10, _check_pairing_invariance,
          description="the dual pairing is representation independent"),
    Lemma("duality.composition-functorial", 1e-10, _check_composition_functorial,
          description="representation of a composition is the matrix product"),
    Lemma("duality.inverse-functorial", 1e-9, _check_inverse_functorial,
          description="representation of the inverse is the inverse matrix"),
    Lemma("duality.rank-nullity", 0.0, _check_rank_nullity,
          description="image and kernel dimensions sum to the space dimension"),
    Lemma("duality.determinant-invariant", 1e-9, _check_det_invariant,
          description="determinant and trace survive a change of basis"),
    Lemma("tensor.multilinearity", 1e-12, _check_multilinearity,
          description="the tensor product is linear in each factor"),
    Lemma("tensor.associativity", 0.0, _check_associativity,
          description="the tensor product is associative"),
    Lemma("tensor.dimension-count", 0.0, _check_dimension_count,
          description="component count is dim to the number of slots"),
    Lemma("tensor.contract-transform", 1e-10, _check_contract_transform,
          description="contraction commutes with component transformations"),
    Lemma("tensor.kron-flatten", 0.0, _check_kron_flatten,
          description="flattening is a bijection matching the Kronecker product"),
    Lemma("inner.cauchy-schwarz", 1e-12, _check_cauchy_schwarz,
          description="|(x,y)| <= ||x|| ||y||"),
    Lemma("inner.riesz-pairing", 1e-12, _check_riesz_pairing,
          description="the Riesz covector pairs as the inner product"),
    Lemma("inner.orthonormal-transition-unitary", 1e-9, _check_orthonormal_transition,
          description="transitions between orthonormal bases are unitary"),
    Lemma("inner.isometry-injective", 0.0, _check_isometry_injective,
          description="inner-product preserving maps have full rank"),
    Lemma("spectral.real-eigenvalues", 1e-10, _check_real_eigenvalues,
          description="selfadjoint spectra are real"),
    Lemma("spectral.eigenspace-orthogonality", 1e-9, _check_eigenspace_orthogonality,
          description="eigenvector columns are orthonormal in the metric"),
    Lemma("spectral.projector-system", 1e-9, _check_projector_system,
          description="spectral projectors are orthogonal and complete"),
    Lemma("spectral.reconstruction", 1e-9, _check_spectral_reconstruction,
          description="eigenvalue-weighted projectors rebuild the operator"),
    Lemma("spectral.basis-independence", 1e-9, _check_spectral_basis_independence,
          description="the spectral data transforms covariantly with the basis"),
    Lemma("spectral.charpoly-oracle", 1e-8, _check_charpoly_oracle, max_dim=6,
          description="eigenvalues match the characteristic-polynomial roots"),
    Lemma("metric.selfadjoint", 1e-10, _check_metric_selfadjoint,
          description="the metric operator is selfadjoint for the inner product"),
    Lemma("metric.compatibility", 1e-9, _check_compatibility,
          description="the metric operator squares to the identity"),
    Lemma("metric.dual-covector-action", 1e-10, _check_dual_covector_action,
          description="the induced covector metric acts by right multiplication"),
    Lemma("metric.sylvester-invariance", 0.0, _check_sylvester, min_dim=2, max_dim=8,
          description="the signature survives invertible congruences"),
    Lemma("metric.hbasis-canonical", 1e-9, _check_hbasis_canonical,
          description="the canonical basis diagonalizes the form to +-1 entries"),
    Lemma("metric.hform-bracket", 1e-12, _check_hform_bracket,
          description="the form equals the signed bracket of canonical components"),
    Lemma("metric.projector-representation", 1e-12, _check_projector_representation,
          description="canonical projector matrices are exact 0/1 diagonals"),
    Lemma("metric.projector-split", 1e-10, _check_projector_split,
          description="the form splits into projector inner products"),
    Lemma("metric.signature-sum", 0.0, _check_signature_sum,
          description="signature counts sum to the dimension"),
    Lemma("dirac.involution", 1e-12, _check_dirac_involution,
          description="the Dirac adjoint is an antilinear involution"),
    Lemma("dirac.product-reversal", 1e-10, _check_dirac_product_reversal,
          description="the Dirac adjoint reverses compositions"),
    Lemma("dirac.hform-invariance", 1e-10, _check_hform_invariance,
          description="pseudo-unitary maps preserve the indefinite form"),
    Lemma("dirac.preserves-canonical-basis", 1e-9, _check_preserves_h_orthonormality,
          description="pseudo-unitary images of canonical bases stay canonical"),
    Lemma("dirac.canonical-matrix", 1e-10, _check_dirac_canonical_matrix,
          description="the Dirac adjoint matrix is the eta-sandwiched conjugate"),
    Lemma("dirac.spectral-reconstruction", 1e-9, _check_dirac_spectral_reconstruction,
          description="Dirac-selfadjoint operators rebuild from projectors and metric"),
    Lemma("metric.index-roundtrip", 0.0, _check_index_roundtrip,
          description="raising after lowering restores a tensor exactly"),
)


def run_lemma_suite(seed: int, dims=None, instances: int = 5):
    """Evaluate every registered lemma on seeded random instances.

    ``dims`` must be a subset of 1..12.  Each (lemma, dim, instance)
    triple draws from its own derived sub-stream, so the result is
    independent of evaluation order.
    """
    dims = tuple(dims) if dims is not None else DEFAULT_DIMS
    if not dims or any(d < 1 or d > 12 for d in dims):
        raise ValueError("dims must be a non-empty subset of 1..12")
    if instances < 1:
        raise ValueError("instances must be >= 1")
    reports = []
    for lemma in REGISTRY:
        usable = [d for d in dims if lemma.min_dim <= d <= lemma.max_dim]
        worst = 0.0
        count = 0
        for dim in usable:
            for k in range(instances):
                rng = np.random.default_rng(_subseed(seed, lemma.lemma_id, dim, k))
                try:
                    error = float(lemma.check(rng, dim))
                except KreinAlgError:
                    # A domain error while checking counts as a failed
                    # instance, never as a crashed run.
                    error = float("inf")
                worst = max(worst, error)
                count += 1
        reports.append(
            LemmaReport(
                lemma_id=lemma.lemma_id,
                instances=count,
                max_error=worst,
                tolerance=lemma.tolerance,
                status="pass" if worst <= lemma.tolerance else "fail",
                seed=seed,
            )
        )
    return reports
