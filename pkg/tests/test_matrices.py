import numpy as np
import pytest

from kreinalg import (
    FieldError,
    ShapeError,
    classify,
    determinant,
    determinant_permutation_sum,
    elementary_projector,
    hermitian_conjugate,
    identity,
    kronecker_product,
    matmul,
    natural_bra,
    natural_ket,
)
from kreinalg.generators import random_invertible, random_matrix, random_unitary


class TestMatmul:
    def test_identity_is_neutral(self):
        rng = np.random.default_rng(1)
        a = random_matrix(rng, 3, 3, "complex")
        np.testing.assert_array_equal(matmul(identity(3, "complex"), a), a)

    def test_hand_expansion(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        b = np.array([[0.0, 1.0], [1.0, 0.0]])
        np.testing.assert_array_equal(matmul(a, b), [[2.0, 1.0], [4.0, 3.0]])

    def test_shape_rule(self):
        rng = np.random.default_rng(2)
        c = matmul(random_matrix(rng, 2, 3), random_matrix(rng, 3, 4))
        assert c.shape == (2, 4)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            matmul(np.zeros((2, 3)), np.zeros((2, 3)))

    def test_field_mismatch(self):
        with pytest.raises(FieldError):
            matmul(np.zeros((2, 2)), np.zeros((2, 2), dtype=complex))


class TestHermitianConjugate:
    def test_involution(self):
        rng = np.random.default_rng(3)
        a = random_matrix(rng, 3, 2, "complex")
        np.testing.assert_array_equal(hermitian_conjugate(hermitian_conjugate(a)), a)

    def test_hermitian_fixed_point(self):
        a = np.array([[0.0, -1.0j], [1.0j, 0.0]])
        oracle = np.conj(a.T)
        np.testing.assert_array_equal(hermitian_conjugate(a), oracle)
        np.testing.assert_array_equal(oracle, a)

    def test_product_reversal(self):
        rng = np.random.default_rng(4)
        a = random_matrix(rng, 3, 3, "complex")
        b = random_matrix(rng, 3, 3, "complex")
        np.testing.assert_allclose(
            hermitian_conjugate(a @ b),
            hermitian_conjugate(b) @ hermitian_conjugate(a),
            atol=1e-15,
        )

    def test_real_is_transpose(self):
        rng = np.random.default_rng(5)
        a = random_matrix(rng, 2, 4)
        np.testing.assert_array_equal(hermitian_conjugate(a), a.T)


class TestDeterminant:
    def test_identity(self):
        assert determinant(identity(5)) == pytest.approx(1.0)

    def test_permutation_sum_hand_case(self):
        # S_2 sum: +1*4 - 2*3
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert determinant_permutation_sum(a) == pytest.approx(-2.0)
        assert determinant(a) == pytest.approx(-2.0, rel=1e-12)

    def test_scaling_power_rule(self):
        rng = np.random.default_rng(6)
        a = random_matrix(rng, 3, 3, "complex")
        alpha = 0.7 - 0.3j
        np.testing.assert_allclose(
            determinant(alpha * a), alpha**3 * determinant(a), rtol=1e-12
        )

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("field", ["real", "complex"])
    def test_lu_matches_permutation_sum(self, n, field):
        rng = np.random.default_rng(100 + n)
        a = random_invertible(rng, n, field)
        assert determinant(a) == pytest.approx(
            determinant_permutation_sum(a), rel=1e-10
        )

    def test_product_rule(self):
        rng = np.random.default_rng(7)
        a = random_invertible(rng, 4, "complex")
        b = random_invertible(rng, 4, "complex")
        assert determinant(a @ b) == pytest.approx(
            determinant(a) * determinant(b), rel=1e-9
        )

    def test_conjugate_rule(self):
        rng = np.random.default_rng(8)
        a = random_matrix(rng, 4, 4, "complex")
        assert determinant(hermitian_conjugate(a)) == pytest.approx(
            np.conj(determinant(a)), rel=1e-10
        )

    def test_non_square_rejected(self):
        with pytest.raises(ShapeError):
            determinant(np.zeros((2, 3)))
        with pytest.raises(ShapeError):
            determinant_permutation_sum(np.zeros((2, 3)))

    def test_permutation_sum_size_cap(self):
        with pytest.raises(ShapeError):
            determinant_permutation_sum(np.eye(7))


class TestKronecker:
    def test_identity_blocks(self):
        rng = np.random.default_rng(9)
        b = random_matrix(rng, 2, 2)
        out = kronecker_product(identity(2), b)
        np.testing.assert_array_equal(out[:2, :2], b)
        np.testing.assert_array_equal(out[2:, 2:], b)
        np.testing.assert_array_equal(out[:2, 2:], np.zeros((2, 2)))

    def test_scalar_identity(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        np.testing.assert_array_equal(kronecker_product(a, identity(1)), a)

    def test_block_layout(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        b = np.array([[0.0, 1.0], [1.0, 0.0]])
        out = kronecker_product(a, b)
        assert out.shape == (4, 4)
        np.testing.assert_array_equal(out[:2, :2], 1.0 * b)
        np.testing.assert_array_equal(out[:2, 2:], 2.0 * b)
        np.testing.assert_array_equal(out[2:, :2], 3.0 * b)
        np.testing.assert_array_equal(out[2:, 2:], 4.0 * b)

    def test_mixed_product(self):
        rng = np.random.default_rng(10)
        a, c = random_matrix(rng, 2, 3), random_matrix(rng, 3, 2)
        b, d = random_matrix(rng, 3, 2), random_matrix(rng, 2, 3)
        lhs = kronecker_product(a, b) @ kronecker_product(c, d)
        rhs = kronecker_product(a @ c, b @ d)
        np.testing.assert_allclose(lhs, rhs, atol=1e-10)

    def test_field_mismatch(self):
        with pytest.raises(FieldError):
            kronecker_product(np.eye(2), np.eye(2, dtype=complex))


class TestClassify:
    def test_real_involutive_diagonal(self):
        out = classify(np.diag([1.0, -1.0]))
        assert out == {"hermitian", "unitary", "symmetric", "orthogonal"}

    def test_random_unitary_has_unit_determinant(self):
        rng = np.random.default_rng(11)
        u = random_unitary(rng, 4, "complex")
        assert "unitary" in classify(u)
        assert abs(abs(determinant(u)) - 1.0) < 1e-10

    def test_random_orthogonal_determinant_sign(self):
        rng = np.random.default_rng(12)
        o = random_unitary(rng, 5, "real")
        assert "orthogonal" in classify(o)
        assert min(abs(determinant(o) - 1.0), abs(determinant(o) + 1.0)) < 1e-9

    def test_singular(self):
        assert "singular" in classify(np.diag([1.0, 0.0]))

    def test_non_square_rejected(self):
        with pytest.raises(ShapeError):
            classify(np.zeros((2, 3)))


class TestBraKet:
    def test_transpose_relation(self):
        np.testing.assert_array_equal(natural_ket(3, 2).T, natural_bra(3, 2))

    def test_elementary_projectors_complete_and_orthogonal(self):
        n = 4
        total = sum(elementary_projector(n, k) for k in range(1, n + 1))
        np.testing.assert_array_equal(total, np.eye(n))
        p1, p2 = elementary_projector(n, 1), elementary_projector(n, 2)
        np.testing.assert_array_equal(p1 @ p1, p1)
        np.testing.assert_array_equal(p1 @ p2, np.zeros((n, n)))

    def test_index_bounds(self):
        with pytest.raises(ShapeError):
            natural_ket(3, 0)
        with pytest.raises(ShapeError):
            natural_ket(3, 4)
