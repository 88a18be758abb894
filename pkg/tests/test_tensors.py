import numpy as np
import pytest

from kreinalg import (
    DOWN,
    UP,
    ShapeError,
    SpaceError,
    Tensor,
    VarianceError,
    VectorSpace,
    contract,
    full_trace,
    kron_flatten,
    kron_unflatten,
    kronecker_product,
    natural_ket,
    scalar_tensor,
    sort_slots,
    tensor_from_bra,
    tensor_from_ket,
    tensor_from_operator,
    tensor_product,
    transform_tensor,
)
from kreinalg.generators import random_invertible, random_ket, random_tensor

SPACE = VectorSpace(2, "real", "V")
SPACE3C = VectorSpace(3, "complex", "V")


class TestTensorProduct:
    def test_scalar_factor_scales(self):
        rng = np.random.default_rng(40)
        t = random_tensor(rng, SPACE3C, (UP, DOWN))
        alpha = scalar_tensor(SPACE3C, 0.5 - 2.0j)
        out = tensor_product(alpha, t)
        assert out.variance == (UP, DOWN)
        np.testing.assert_array_equal(out.components, (0.5 - 2.0j) * t.components)

    def test_basis_outer_product(self):
        e1 = tensor_from_ket(SPACE, natural_ket(2, 1))
        ehat2 = tensor_from_bra(SPACE, np.array([[0.0, 1.0]]))
        out = tensor_product(e1, ehat2)
        expected = np.zeros((2, 2))
        expected[0, 1] = 1.0
        np.testing.assert_array_equal(out.components, expected)
        assert out.variance == (UP, DOWN)

    def test_evaluates_as_product_of_pairings(self):
        rng = np.random.default_rng(41)
        x = random_ket(rng, 3, "complex")
        y = random_ket(rng, 3, "complex")
        y1 = rng.uniform(-1, 1, (1, 3)) + 1j * rng.uniform(-1, 1, (1, 3))
        y2 = rng.uniform(-1, 1, (1, 3)) + 1j * rng.uniform(-1, 1, (1, 3))
        t = tensor_product(tensor_from_ket(SPACE3C, x), tensor_from_ket(SPACE3C, y))
        evaluated = np.einsum("i,j,ij->", y1[0], y2[0], t.components)
        assert evaluated == pytest.approx((y1 @ x)[0, 0] * (y2 @ y)[0, 0], abs=1e-12)

    def test_multilinearity(self):
        rng = np.random.default_rng(42)
        x = random_tensor(rng, SPACE3C, (UP,))
        x2 = random_tensor(rng, SPACE3C, (UP,))
        y = random_tensor(rng, SPACE3C, (DOWN,))
        alpha, beta = 0.3, -1.2
        combo = Tensor(SPACE3C, (UP,), alpha * x.components + beta * x2.components)
        lhs = tensor_product(combo, y).components
        rhs = alpha * tensor_product(x, y).components + beta * tensor_product(x2, y).components
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_associativity_exact_on_integer_components(self):
        rng = np.random.default_rng(43)
        ts = [
            Tensor(SPACE, (tag,), rng.integers(-4, 5, size=2).astype(float))
            for tag in (UP, DOWN, UP)
        ]
        lhs = tensor_product(tensor_product(ts[0], ts[1]), ts[2])
        rhs = tensor_product(ts[0], tensor_product(ts[1], ts[2]))
        assert lhs.variance == rhs.variance
        np.testing.assert_array_equal(lhs.components, rhs.components)

    def test_space_mismatch(self):
        rng = np.random.default_rng(44)
        with pytest.raises(SpaceError):
            tensor_product(
                random_tensor(rng, SPACE, (UP,)), random_tensor(rng, SPACE3C, (UP,))
            )

    def test_dimension_count(self):
        rng = np.random.default_rng(45)
        t = random_tensor(rng, SPACE3C, (UP, UP, DOWN))
        assert t.components.size == 3**3


class TestContract:
    def test_rank_one_one_gives_pairing(self):
        rng = np.random.default_rng(46)
        x = random_ket(rng, 3, "complex")
        y = rng.uniform(-1, 1, (1, 3)) + 1j * rng.uniform(-1, 1, (1, 3))
        t = tensor_product(tensor_from_ket(SPACE3C, x), tensor_from_bra(SPACE3C, y))
        out = contract(t, 1, 2)
        assert out.rank == 0
        assert out.components[()] == pytest.approx((y @ x)[0, 0], abs=1e-14)

    def test_operator_trace(self):
        rng = np.random.default_rng(47)
        f = rng.uniform(-1, 1, (3, 3))
        t = tensor_from_operator(VectorSpace(3, "real", "V"), f)
        oracle = sum(f[i, i] for i in range(3))
        assert contract(t, 1, 2).components[()] == pytest.approx(oracle, abs=1e-14)

    def test_full_repeated_contraction(self):
        rng = np.random.default_rng(48)
        t = random_tensor(rng, SPACE3C, (UP, UP, DOWN, DOWN))
        value = full_trace(t)
        oracle = np.einsum("ijij->", t.components)
        assert value == pytest.approx(oracle, abs=1e-12)

    def test_same_variance_rejected(self):
        rng = np.random.default_rng(49)
        t = random_tensor(rng, SPACE3C, (UP, UP))
        with pytest.raises(VarianceError):
            contract(t, 1, 2)

    def test_slot_out_of_range(self):
        rng = np.random.default_rng(50)
        t = random_tensor(rng, SPACE3C, (UP, DOWN))
        with pytest.raises(ShapeError):
            contract(t, 1, 3)


class TestTransform:
    def test_identity_no_op(self):
        rng = np.random.default_rng(51)
        t = random_tensor(rng, SPACE3C, (UP, DOWN))
        out = transform_tensor(t, np.eye(3, dtype=complex))
        np.testing.assert_allclose(out.components, t.components, atol=1e-15)

    def test_scalar_invariance(self):
        rng = np.random.default_rng(52)
        t = scalar_tensor(SPACE3C, 2.5 + 1.0j)
        m = random_invertible(rng, 3, "complex")
        np.testing.assert_array_equal(transform_tensor(t, m).components, t.components)

    def test_contraction_commutes(self):
        rng = np.random.default_rng(53)
        t = random_tensor(rng, SPACE3C, (UP, DOWN))
        m = random_invertible(rng, 3, "complex")
        lhs = contract(transform_tensor(t, m), 1, 2).components[()]
        rhs = contract(t, 1, 2).components[()]
        assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_vector_components_transform_directly(self):
        rng = np.random.default_rng(54)
        x = random_ket(rng, 3, "complex")
        m = random_invertible(rng, 3, "complex")
        out = transform_tensor(tensor_from_ket(SPACE3C, x), m)
        np.testing.assert_allclose(out.components, (m @ x).ravel(), atol=1e-12)

    def test_singular_rejected(self):
        rng = np.random.default_rng(55)
        t = random_tensor(rng, SPACE3C, (UP,))
        with pytest.raises(Exception):
            transform_tensor(t, np.zeros((3, 3), dtype=complex))


class TestFlatten:
    def test_first_basis_element(self):
        e1 = tensor_from_ket(SPACE, natural_ket(2, 1))
        flat = kron_flatten(tensor_product(e1, e1))
        assert flat.shape == (4, 1)
        np.testing.assert_array_equal(flat.ravel(), [1.0, 0.0, 0.0, 0.0])

    def test_matches_kronecker_product_exactly(self):
        rng = np.random.default_rng(56)
        x = random_ket(rng, 3, "complex")
        y = random_ket(rng, 3, "complex")
        flat = kron_flatten(
            tensor_product(tensor_from_ket(SPACE3C, x), tensor_from_ket(SPACE3C, y))
        )
        np.testing.assert_array_equal(flat, kronecker_product(x, y))

    def test_roundtrip_exact(self):
        rng = np.random.default_rng(57)
        t = random_tensor(rng, SPACE3C, (UP, UP, UP))
        back = kron_unflatten(kron_flatten(t), SPACE3C, t.variance)
        np.testing.assert_array_equal(back.components, t.components)

    def test_mixed_block_shape(self):
        rng = np.random.default_rng(58)
        t = random_tensor(rng, SPACE3C, (UP, UP, DOWN))
        assert kron_flatten(t).shape == (9, 3)

    def test_interleaved_requires_sort(self):
        rng = np.random.default_rng(59)
        t = random_tensor(rng, SPACE3C, (DOWN, UP))
        with pytest.raises(VarianceError):
            kron_flatten(t)
        sorted_t, perm = sort_slots(t)
        assert sorted_t.variance == (UP, DOWN)
        assert perm == (2, 1)
        np.testing.assert_array_equal(sorted_t.components, t.components.T)
        assert kron_flatten(sorted_t).shape == (3, 3)

    def test_sort_is_stable(self):
        rng = np.random.default_rng(60)
        t = random_tensor(rng, SPACE3C, (UP, DOWN, UP, DOWN))
        _, perm = sort_slots(t)
        assert perm == (1, 3, 2, 4)
