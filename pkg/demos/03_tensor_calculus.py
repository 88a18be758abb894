#!/usr/bin/env python3
"""Variance-tagged tensors: products, contractions, transformations, flattening.

Run directly: python3 demos/03_tensor_calculus.py
"""

import numpy as np

from kreinalg import (
    DOWN,
    UP,
    Tensor,
    VectorSpace,
    contract,
    full_trace,
    kron_flatten,
    kron_unflatten,
    kronecker_product,
    sort_slots,
    tensor_from_bra,
    tensor_from_ket,
    tensor_from_operator,
    tensor_product,
    transform_tensor,
)

rng = np.random.default_rng(11)
space = VectorSpace(2, "real", "V")

# A tensor product concatenates slots; contracting an up slot against a
# down slot sums the shared index away.
x = tensor_from_ket(space, np.array([[1.0], [2.0]]))
y = tensor_from_bra(space, np.array([[3.0, -1.0]]))
xy = tensor_product(x, y)
print("slots of x (x) y:", xy.variance)
print("contract -> dual pairing:", contract(xy, 1, 2).components[()], "= 3*1 + (-1)*2")

# The trace of an operator is the full contraction of its (1,1) tensor.
f = rng.uniform(-1, 1, (2, 2))
print("trace via tensors:", full_trace(tensor_from_operator(space, f)), "vs", np.trace(f))

# Component transformations act with M on up slots and M^{-1} on down
# slots, so contractions are invariant.
t = Tensor(space, (UP, DOWN), rng.uniform(-1, 1, (2, 2)))
m = np.array([[2.0, 1.0], [0.0, 1.0]])
before = contract(t, 1, 2).components[()]
after = contract(transform_tensor(t, m), 1, 2).components[()]
print("contraction before/after transformation:", before, after)

# Flattening identifies tensor products with Kronecker products, bit for
# bit, and is a bijection.
u = np.array([[1.0], [2.0]])
v = np.array([[5.0], [7.0]])
flat = kron_flatten(tensor_product(tensor_from_ket(space, u), tensor_from_ket(space, v)))
print("flattened (x) product:", flat.ravel())
print("kronecker product    :", kronecker_product(u, v).ravel())

cube = Tensor(space, (UP, UP, UP), rng.uniform(-1, 1, (2, 2, 2)))
restored = kron_unflatten(kron_flatten(cube), space, cube.variance)
print("flatten/unflatten exact:", np.array_equal(restored.components, cube.components))

# Mixed slot orders must be sorted explicitly before flattening; the
# permutation is reported, never applied silently.
mixed = Tensor(space, (DOWN, UP), rng.uniform(-1, 1, (2, 2)))
sorted_t, perm = sort_slots(mixed)
print("sorted slots:", sorted_t.variance, "permutation:", perm)
