#!/usr/bin/env python3
"""Dense matrix basics: products, conjugation, determinants, Kronecker blocks.

Run directly: python3 demos/01_matrices_and_determinants.py
"""

import numpy as np

from kreinalg import (
    classify,
    determinant,
    determinant_permutation_sum,
    hermitian_conjugate,
    identity,
    kronecker_product,
    matmul,
)

rng = np.random.default_rng(2024)

# Matrix products follow the (m x k)(k x n) = (m x n) shape rule.
a = np.array([[1.0, 2.0], [3.0, 4.0]])
flip = np.array([[0.0, 1.0], [1.0, 0.0]])
print("A @ flip =\n", matmul(a, flip))

# Conjugate transposition reverses products and is an involution.
b = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
lhs = hermitian_conjugate(matmul(b.astype(complex), b.astype(complex)))
rhs = matmul(hermitian_conjugate(b), hermitian_conjugate(b))
print("conjugation reverses products, residual:", np.max(np.abs(lhs - rhs)))

# Two independent determinant routes: LU factorization for production,
# the antisymmetric permutation sum as a small-size cross-check.
print("det A (LU)          :", determinant(a))
print("det A (permutations):", determinant_permutation_sum(a))

m = rng.uniform(-1, 1, (5, 5))
print("det(M N) - det M det N:",
      determinant(m @ m.T) - determinant(m) * determinant(m.T))

# Kronecker products build block matrices out of scalar-scaled copies.
print("identity (x) flip =\n", kronecker_product(identity(2), flip))

# Structural predicates, evaluated to tolerance.
print("classify(diag(1,-1)) :", sorted(classify(np.diag([1.0, -1.0]))))
rot = np.array([[np.cos(0.4), -np.sin(0.4)], [np.sin(0.4), np.cos(0.4)]])
print("classify(rotation)   :", sorted(classify(rot)))
print("|det rotation|       :", abs(determinant(rot)))
