#!/usr/bin/env python3
"""Bases, dual bases, and matrix representations of vectors and operators.

Run directly: python3 demos/02_dual_bases_and_representations.py
"""

import numpy as np

from kreinalg import (
    Basis,
    VectorSpace,
    canonical_form_bases,
    change_of_basis,
    conjugate_representation,
    dual_basis,
    natural_basis,
    operator_determinant,
    rep_covector,
    rep_vector,
    represent_map,
)

rng = np.random.default_rng(7)
space = VectorSpace(3, "real", "V")

# A basis is an invertible matrix of column vectors; the rows of its
# inverse are the dual covectors, pairing to the identity.
basis = Basis(space, np.array([[2.0, 1.0, 0.0], [0.0, 1.0, 0.0], [1.0, 0.0, 3.0]]))
print("dual rows @ basis columns =\n", np.round(dual_basis(basis) @ basis.matrix, 12))

# Components of a vector are what the dual covectors read off.
x = np.array([[4.0], [1.0], [5.0]])
rep = rep_vector(x, basis)
print("components of x:", rep.components.ravel())
print("reassembled    :", rep.to_natural().ravel())

# Covector components ride along the basis itself, so the pairing
# between a covector and a vector never depends on the chosen basis.
y = np.array([[1.0, -1.0, 2.0]])
pairing_natural = (y @ x)[0, 0]
pairing_in_basis = rep_covector(y, basis).pair(rep)
print("pairing, natural vs represented:", pairing_natural, pairing_in_basis)

# Changing bases transports operator matrices by conjugation and leaves
# the determinant (and trace) untouched.
f = rng.uniform(-1, 1, (3, 3))
other = Basis(space, rng.uniform(-1, 1, (3, 3)) + 2 * np.eye(3))
rep_f = represent_map(f, basis, basis)
moved = conjugate_representation(rep_f, other)
print("det before/after change of basis:",
      operator_determinant(rep_f), operator_determinant(moved))
print("change-of-basis matrix M =\n", np.round(change_of_basis(basis, other), 6))

# Any map can be squeezed into the block form diag(1_r, 0) by choosing
# bases adapted to its image and kernel.
tall = np.outer(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))  # rank one
dom_b, cod_b, r = canonical_form_bases(tall, space, space)
print("rank:", r)
print("canonical block form:\n", np.round(represent_map(tall, dom_b, cod_b).matrix, 12))
print("natural basis unchanged check:",
      np.allclose(represent_map(f, natural_basis(space), natural_basis(space)).matrix, f))
