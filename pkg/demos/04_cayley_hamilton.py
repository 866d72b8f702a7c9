"""Characteristic polynomials and generalized Cayley--Hamilton identities.

The k-th characteristic polynomials p_{A,k}(z) = rdet_k(zI - A) and
q_{A,k}(z) = ldet_k(zI - A) live in R[z] with z central.  At k = 1 they
coincide, and the matrix A satisfies exact Cayley--Hamilton identities
whose coefficients are the polynomial coefficients corrected by trace-zero
matrices with commutator entries -- the "witness" data extracted here.

Over the exterior algebra (Lie nilpotent of index 2) the k = 2 polynomial
yields identities with plain scalar coefficients, no correction needed.
"""

import random

from ncdet import (
    GrassmannAlgebra,
    IntegerRing,
    Matrix,
    cayley_hamilton_witness,
    characteristic_polynomial,
    left_determinant,
    right_determinant,
    scalar_cayley_hamilton_check,
    standard_polynomial_4,
)
from ncdet.verify import generic_matrix, random_grassmann_matrix

algebra, A = generic_matrix(2)
p = characteristic_polynomial(A, "right", 1)
q = characteristic_polynomial(A, "left", 1)
print("p_{A,1}(z) =", p)
assert p == q
print("the first right and left characteristic polynomials coincide")
print()

# The witness: lambdas from p_{A,1}, plus trace-zero defect matrices C_i
# (right) and D_i (left) making the identities
#   sum_i A^i (lambda_i I + C_i) = 0 = sum_i (lambda_i I + D_i) A^i
# vanish exactly.
witness = cayley_hamilton_witness(A)
print("lambda coefficients:", [str(lam) for lam in witness.lambdas])
print("C_1 =")
print(witness.right_defects[1])
print()

# Over the integers all defects vanish and the identity is the classical one.
ints = IntegerRing()
M = Matrix(ints, [[1, 2], [3, 4]])
w = cayley_hamilton_witness(M)
print("integer [[1,2],[3,4]]: lambdas =", w.lambdas)
combo = Matrix.scalar(ints, 2, w.lambdas[0]) + M * w.lambdas[1] + (M * M) * w.lambdas[2]
assert combo.is_zero()
print("-4 I - 10 A + 2 A^2 = 0, twice the classical Cayley-Hamilton identity")
print()

# At k = 2 the right and left determinants differ by the degree-four
# standard polynomial of the entries -- a single alternating sum.
a, b, c, d = algebra.gens()
assert right_determinant(A, 2) - left_determinant(A, 2) == standard_polynomial_4(a, b, c, d)
print("rdet_2(A) - ldet_2(A) is exactly S4(a, b, c, d), 24 signed words")
print()

# Scalar-coefficient Cayley-Hamilton over the exterior algebra at k = 2.
E = GrassmannAlgebra(4)
rng = random.Random(3)
G = random_grassmann_matrix(E, rng, 2)
assert scalar_cayley_hamilton_check(G, k=2)
p2 = characteristic_polynomial(G, "right", 2)
print("over the exterior algebra, p_{A,2} has degree", p2.degree(),
      "with leading coefficient", p2.coeff(4))
print("substituting A back in annihilates it with scalar coefficients alone")
