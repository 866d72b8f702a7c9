"""Symmetric Newton trace formulas for 2x2 and 3x3 matrices.

Over a commutative ring, determinants are polynomial in power-sum traces:
2 det = tr^2 - tr(A^2) and 6 det = tr^3 - 3 tr tr(A^2) + 2 tr(A^3).  The
symmetric determinant obeys noncommutative analogues in which the order of
every factor matters and, at n = 3, the transpose makes an appearance:

    sdet(A) = tr^2(A) - tr(A^2)                                    (n = 2)
    sdet(A) = tr^3(A) - tr(A) tr(A^2) - tr(A tr(A) A)
              - tr(A^2) tr(A) + tr(A^3) + tr((A^T)^3)              (n = 3)
"""

from ncdet import (
    IntegerRing,
    Matrix,
    characteristic_polynomial,
    newton_sdet_2,
    newton_sdet_3,
    symmetric_determinant,
)
from ncdet.verify import generic_matrix

algebra, A = generic_matrix(2)
print("n = 2: tr^2 - tr(A^2) =", newton_sdet_2(A))
assert newton_sdet_2(A) == symmetric_determinant(A)
print("matches sdet(A) exactly")
print()

algebra3, B = generic_matrix(3)
assert newton_sdet_3(B) == symmetric_determinant(B)
print("n = 3: the six-term trace expression reproduces all 36 words of sdet(B)")
print()

# Each individual trace term is genuinely needed: the three middle terms
# tr(A)tr(A^2), tr(A tr(A) A), tr(A^2)tr(A) are pairwise different words,
# and tr((A^T)^3) differs from tr(A^3).
t = B.trace()
t2 = (B * B).trace()
middle = (B * Matrix.scalar(algebra3, 3, t) * B).trace()
print("tr(A) tr(A^2) == tr(A tr(A) A)?", t * t2 == middle)
print("tr(A tr(A) A) == tr(A^2) tr(A)?", middle == t2 * t)
T = B.transpose()
print("tr((A^T)^3) == tr(A^3)?", (T * T * T).trace() == (B * B * B).trace())
print("(transposition does preserve tr(A^2): ",
      (T * T).trace() == (B * B).trace(), ")", sep="")
print()

# The same traces assemble the full characteristic polynomial at n = 3.
p = characteristic_polynomial(B, "right", 1)
print("p_{B,1}(z) coefficient of z^2:", p.coeff(2))
print("  which is -6 tr(B); the closed form is")
print("  6z^3 - 6 tr(B) z^2 + 3(tr^2(B) - tr(B^2)) z - sdet(B)")
print()

# Over the integers everything collapses to the classical values.
ints = IntegerRing()
M = Matrix(ints, [[1, 2, 3], [4, 5, 6], [7, 8, 10]])
print("integer 3x3: formula gives", newton_sdet_3(M), "= 6 det =", symmetric_determinant(M))
