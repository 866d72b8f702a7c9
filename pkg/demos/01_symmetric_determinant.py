"""A tour of the symmetric determinant.

Over a noncommutative ring the classical determinant has no single natural
definition; the symmetric determinant averages over both row and column
orders at once:

    sdet(A) = sum over pairs (alpha, beta) of permutations of
              sgn(alpha) sgn(beta) A[alpha(1)][beta(1)] ... A[alpha(n)][beta(n)]

This script evaluates it on generic matrices (entries are distinct free
noncommuting generators), shows the collapse to n! det over the integers,
and checks the trace formula sdet(A) = tr(A A*) = tr(A* A).
"""

from ncdet import (
    IntegerRing,
    Matrix,
    commutative_det,
    preadjoint,
    symmetric_determinant,
    trace_of_product,
)
from ncdet.verify import generic_matrix

# A generic 2x2 matrix [[a, b], [c, d]]: four independent noncommuting letters.
algebra, A = generic_matrix(2)
print("generic 2x2 matrix:")
print(A)
print()

# Both row products ad and da appear, with the off-diagonal words subtracted.
print("sdet(A) =", symmetric_determinant(A))
print()

# The generic 3x3 expansion has (3!)^2 = 36 signed words.
algebra3, B = generic_matrix(3)
sdet3 = symmetric_determinant(B)
print(f"generic 3x3 sdet has {len(sdet3.terms)} terms, e.g.")
print(" ", str(sdet3)[:72], "...")
print()

# Over a commutative ring every permutation pair contributes the same word,
# so the double sum collapses to n! times the classical determinant.
ints = IntegerRing()
M = Matrix(ints, [[1, 2], [3, 4]])
print("integer matrix [[1, 2], [3, 4]]:")
print("  det  =", commutative_det(M))
print("  sdet =", symmetric_determinant(M), "(= 2! * det)")
print()

# The trace formula: multiplying by the preadjoint on either side and
# taking the trace recovers the symmetric determinant exactly.
for n, (alg, G) in ((2, (algebra, A)), (3, (algebra3, B))):
    P = preadjoint(G)
    left = trace_of_product(G, P)
    right = trace_of_product(P, G)
    sdet = symmetric_determinant(G)
    assert left == sdet == right
    print(f"n={n}: tr(A A*) = sdet(A) = tr(A* A) confirmed, exact")
