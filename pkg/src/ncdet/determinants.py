"""The determinant core: symmetric determinant, preadjoint, adjoint sequences.

The symmetric determinant of an n x n matrix A is the double permutation sum

    sum over (alpha, beta) in S_n x S_n of
        sgn(alpha) sgn(beta) A[alpha(1)][beta(1)] ... A[alpha(n)][beta(n)]

which collapses to n! times the classical determinant over a commutative
ring.  The preadjoint is the matching symmetrization of the adjugate: its
(r, s) entry sums over the pairs with alpha(s) = s and beta(s) = r, taking
the ordered product that omits position s.  Entry (r, s) also equals
(-1)^(r+s) times the symmetric determinant of the minor that deletes row s
and column r; both routes are implemented and cross-checked in the tests.

From the preadjoint the right and left adjoint sequences are defined by

    P_1 = A*,  P_{k+1} = (A P_1 ... P_k)*
    Q_1 = A*,  Q_{k+1} = (Q_k ... Q_1 A)*

and the k-th right/left determinants are tr(A P_1 ... P_k) and
tr(Q_k ... Q_1 A).  Both equal the symmetric determinant at k = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .matrices import Matrix, commutative_adj, commutative_det
from .perms import perm_sign, signed_permutations
from .rings import IntegerRing


def symmetric_determinant(A: Matrix):
    """Exact double permutation sum over S_n x S_n."""
    n = A.n
    rows = A.rows
    total = A.ring.zero
    perms = signed_permutations(n)
    for alpha, sign_a in perms:
        for beta, sign_b in perms:
            prod = rows[alpha[0]][beta[0]]
            for t in range(1, n):
                prod = prod * rows[alpha[t]][beta[t]]
            if sign_a * sign_b > 0:
                total = total + prod
            else:
                total = total - prod
    return total


def _stabilized(n: int, fixed_pos: int, fixed_val: int):
    """Permutations of S_n with image fixed_val at position fixed_pos.

    Yields (full image array, sign); the other positions run over all
    arrangements of the remaining values in lexicographic order.
    """
    positions = [t for t in range(n) if t != fixed_pos]
    values = [v for v in range(n) if v != fixed_val]
    out = []
    for arrangement in permutations(values):
        full = [0] * n
        full[fixed_pos] = fixed_val
        for pos, val in zip(positions, arrangement):
            full[pos] = val
        out.append((full, perm_sign(full)))
    return out


def preadjoint(A: Matrix) -> Matrix:
    """The symmetrized adjugate A*.

    Entry (r, s) enumerates the ((n-1)!)^2 pairs (alpha, beta) with
    alpha(s) = s, beta(s) = r directly, rather than filtering S_n x S_n.
    A 1x1 matrix maps to [1] (empty product convention).
    """
    n = A.n
    ring = A.ring
    if n == 1:
        return Matrix(ring, [[ring.one]])
    rows = A.rows
    out = []
    for r in range(n):
        out_row = []
        for s in range(n):
            positions = [t for t in range(n) if t != s]
            total = ring.zero
            for alpha, sign_a in _stabilized(n, s, s):
                for beta, sign_b in _stabilized(n, s, r):
                    t0 = positions[0]
                    prod = rows[alpha[t0]][beta[t0]]
                    for t in positions[1:]:
                        prod = prod * rows[alpha[t]][beta[t]]
                    if sign_a * sign_b > 0:
                        total = total + prod
                    else:
                        total = total - prod
            out_row.append(total)
        out.append(out_row)
    return Matrix(ring, out)


def preadjoint_via_minors(A: Matrix) -> Matrix:
    """A* computed entrywise as (-1)^(r+s) sdet of the (s, r)-deleted minor."""
    n = A.n
    if n == 1:
        raise ValueError("minor formula needs n >= 2")
    rows = []
    for r in range(n):
        row = []
        for s in range(n):
            value = symmetric_determinant(A.minor(s, r))
            row.append(value if (r + s) % 2 == 0 else -value)
        rows.append(row)
    return Matrix(A.ring, rows)


@dataclass(frozen=True)
class AdjointSequence:
    """The right (P_k) or left (Q_k) adjoint sequence of a matrix."""

    side: str
    base: Matrix
    matrices: tuple[Matrix, ...]


def _validate_side(side: str):
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def adjoint_sequence(A: Matrix, side: str, k: int) -> AdjointSequence:
    """P_1..P_k (right) or Q_1..Q_k (left), by the defining recursion."""
    _validate_side(side)
    if k < 1:
        raise ValueError("k must be at least 1")
    matrices = []
    running = A
    for _ in range(k):
        step = preadjoint(running)
        matrices.append(step)
        running = running * step if side == "right" else step * running
    return AdjointSequence(side=side, base=A, matrices=tuple(matrices))


def sequence_product(A: Matrix, side: str, k: int) -> Matrix:
    """The traced product: A P_1 ... P_k (right) or Q_k ... Q_1 A (left)."""
    _validate_side(side)
    if k < 1:
        raise ValueError("k must be at least 1")
    running = A
    for _ in range(k):
        step = preadjoint(running)
        running = running * step if side == "right" else step * running
    return running


def trace_of_product(X: Matrix, Y: Matrix):
    """tr(X Y) without forming the full product matrix."""
    X._check_compatible(Y)
    total = X.ring.zero
    for i in range(X.n):
        for j in range(X.n):
            total = total + X.rows[i][j] * Y.rows[j][i]
    return total


def right_determinant(A: Matrix, k: int = 1):
    """The k-th right determinant tr(A P_1 ... P_k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    running = A
    for _ in range(k - 1):
        running = running * preadjoint(running)
    return trace_of_product(running, preadjoint(running))


def left_determinant(A: Matrix, k: int = 1):
    """The k-th left determinant tr(Q_k ... Q_1 A)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    running = A
    for _ in range(k - 1):
        running = preadjoint(running) * running
    return trace_of_product(preadjoint(running), running)


@dataclass(frozen=True)
class CommutatorDefect:
    """Scalar and trace-zero defect with n A A* = scalar I + defect."""

    scalar: object
    defect: Matrix


def commutator_defect(A: Matrix, side: str) -> CommutatorDefect:
    """Split n A A* (right) or n A* A (left) into a scalar part plus defect.

    The defect has zero trace, and over the free algebra every entry lies
    in the additive commutator subgroup [R,R].
    """
    _validate_side(side)
    P = preadjoint(A)
    product = A * P if side == "right" else P * A
    scalar = product.trace()
    defect = product * A.n - Matrix.scalar(A.ring, A.n, scalar)
    if defect.trace() != A.ring.zero:
        raise ArithmeticError("defect trace is nonzero; determinant core is inconsistent")
    return CommutatorDefect(scalar=scalar, defect=defect)


def conjugate(A: Matrix, T) -> Matrix:
    """T^-1 A T for a unimodular integer matrix T acting by central scalars.

    T may be a Matrix over the integer ring or a plain list of int rows;
    its determinant must be +1 or -1 so the inverse is again integral.
    """
    ints = IntegerRing()
    if not isinstance(T, Matrix):
        T = Matrix(ints, T)
    if not isinstance(T.ring, IntegerRing):
        raise ValueError("conjugating matrix must have integer entries")
    if T.n != A.n:
        raise ValueError(f"dimension mismatch: conjugator is {T.n}x{T.n}, matrix {A.n}x{A.n}")
    det = commutative_det(T)
    if det not in (1, -1):
        raise ValueError(f"conjugating matrix must be unimodular, determinant is {det}")
    inverse = commutative_adj(T) * det
    ring = A.ring
    T_in = T.with_ring(ring, ring.from_int)
    Tinv_in = inverse.with_ring(ring, ring.from_int)
    return Tinv_in * A * T_in
