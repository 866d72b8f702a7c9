"""Dense square matrices over any ring satisfying the package's ring contract.

Matrices are immutable; products multiply the left factor's entries on the
left, which is the convention every identity in the package depends on.
The dimension is capped (default 6) because the symmetric determinant
enumerates (n!)^2 permutation pairs.

Also houses the commutative oracles (classical determinant and adjugate by
cofactor expansion) and the supermatrix parity predicate for Z2-graded rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .grassmann import GrassmannElem, graded_parts
from .rings import Ring

DIMENSION_CAP = 6


@dataclass(frozen=True)
class SupermatrixProfile:
    """Block split (n, t): rows/columns 1..t versus t+1..n."""

    n: int
    t: int

    def __post_init__(self):
        if not 1 <= self.t <= self.n - 1:
            raise ValueError(f"block split t={self.t} invalid for n={self.n}")


class Matrix:
    """Immutable n x n matrix over a fixed ring."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if not 1 <= n <= DIMENSION_CAP:
            raise ValueError(f"dimension {n} outside 1..{DIMENSION_CAP}")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.ring = ring
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> Matrix:
        zero = ring.zero
        return cls(ring, [[zero] * n for _ in range(n)])

    @classmethod
    def scalar(cls, ring: Ring, n: int, value) -> Matrix:
        zero = ring.zero
        return cls(ring, [[value if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def map_entries(self, fn: Callable) -> Matrix:
        return Matrix(self.ring, [[fn(e) for e in row] for row in self.rows])

    def with_ring(self, ring: Ring, fn: Callable) -> Matrix:
        """Entrywise image in another ring (fn embeds each entry)."""
        return Matrix(ring, [[fn(e) for e in row] for row in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        self._check_compatible(other)
        return Matrix(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_compatible(other)
        return Matrix(
            self.ring,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> Matrix:
        return self.map_entries(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, int):
            scale = self.ring.from_int(other)
            return self.map_entries(lambda e: scale * e)
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        n = self.n
        zero = self.ring.zero
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return Matrix(self.ring, rows)

    def __rmul__(self, other):
        if isinstance(other, int):
            scale = self.ring.from_int(other)
            return self.map_entries(lambda e: scale * e)
        return NotImplemented

    def __pow__(self, exponent: int) -> Matrix:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Matrix.identity(self.ring, self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def _check_compatible(self, other: Matrix):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        if self.ring != other.ring:
            raise ValueError("matrices live over different rings")

    def trace(self):
        acc = self.ring.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> Matrix:
        return Matrix(self.ring, list(zip(*self.rows)))

    def minor(self, row: int, col: int) -> Matrix:
        """Delete the given 0-based row and column."""
        if self.n == 1:
            raise ValueError("a 1x1 matrix has no minors")
        rows = [
            [e for j, e in enumerate(r) if j != col]
            for i, r in enumerate(self.rows)
            if i != row
        ]
        return Matrix(self.ring, rows)

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(e == zero for row in self.rows for e in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)

    def __repr__(self) -> str:
        return f"<Matrix {self.n}x{self.n} over {self.ring!r}>"


def is_supermatrix(A: Matrix, profile: SupermatrixProfile) -> bool:
    """True iff diagonal blocks are purely even and off-diagonal blocks purely odd.

    Zero entries count as homogeneous of either parity (zero is the one
    element of both graded parts).
    """
    if not A.ring.is_z2_graded:
        raise ValueError("supermatrix predicate requires a Z2-graded ring")
    if profile.n != A.n:
        raise ValueError(f"profile is for n={profile.n}, matrix has n={A.n}")
    t = profile.t
    for i in range(A.n):
        for j in range(A.n):
            entry = A.rows[i][j]
            if not isinstance(entry, GrassmannElem):
                raise ValueError("graded parity check requires exterior-algebra entries")
            even, odd = graded_parts(entry)
            diagonal_block = (i < t) == (j < t)
            bad = odd if diagonal_block else even
            if not bad.is_zero():
                return False
    return True


def commutative_det(A: Matrix):
    """Classical determinant by cofactor expansion; commutative rings only."""
    if not A.ring.is_commutative:
        raise ValueError("classical determinant requires a commutative ring")
    return _det_recursive(A)


def _det_recursive(A: Matrix):
    if A.n == 1:
        return A.rows[0][0]
    total = A.ring.zero
    for j in range(A.n):
        cofactor = A.rows[0][j] * _det_recursive(A.minor(0, j))
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


def commutative_adj(A: Matrix) -> Matrix:
    """Classical adjugate (transposed cofactor matrix); commutative rings only."""
    if not A.ring.is_commutative:
        raise ValueError("classical adjugate requires a commutative ring")
    if A.n == 1:
        return Matrix(A.ring, [[A.ring.one]])
    rows = []
    for i in range(A.n):
        row = []
        for j in range(A.n):
            det = _det_recursive(A.minor(j, i))
            row.append(det if (i + j) % 2 == 0 else -det)
        rows.append(row)
    return Matrix(A.ring, rows)
