"""Polynomials in one central indeterminate, characteristic polynomials,
Cayley--Hamilton witnesses, the degree-four standard polynomial, and the
symmetric Newton trace formulas for 2x2 and 3x3 matrices.

A ``CentralPoly`` is a coefficient list over any ring of the package;
the indeterminate z commutes with everything, so the product of two
polynomials multiplies coefficients in the base ring with the left
factor's coefficient on the left.  ``PolynomialRing`` implements the ring
contract, which lets the whole matrix/determinant machinery run unchanged
over R[z]: the k-th characteristic polynomial of A is simply the k-th
right (or left) determinant of zI - A computed there.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .determinants import left_determinant, preadjoint, right_determinant
from .freealg import FreeAlgebra, in_commutator_span
from .grassmann import GrassmannAlgebra
from .matrices import Matrix
from .perms import signed_permutations
from .rings import Ring


class PolynomialRing(Ring):
    """R[z] for a base ring R; z is central."""

    def __init__(self, base: Ring):
        self.base = base

    @property
    def is_commutative(self) -> bool:  # type: ignore[override]
        return self.base.is_commutative

    @property
    def zero(self) -> CentralPoly:
        return CentralPoly._raw(self, ())

    @property
    def one(self) -> CentralPoly:
        return CentralPoly._raw(self, (self.base.one,))

    @property
    def z(self) -> CentralPoly:
        return CentralPoly._raw(self, (self.base.zero, self.base.one))

    def from_int(self, k: int) -> CentralPoly:
        return CentralPoly(self, [self.base.from_int(k)])

    def from_base(self, value, degree: int = 0) -> CentralPoly:
        """The monomial value * z^degree."""
        return CentralPoly(self, [self.base.zero] * degree + [value])

    def random_element(self, rng: random.Random, max_degree: int = 2) -> CentralPoly:
        coeffs = [self.base.random_element(rng) for _ in range(rng.randint(1, max_degree + 1))]
        return CentralPoly(self, coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialRing) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("PolynomialRing", self.base))

    def __repr__(self) -> str:
        return f"PolynomialRing({self.base!r})"


class CentralPoly:
    """Immutable polynomial in a central z with coefficients in a base ring."""

    __slots__ = ("ring", "_coeffs")

    def __init__(self, ring: PolynomialRing, coeffs: Sequence):
        zero = ring.base.zero
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.ring = ring
        self._coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, ring: PolynomialRing, coeffs: tuple) -> CentralPoly:
        self = object.__new__(cls)
        self.ring = ring
        self._coeffs = coeffs
        return self

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def degree(self) -> int:
        """Highest z-degree with nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, i: int):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self.ring.base.zero

    def is_zero(self) -> bool:
        return not self._coeffs

    def _coerce(self, other) -> CentralPoly | None:
        if isinstance(other, CentralPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials live over different base rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other) -> CentralPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        coeffs = [self.coeff(i) + other.coeff(i) for i in range(size)]
        return CentralPoly(self.ring, coeffs)

    __radd__ = __add__

    def __neg__(self) -> CentralPoly:
        return CentralPoly._raw(self.ring, tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> CentralPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CentralPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> CentralPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.ring.zero
        zero = self.ring.base.zero
        out = [zero] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return CentralPoly(self.ring, out)

    def __rmul__(self, other) -> CentralPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int) -> CentralPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return (
            isinstance(other, CentralPoly)
            and self.ring == other.ring
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring, self._coeffs))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c == self.ring.base.zero:
                continue
            text = str(c)
            negative = False
            if text.startswith("-") and "-" not in str(-c):
                negative = True
                text = str(-c)
            if (" + " in text) or (" - " in text):
                text = f"({text})"
            if d == 0:
                body = text
            else:
                zpart = "z" if d == 1 else f"z^{d}"
                body = zpart if text == "1" else f"{text}*{zpart}"
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        rendered = f"-{body}" if sign == "-" else body
        for sign, body in pieces[1:]:
            rendered += f" {sign} {body}"
        return rendered

    def __repr__(self) -> str:
        return f"<CentralPoly {self}>"


def char_matrix(A: Matrix) -> Matrix:
    """zI - A as a matrix over R[z]."""
    ring = PolynomialRing(A.ring)
    zero = A.ring.zero
    one = A.ring.one
    rows = []
    for i in range(A.n):
        row = []
        for j in range(A.n):
            entry = A.rows[i][j]
            if i == j:
                row.append(CentralPoly(ring, [-entry, one]))
            else:
                row.append(CentralPoly(ring, [-entry, zero]))
        rows.append(row)
    return Matrix(ring, rows)


def characteristic_polynomial(A: Matrix, side: str = "right", k: int = 1) -> CentralPoly:
    """The k-th right/left determinant of zI - A, computed in R[z]."""
    B = char_matrix(A)
    if side == "right":
        return right_determinant(B, k)
    if side == "left":
        return left_determinant(B, k)
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def matrix_poly_coefficients(M: Matrix) -> list[Matrix]:
    """Degree slices of a matrix over R[z]: a list of matrices over R."""
    ring = M.ring
    if not isinstance(ring, PolynomialRing):
        raise ValueError("expected a matrix over a polynomial ring")
    top = max((entry.degree() for row in M.rows for entry in row), default=-1)
    slices = []
    for d in range(top + 1):
        slices.append(Matrix(ring.base, [[entry.coeff(d) for entry in row] for row in M.rows]))
    return slices


def matrix_from_coefficients(ring: PolynomialRing, slices: Sequence[Matrix]) -> Matrix:
    """Inverse of matrix_poly_coefficients."""
    if not slices:
        raise ValueError("need at least one coefficient matrix")
    n = slices[0].n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(CentralPoly(ring, [s.rows[i][j] for s in slices]))
        rows.append(row)
    return Matrix(ring, rows)


@dataclass(frozen=True)
class CHWitness:
    """Coefficient data of the matrix-coefficient Cayley--Hamilton identities.

    lambdas holds the coefficients of the first characteristic polynomial
    (lambdas[n] is n! as a central scalar); right_defects and left_defects
    are the trace-zero matrices C_i and D_i with

        sum_i A^i (lambdas[i] I + C_i) = 0
        sum_i (lambdas[i] I + D_i) A^i = 0.
    """

    lambdas: tuple
    right_defects: tuple[Matrix, ...]
    left_defects: tuple[Matrix, ...]


def cayley_hamilton_witness(A: Matrix) -> CHWitness:
    """Extract lambdas, C_i and D_i, verifying both identities exactly."""
    n = A.n
    ring = A.ring
    if isinstance(ring, FreeAlgebra) and n > 3:
        raise ValueError("generic free-algebra witnesses are limited to n <= 3")
    B = char_matrix(A)
    P = preadjoint(B)

    right_product = (B * P) * n
    p = (B * P).trace()
    left_product = (P * B) * n
    q = (P * B).trace()
    if p != q:
        raise ArithmeticError("first right and left characteristic polynomials differ")

    lambdas = tuple(p.coeff(i) for i in range(n + 1))
    identity = Matrix.identity(ring, n)

    right_slices = _padded_slices(right_product, n)
    left_slices = _padded_slices(left_product, n)
    right_defects = tuple(
        right_slices[i] - Matrix.scalar(ring, n, lambdas[i]) for i in range(n + 1)
    )
    left_defects = tuple(
        left_slices[i] - Matrix.scalar(ring, n, lambdas[i]) for i in range(n + 1)
    )

    for defect in (*right_defects, *left_defects):
        if defect.trace() != ring.zero:
            raise ArithmeticError("defect matrix has nonzero trace")
        if isinstance(ring, FreeAlgebra):
            if not all(in_commutator_span(e) for row in defect.rows for e in row):
                raise ArithmeticError("defect entry escapes the commutator subgroup")

    power = identity
    right_sum = Matrix.zeros(ring, n)
    left_sum = Matrix.zeros(ring, n)
    for i in range(n + 1):
        right_sum = right_sum + power * right_slices[i]
        left_sum = left_sum + left_slices[i] * power
        if i < n:
            power = power * A
    if not right_sum.is_zero() or not left_sum.is_zero():
        raise ArithmeticError("Cayley-Hamilton identity failed to vanish")

    return CHWitness(lambdas=lambdas, right_defects=right_defects, left_defects=left_defects)


def _padded_slices(M: Matrix, degree: int) -> list[Matrix]:
    slices = matrix_poly_coefficients(M)
    base = M.ring.base
    n = M.n
    while len(slices) < degree + 1:
        slices.append(Matrix.zeros(base, n))
    return slices


def scalar_leading_coefficient(n: int, k: int) -> int:
    """n ((n-1)!)^(1 + n + ... + n^(k-1)), the top coefficient of p_{A,k}."""
    exponent = sum(n**i for i in range(k))
    return n * math.factorial(n - 1) ** exponent


def scalar_ch_residuals(A: Matrix, k: int = 2) -> dict[str, object]:
    """Residual matrices of the scalar-coefficient CH substitutions.

    ``right`` substitutes A into p_{A,k} with coefficients multiplied on
    the right of each power, ``left`` substitutes into q_{A,k} with
    coefficients on the left; the ``*_swapped`` entries are the opposite
    readings, kept so a failure can report both.
    """
    ring = A.ring
    n = A.n
    p = characteristic_polynomial(A, "right", k)
    q = characteristic_polynomial(A, "left", k)
    top = n**k
    right = Matrix.zeros(ring, n)
    right_swapped = Matrix.zeros(ring, n)
    left = Matrix.zeros(ring, n)
    left_swapped = Matrix.zeros(ring, n)
    power = Matrix.identity(ring, n)
    for i in range(top + 1):
        lam = Matrix.scalar(ring, n, p.coeff(i))
        mu = Matrix.scalar(ring, n, q.coeff(i))
        right = right + power * lam
        right_swapped = right_swapped + lam * power
        left = left + mu * power
        left_swapped = left_swapped + power * mu
        if i < top:
            power = power * A
    return {
        "right": right,
        "right_swapped": right_swapped,
        "left": left,
        "left_swapped": left_swapped,
        "leading": p.coeff(top),
    }


def scalar_cayley_hamilton_check(A: Matrix, k: int = 2, allow_n3: bool = False) -> bool:
    """Scalar-coefficient Cayley--Hamilton over a Lie-nilpotent ring of index 2.

    Requires exterior-algebra entries and n = 2 (n = 3 is accepted only
    behind allow_n3; the computation is exact but large).  Also checks the
    stated leading coefficient of p_{A,k}.
    """
    if not isinstance(A.ring, GrassmannAlgebra):
        raise ValueError("scalar CH check runs over the exterior algebra")
    if A.n != 2 and not (A.n == 3 and allow_n3):
        raise ValueError("scalar CH check supports n = 2 (n = 3 behind allow_n3)")
    residuals = scalar_ch_residuals(A, k)
    expected = A.ring.from_int(scalar_leading_coefficient(A.n, k))
    if residuals["leading"] != expected:
        return False
    return residuals["right"].is_zero() and residuals["left"].is_zero()


def standard_polynomial_4(x1, x2, x3, x4):
    """S_4: the signed sum of all 24 orderings of four ring elements."""
    items = (x1, x2, x3, x4)
    total = None
    for images, sign in signed_permutations(4):
        prod = items[images[0]]
        for t in images[1:]:
            prod = prod * items[t]
        term = prod if sign > 0 else -prod
        total = term if total is None else total + term
    return total


def newton_sdet_2(A: Matrix):
    """tr(A)^2 - tr(A^2); equals the symmetric determinant for n = 2."""
    if A.n != 2:
        raise ValueError("this trace formula is specific to 2x2 matrices")
    t = A.trace()
    return t * t - (A * A).trace()


def newton_sdet_3(A: Matrix):
    """The six-term 3x3 trace formula for the symmetric determinant.

    tr^3(A) - tr(A) tr(A^2) - tr(A tr(A) A) - tr(A^2) tr(A)
            + tr(A^3) + tr((A^T)^3)

    evaluated exactly as written: the inserted scalar in the middle term
    sits between the two factors of A, and the factor order of every
    product is preserved.
    """
    if A.n != 3:
        raise ValueError("this trace formula is specific to 3x3 matrices")
    t = A.trace()
    A2 = A * A
    t2 = A2.trace()
    transposed = A.transpose()
    middle = (A * Matrix.scalar(A.ring, 3, t) * A).trace()
    return (
        t * t * t
        - t * t2
        - middle
        - t2 * t
        + (A2 * A).trace()
        + (transposed * transposed * transposed).trace()
    )
