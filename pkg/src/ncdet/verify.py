"""Mechanical verification suites, one per theorem of the determinant theory.

Every suite runs a family of exact symbolic identity checks at desk scale
and reports one pass/fail result per check.  "Generic" matrices have
distinct free noncommuting generators as entries, so an identity verified
there holds under every specialization; randomized checks draw all their
randomness from one seeded generator, making reports reproducible.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .charpoly import (
    CentralPoly,
    PolynomialRing,
    cayley_hamilton_witness,
    characteristic_polynomial,
    newton_sdet_2,
    newton_sdet_3,
    scalar_cayley_hamilton_check,
    standard_polynomial_4,
)
from .determinants import (
    commutator_defect,
    conjugate,
    left_determinant,
    preadjoint,
    preadjoint_via_minors,
    right_determinant,
    sequence_product,
    symmetric_determinant,
    trace_of_product,
)
from .freealg import FreeAlgebra, in_commutator_span
from .grassmann import GrassmannAlgebra, graded_parts
from .matrices import (
    Matrix,
    SupermatrixProfile,
    commutative_adj,
    commutative_det,
    is_supermatrix,
)
from .rings import IntegerRing


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    elapsed_ms: float
    detail: str = ""

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.elapsed_ms:.0f} ms){suffix}"


@dataclass
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def elapsed_ms(self) -> float:
        return sum(c.elapsed_ms for c in self.checks)

    def __str__(self) -> str:
        lines = [str(c) for c in self.checks]
        verdict = "all checks passed" if self.ok else "FAILURES PRESENT"
        lines.append(f"suite {self.suite}: {verdict} ({self.elapsed_ms:.0f} ms)")
        return "\n".join(lines)


@dataclass(frozen=True)
class VerifyOptions:
    n: int | None = None
    k: int | None = None
    t: int | None = None
    rank: int | None = None
    trials: int | None = None
    seed: int = 42

    def sizes(self, default):
        return (self.n,) if self.n is not None else default

    def ks(self, default):
        return (self.k,) if self.k is not None else default

    def splits(self, default):
        return (self.t,) if self.t is not None else default

    def get_rank(self, default):
        return self.rank if self.rank is not None else default

    def get_trials(self, default):
        return self.trials if self.trials is not None else default


def _run(checks: list[CheckResult], name: str, fn):
    start = time.perf_counter()
    try:
        outcome = fn()
        if isinstance(outcome, tuple):
            passed, detail = outcome
        else:
            passed, detail = outcome, ""
    except Exception as exc:  # a crashed check is a failed check
        passed, detail = False, f"error: {exc}"
    elapsed = (time.perf_counter() - start) * 1000.0
    checks.append(CheckResult(name=name, passed=bool(passed), elapsed_ms=elapsed, detail=detail))


# ---------------------------------------------------------------- fixtures

GENERIC_LETTERS = {
    1: ("a",),
    2: ("a", "b", "c", "d"),
    3: ("a", "b", "c", "d", "e", "f", "g", "h", "p"),
}


def generic_names(n: int) -> tuple[str, ...]:
    if n in GENERIC_LETTERS:
        return GENERIC_LETTERS[n]
    return tuple(f"a{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))


def generic_matrix(n: int) -> tuple[FreeAlgebra, Matrix]:
    """An n x n matrix whose entries are n^2 distinct free generators."""
    names = generic_names(n)
    algebra = FreeAlgebra(names)
    gens = iter(algebra.gens())
    rows = [[next(gens) for _ in range(n)] for _ in range(n)]
    return algebra, Matrix(algebra, rows)


def random_integer_matrix(rng: random.Random, n: int) -> Matrix:
    ring = IntegerRing()
    return Matrix(ring, [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])


def random_grassmann_matrix(
    algebra: GrassmannAlgebra, rng: random.Random, n: int, max_terms: int = 2
) -> Matrix:
    """Entries mix a constant with sparse wedge terms, so products of many
    entries stay nonzero and the scalar-matrix checks are not vacuous."""
    rows = [
        [
            algebra.from_int(rng.randint(-3, 3))
            + algebra.random_element(rng, max_terms=max_terms)
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return Matrix(algebra, rows)


def random_supermatrix(
    algebra: GrassmannAlgebra, rng: random.Random, n: int, t: int, max_terms: int = 2
) -> Matrix:
    """Random (n, t) supermatrix: even diagonal blocks, odd off-diagonal blocks.

    Diagonal-block entries carry a constant part (constants are even), which
    keeps determinants and characteristic polynomials away from zero.
    """
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            parity = 0 if (i < t) == (j < t) else 1
            entry = algebra.random_element(rng, max_terms=max_terms, parity=parity)
            if parity == 0:
                entry = entry + algebra.from_int(rng.randint(-3, 3))
            row.append(entry)
        rows.append(row)
    return Matrix(algebra, rows)


def unimodular_conjugators(n: int) -> tuple[Matrix, ...]:
    """Three fixed unimodular integer matrices: two transvections and a permutation."""
    ring = IntegerRing()

    def transvection(p, q):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        rows[p][q] = 1
        return Matrix(ring, rows)

    shift = Matrix(ring, [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)])
    return (transvection(0, 1), transvection(n - 1, 0), shift)


def scalar_matrix_equal(M: Matrix, value) -> bool:
    """M equals value * I: zero off-diagonal, every diagonal entry equal to value."""
    zero = M.ring.zero
    for i in range(M.n):
        for j in range(M.n):
            expected = value if i == j else zero
            if M.rows[i][j] != expected:
                return False
    return True


def _even(x) -> bool:
    return graded_parts(x)[1].is_zero()


# ------------------------------------------------------------------ suites


def _suite_thm2_1(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3)):
        _, A = generic_matrix(n)
        trace = A.trace()
        pre = preadjoint(A)
        dets = {}
        for k in opt.ks((1, 2)):
            dets[k] = (right_determinant(A, k), left_determinant(A, k))
        for idx, T in enumerate(unimodular_conjugators(n), start=1):
            conj = conjugate(A, T)
            _run(checks, f"thm2_1 n={n} T{idx}: trace invariant", lambda c=conj, e=trace: c.trace() == e)
            _run(
                checks,
                f"thm2_1 n={n} T{idx}: (T^-1 A T)* = T^-1 A* T",
                lambda c=conj, e=pre, T=T: preadjoint(c) == conjugate(e, T),
            )
            for k, (rd, ld) in dets.items():
                _run(
                    checks,
                    f"thm2_1 n={n} T{idx}: rdet_{k} invariant",
                    lambda c=conj, k=k, e=rd: right_determinant(c, k) == e,
                )
                _run(
                    checks,
                    f"thm2_1 n={n} T{idx}: ldet_{k} invariant",
                    lambda c=conj, k=k, e=ld: left_determinant(c, k) == e,
                )
    return checks


def _suite_thm2_2(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3)):
        _, A = generic_matrix(n)
        sdet = symmetric_determinant(A)
        for side in ("right", "left"):
            result = commutator_defect(A, side)
            _run(
                checks,
                f"thm2_2 n={n} {side}: scalar part is sdet",
                lambda r=result, e=sdet: r.scalar == e,
            )
            _run(
                checks,
                f"thm2_2 n={n} {side}: defect has zero trace",
                lambda r=result: r.defect.trace() == r.defect.ring.zero,
            )
            _run(
                checks,
                f"thm2_2 n={n} {side}: defect entries lie in [R,R]",
                lambda r=result: all(
                    in_commutator_span(e) for row in r.defect.rows for e in row
                ),
            )
    return checks


def _suite_thm2_3(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra = GrassmannAlgebra(opt.get_rank(6))
    trials = opt.get_trials(20)
    rng = random.Random(opt.seed)
    for n in opt.sizes((2, 3)):
        def all_trials(n=n):
            for _ in range(trials):
                A = random_grassmann_matrix(algebra, rng, n)
                right = sequence_product(A, "right", 2)
                if not scalar_matrix_equal(right * n, right.trace()):
                    return False, "n A P1 P2 is not rdet_2(A) I"
                left = sequence_product(A, "left", 2)
                if not scalar_matrix_equal(left * n, left.trace()):
                    return False, "n Q2 Q1 A is not ldet_2(A) I"
            return True, f"{trials} trials"

        _run(checks, f"thm2_3 n={n} rank={algebra.rank}: k=2 products are scalar", all_trials)
    return checks


def _shape_trials(opt: VerifyOptions, shapes, default_total=20):
    trials = opt.get_trials(default_total)
    per = max(1, math.ceil(trials / len(shapes)))
    budget = trials
    for shape in shapes:
        count = min(per, budget)
        if count <= 0:
            break
        budget -= count
        yield shape, count


def _supermatrix_shapes(opt: VerifyOptions):
    shapes = []
    for n in opt.sizes((2, 3)):
        for t in opt.splits(tuple(range(1, n))):
            if 1 <= t <= n - 1:
                shapes.append((n, t))
    if not shapes:
        raise ValueError("no valid (n, t) supermatrix shapes for the requested sizes")
    return shapes


def _suite_thm2_4(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra = GrassmannAlgebra(opt.get_rank(6))
    rng = random.Random(opt.seed)
    for (n, t), count in _shape_trials(opt, _supermatrix_shapes(opt)):
        profile = SupermatrixProfile(n=n, t=t)

        def all_trials(n=n, t=t, count=count, profile=profile):
            for _ in range(count):
                A = random_supermatrix(algebra, rng, n, t)
                if not is_supermatrix(A, profile):
                    return False, "fixture is not a supermatrix"
                if not is_supermatrix(preadjoint(A), profile):
                    return False, "preadjoint left the supermatrix ring"
                for k in opt.ks((1, 2)):
                    if not _even(right_determinant(A, k)):
                        return False, f"rdet_{k} has an odd part"
                    if not _even(left_determinant(A, k)):
                        return False, f"ldet_{k} has an odd part"
            return True, f"{count} trials"

        _run(checks, f"thm2_4 n={n} t={t}: A* super, rdet/ldet even", all_trials)
    return checks


def _suite_thm2_5(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra = GrassmannAlgebra(opt.get_rank(6))
    rng = random.Random(opt.seed)
    for (n, t), count in _shape_trials(opt, _supermatrix_shapes(opt)):
        def all_trials(n=n, t=t, count=count):
            for _ in range(count):
                A = random_supermatrix(algebra, rng, n, t)
                for k in opt.ks((1, 2)):
                    for side in ("right", "left"):
                        poly = characteristic_polynomial(A, side, k)
                        if not all(_even(c) for c in poly.coefficients):
                            return False, f"{side} charpoly k={k} has odd coefficients"
            return True, f"{count} trials"

        _run(checks, f"thm2_5 n={n} t={t}: charpoly coefficients even", all_trials)
    return checks


def _witness_identities(A: Matrix, witness) -> tuple[bool, bool]:
    ring = A.ring
    n = A.n
    right_sum = Matrix.zeros(ring, n)
    left_sum = Matrix.zeros(ring, n)
    power = Matrix.identity(ring, n)
    for i in range(n + 1):
        lam = Matrix.scalar(ring, n, witness.lambdas[i])
        right_sum = right_sum + power * (lam + witness.right_defects[i])
        left_sum = left_sum + (lam + witness.left_defects[i]) * power
        if i < n:
            power = power * A
    return right_sum.is_zero(), left_sum.is_zero()


def _suite_thm2_6(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3)):
        _, A = generic_matrix(n)
        witness = cayley_hamilton_witness(A)
        right_ok, left_ok = _witness_identities(A, witness)
        _run(checks, f"thm2_6 n={n}: right CH identity vanishes", lambda ok=right_ok: ok)
        _run(checks, f"thm2_6 n={n}: left CH identity vanishes", lambda ok=left_ok: ok)
        _run(
            checks,
            f"thm2_6 n={n}: leading coefficient is n!",
            lambda w=witness, n=n, A=A: w.lambdas[n] == A.ring.from_int(math.factorial(n)),
        )
        _run(
            checks,
            f"thm2_6 n={n}: defects have zero trace",
            lambda w=witness, A=A: all(
                d.trace() == A.ring.zero for d in (*w.right_defects, *w.left_defects)
            ),
        )
        _run(
            checks,
            f"thm2_6 n={n}: defect entries lie in [R,R]",
            lambda w=witness: all(
                in_commutator_span(e)
                for d in (*w.right_defects, *w.left_defects)
                for row in d.rows
                for e in row
            ),
        )
    return checks


def _suite_thm2_7(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra = GrassmannAlgebra(opt.get_rank(4))
    trials = opt.get_trials(20)
    rng = random.Random(opt.seed)

    def all_trials():
        for _ in range(trials):
            A = random_grassmann_matrix(algebra, rng, 2)
            if not scalar_cayley_hamilton_check(A, k=opt.k or 2):
                return False, "scalar CH identity failed"
        return True, f"{trials} trials"

    _run(checks, f"thm2_7 n=2 rank={algebra.rank}: scalar CH identities", all_trials)
    return checks


def _suite_thm3_1(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3, 4)):
        _, A = generic_matrix(n)
        pre = preadjoint(A)
        sdet = symmetric_determinant(A)
        _run(
            checks,
            f"thm3_1 n={n}: tr(A A*) = sdet(A)",
            lambda A=A, pre=pre, e=sdet: trace_of_product(A, pre) == e,
        )
        _run(
            checks,
            f"thm3_1 n={n}: tr(A* A) = sdet(A)",
            lambda A=A, pre=pre, e=sdet: trace_of_product(pre, A) == e,
        )
    return checks


def _suite_cor3_2(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3)):
        _, A = generic_matrix(n)
        _run(
            checks,
            f"cor3_2 n={n}: p_A,1 = q_A,1",
            lambda A=A: characteristic_polynomial(A, "right", 1)
            == characteristic_polynomial(A, "left", 1),
        )
    return checks


def _suite_prop3_3(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra, A = generic_matrix(2)
    a, b, c, d = algebra.gens()

    def check():
        difference = right_determinant(A, 2) - left_determinant(A, 2)
        return difference == standard_polynomial_4(a, b, c, d), "24-term residual is exactly zero"

    _run(checks, "prop3_3: rdet_2 - ldet_2 = S4(entries)", check)
    return checks


def _suite_cor3_4(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra, A = generic_matrix(2)
    a, b, c, d = algebra.gens()

    def check():
        difference = characteristic_polynomial(A, "right", 2) - characteristic_polynomial(A, "left", 2)
        expected = CentralPoly(PolynomialRing(algebra), [standard_polynomial_4(a, b, c, d)])
        return difference == expected, "z-degree >= 1 coefficients cancel"

    _run(checks, "cor3_4: p_A,2 - q_A,2 is the constant S4", check)
    return checks


def _suite_prop4_1(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra, A = generic_matrix(2)
    a, b, c, d = algebra.gens()
    _run(
        checks,
        "prop4_1: tr^2 - tr(A^2) = sdet (generic 2x2)",
        lambda: newton_sdet_2(A) == symmetric_determinant(A),
    )
    _run(
        checks,
        "prop4_1: sdet(2x2) = ad + da - bc - cb",
        lambda: symmetric_determinant(A) == a * d + d * a - b * c - c * b,
    )
    return checks


def _suite_thm4_2(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    _, A = generic_matrix(3)
    _run(
        checks,
        "thm4_2: six-term trace formula = sdet (generic 3x3)",
        lambda: (newton_sdet_3(A) == symmetric_determinant(A), "36-term residual is exactly zero"),
    )
    return checks


def _suite_rem4_3(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for n in opt.sizes((2, 3, 4)):
        _, A = generic_matrix(n)

        def squares(A=A):
            T = A.transpose()
            return (T * T).trace() == (A * A).trace()

        _run(checks, f"rem4_3 n={n}: tr((A^T)^2) = tr(A^2)", squares)
    _, A2 = generic_matrix(2)

    def cubes():
        T = A2.transpose()
        difference = (T * T * T).trace() - (A2 * A2 * A2).trace()
        return not difference.is_zero(), f"tr((A^T)^3) - tr(A^3) = {difference}"

    _run(checks, "rem4_3: tr((A^T)^3) != tr(A^3) (generic 2x2)", cubes)
    return checks


def _suite_thm4_4(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra, A = generic_matrix(3)

    def check():
        poly_ring = PolynomialRing(algebra)
        t = A.trace()
        t2 = (A * A).trace()
        expected = CentralPoly(
            poly_ring,
            [
                -symmetric_determinant(A),
                (t * t - t2) * 3,
                t * (-6),
                algebra.from_int(6),
            ],
        )
        return characteristic_polynomial(A, "right", 1) == expected

    _run(checks, "thm4_4: p_A,1 = 6z^3 - 6tr z^2 + 3(tr^2 - tr A^2) z - sdet", check)
    return checks


def _suite_cor4_5(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    algebra, A = generic_matrix(3)
    witness = cayley_hamilton_witness(A)
    t = A.trace()
    t2 = (A * A).trace()
    expected = (
        -symmetric_determinant(A),
        (t * t - t2) * 3,
        t * (-6),
        algebra.from_int(6),
    )
    _run(
        checks,
        "cor4_5: lambda coefficients match the closed form",
        lambda: tuple(witness.lambdas) == expected,
    )
    right_ok, left_ok = _witness_identities(A, witness)
    _run(checks, "cor4_5: coefficient-on-the-right identity vanishes", lambda ok=right_ok: ok)
    _run(checks, "cor4_5: coefficient-on-the-left identity vanishes", lambda ok=left_ok: ok)
    return checks


def _suite_commutative_collapse(opt: VerifyOptions) -> list[CheckResult]:
    checks: list[CheckResult] = []
    trials = opt.get_trials(20)
    rng = random.Random(opt.seed)
    for n in opt.sizes((2, 3, 4)):
        def all_trials(n=n):
            for _ in range(trials):
                A = random_integer_matrix(rng, n)
                det = commutative_det(A)
                if symmetric_determinant(A) != math.factorial(n) * det:
                    return False, "sdet != n! det"
                adj = commutative_adj(A)
                if preadjoint(A) != adj * math.factorial(n - 1):
                    return False, "A* != (n-1)! adj(A)"
                if preadjoint_via_minors(A) != adj * math.factorial(n - 1):
                    return False, "minor-formula A* != (n-1)! adj(A)"
                if n <= 3 and right_determinant(A, 1) != math.factorial(n) * det:
                    return False, "rdet_1 != n! det"
                if n == 2 and right_determinant(A, 2) != 2 * det * det:
                    return False, "rdet_2 != 2 det^2"
                t, t2 = A.trace(), (A * A).trace()
                middle = (A * Matrix.scalar(A.ring, n, t) * A).trace()
                if not (t * t2 == middle == t2 * t):
                    return False, "trace insertions disagree over a commutative ring"
                T = A.transpose()
                if (T * T * T).trace() != (A * A * A).trace():
                    return False, "tr((A^T)^3) != tr(A^3) over a commutative ring"
            return True, f"{trials} trials"

        _run(checks, f"commutative_collapse n={n}", all_trials)
    return checks


SUITES = {
    "thm2_1": _suite_thm2_1,
    "thm2_2": _suite_thm2_2,
    "thm2_3": _suite_thm2_3,
    "thm2_4": _suite_thm2_4,
    "thm2_5": _suite_thm2_5,
    "thm2_6": _suite_thm2_6,
    "thm2_7": _suite_thm2_7,
    "thm3_1": _suite_thm3_1,
    "cor3_2": _suite_cor3_2,
    "prop3_3": _suite_prop3_3,
    "cor3_4": _suite_cor3_4,
    "prop4_1": _suite_prop4_1,
    "thm4_2": _suite_thm4_2,
    "rem4_3": _suite_rem4_3,
    "thm4_4": _suite_thm4_4,
    "cor4_5": _suite_cor4_5,
    "commutative_collapse": _suite_commutative_collapse,
}


def run_verify(
    suite: str,
    n: int | None = None,
    k: int | None = None,
    t: int | None = None,
    rank: int | None = None,
    trials: int | None = None,
    seed: int = 42,
) -> VerifyReport:
    """Run one named suite (or "all") and return its report.

    Out-of-range sizes are input errors (raised), not check failures.
    """
    from .grassmann import MAX_RANK
    from .matrices import DIMENSION_CAP

    if n is not None and not 1 <= n <= DIMENSION_CAP:
        raise ValueError(f"n={n} is outside the supported range 1..{DIMENSION_CAP}")
    if k is not None and k < 1:
        raise ValueError("k must be at least 1")
    if t is not None and t < 1:
        raise ValueError("t must be at least 1")
    if rank is not None and not 0 <= rank <= MAX_RANK:
        raise ValueError(f"rank={rank} is outside the supported range 0..{MAX_RANK}")
    if trials is not None and trials < 0:
        raise ValueError("trials must be nonnegative")
    options = VerifyOptions(n=n, k=k, t=t, rank=rank, trials=trials, seed=seed)
    if suite == "all":
        report = VerifyReport(suite="all")
        for name, fn in SUITES.items():
            report.checks.extend(fn(options))
        return report
    if suite not in SUITES:
        known = ", ".join((*SUITES, "all"))
        raise ValueError(f"unknown suite {suite!r}; expected one of: {known}")
    return VerifyReport(suite=suite, checks=SUITES[suite](options))
