"""The four sequence bases, exact change-of-basis matrices, and decomposition.

For an order n the package works inside the span of the degree-m canonical
monomial family (m = 2n or 2n - 1) and builds four bases out of shifted
sequence members times powers of x:

    BU(n)     = (x^(n-k) U_{n+k+1})  k = 0..n      inside degree 2n
    BV(n)     = (x^(n-k) V_{n+k})    k = 0..n      inside degree 2n
    BUstar(n) = (x^(n-k) U_{n+k})    k = 0..n-1    inside degree 2n-1
    BVstar(n) = (x^(n-k) V_{n+k-1})  k = 0..n-1    inside degree 2n-1

Their coordinate matrices over the canonical family are square with exact
determinant 1 (BU, BUstar) or 2 (BV, BVstar), so ``decompose`` can solve for
the coordinates of any member of the ambient space.  That solver is the
independent oracle against which the closed-form coefficient families are
checked.

All linear algebra is exact: fraction-free (Bareiss) elimination over
int/Fraction entries, first-nonzero pivoting only, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionError, DomainError, SingularMatrixError
from .poly import BivarPoly, Monomial, Rational, as_rational
from .report import CheckResult
from .sequences import u_poly, v_poly


class BasisFamily(Enum):
    CANONICAL = "C"
    BU = "BU"
    BV = "BV"
    BU_STAR = "BUstar"
    BV_STAR = "BVstar"


_STARRED = (BasisFamily.BU_STAR, BasisFamily.BV_STAR)

EXPECTED_DETERMINANTS = {
    BasisFamily.BU: 1,
    BasisFamily.BV: 2,
    BasisFamily.BU_STAR: 1,
    BasisFamily.BV_STAR: 2,
}


@dataclass(frozen=True)
class BasisSpec:
    """One concrete basis: a family plus its order index.

    For CANONICAL, ``n`` is the degree index of the monomial family itself.
    """

    family: BasisFamily
    n: int


def ambient_degree(spec: BasisSpec) -> int:
    """Degree of the canonical family the basis vectors live in."""
    if spec.family is BasisFamily.CANONICAL:
        return spec.n
    if spec.family in _STARRED:
        return 2 * spec.n - 1
    return 2 * spec.n


def build_basis(spec: BasisSpec) -> list[BivarPoly]:
    """The basis vectors in ascending k order."""
    family, n = spec.family, spec.n
    if family is BasisFamily.CANONICAL:
        if n < 0:
            raise DomainError(f"canonical degree index must be >= 0, got {n}")
        return [BivarPoly.monomial(n - 2 * k, k) for k in range(n // 2 + 1)]
    if family in _STARRED:
        if n < 1:
            raise DomainError(f"{family.value} is defined for n >= 1, got {n}")
        count = n
        member: Callable[[int], BivarPoly] = (
            (lambda k: u_poly(n + k)) if family is BasisFamily.BU_STAR else (lambda k: v_poly(n + k - 1))
        )
    else:
        if n < 0:
            raise DomainError(f"{family.value} is defined for n >= 0, got {n}")
        count = n + 1
        member = (lambda k: u_poly(n + k + 1)) if family is BasisFamily.BU else (lambda k: v_poly(n + k))
    return [BivarPoly.monomial(n - k, 0) * member(k) for k in range(count)]


def _exact_div(numerator: Rational, denominator: Rational) -> Rational:
    if isinstance(numerator, int) and isinstance(denominator, int):
        quotient, remainder = divmod(numerator, denominator)
        if remainder == 0:
            return quotient
    return as_rational(Fraction(numerator) / Fraction(denominator))


class RationalMatrix:
    """Dense matrix of exact rationals with exact determinant and solve."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        data = [[as_rational(entry) for entry in row] for row in rows]
        if data and any(len(row) != len(data[0]) for row in data):
            raise DimensionError("rows have differing lengths")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    def __getitem__(self, index: tuple[int, int]) -> Rational:
        i, j = index
        return self._rows[i][j]

    def row_list(self) -> list[list[Rational]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self._rows!r})"

    def det(self) -> Rational:
        """Exact determinant via fraction-free (Bareiss) elimination.

        Pivots are chosen as the first non-zero entry in the column; there is
        no magnitude heuristic, so the result is bit-for-bit reproducible.
        """
        if self.rows != self.cols:
            raise DimensionError(f"determinant needs a square matrix, got {self.rows}x{self.cols}")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_list()
        sign = 1
        prev: Rational = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = _exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
                m[i][k] = 0
            prev = m[k][k]
        return as_rational(sign * m[n - 1][n - 1])

    def solve(self, rhs: Sequence[Rational]) -> list[Rational]:
        """Exact solution of self * x = rhs for a square system."""
        if self.rows != self.cols:
            raise DimensionError(f"solve needs a square matrix, got {self.rows}x{self.cols}")
        if len(rhs) != self.rows:
            raise DimensionError(f"right-hand side has length {len(rhs)}, expected {self.rows}")
        n = self.rows
        if n == 0:
            return []
        aug = [list(row) + [as_rational(value)] for row, value in zip(self._rows, rhs)]
        prev: Rational = 1
        for k in range(n):
            if aug[k][k] == 0:
                for i in range(k + 1, n):
                    if aug[i][k] != 0:
                        aug[k], aug[i] = aug[i], aug[k]
                        break
                else:
                    raise SingularMatrixError(f"zero pivot column {k}")
            for i in range(k + 1, n):
                for j in range(k + 1, n + 1):
                    aug[i][j] = _exact_div(aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j], prev)
                aug[i][k] = 0
            prev = aug[k][k]
        solution: list[Rational] = [0] * n
        for i in range(n - 1, -1, -1):
            acc = aug[i][n]
            for j in range(i + 1, n):
                acc = acc - aug[i][j] * solution[j]
            solution[i] = _exact_div_rational(acc, aug[i][i])
        return solution


def _exact_div_rational(numerator: Rational, denominator: Rational) -> Rational:
    if denominator == 0:
        raise SingularMatrixError("division by zero pivot in back substitution")
    return as_rational(Fraction(numerator) / Fraction(denominator))


def coordinate_matrix(spec: BasisSpec) -> RationalMatrix:
    """Square matrix whose column k holds the canonical coordinates of vector k."""
    if spec.family is BasisFamily.CANONICAL:
        raise DomainError("coordinate_matrix expects one of the four sequence bases")
    degree = ambient_degree(spec)
    columns = [vector.canonical_coordinates(degree) for vector in build_basis(spec)]
    size = degree // 2 + 1
    return RationalMatrix([[columns[c][r] for c in range(len(columns))] for r in range(size)])


def det_by_column_reduction(spec: BasisSpec) -> Rational:
    """Determinant by telescoping column differences, independent of Bareiss.

    Replacing vector k by its difference with vector k-1 leaves a column that
    is divisible by y and has no x^m component; expanding along the x^m
    coordinate and dividing the differences by y reduces the problem to the
    same family one order lower.  The structural facts are verified at every
    step and violations raise ArithmeticError.
    """
    if spec.family is BasisFamily.CANONICAL:
        raise DomainError("column reduction expects one of the four sequence bases")
    vectors = build_basis(spec)
    degree = ambient_degree(spec)
    scale: Rational = 1
    while len(vectors) > 1:
        pivot = vectors[0].coefficient(degree, 0)
        if pivot == 0:
            raise ArithmeticError(f"leading vector lost its x^{degree} component")
        reduced = []
        for j in range(1, len(vectors)):
            difference = vectors[j] - vectors[j - 1]
            if difference.coefficient(degree, 0) != 0:
                raise ArithmeticError(f"difference column {j} keeps an x^{degree} component")
            reduced.append(_divide_by_y(difference))
        scale = as_rational(scale * pivot)
        vectors = reduced
        degree -= 2
    last = vectors[0].canonical_coordinates(degree)
    return as_rational(scale * last[0])


def _divide_by_y(poly: BivarPoly) -> BivarPoly:
    terms = {}
    for mono, coeff in poly.items():
        if mono.y_exp == 0:
            raise ArithmeticError(f"{mono} is not divisible by y")
        terms[Monomial(mono.x_exp, mono.y_exp - 1)] = coeff
    return BivarPoly(terms)


@dataclass(frozen=True)
class Decomposition:
    """Exact coordinates of a target polynomial over one sequence basis."""

    target: BivarPoly
    spec: BasisSpec
    coords: tuple[Rational, ...]

    def reconstruct(self) -> BivarPoly:
        total = BivarPoly()
        for coeff, vector in zip(self.coords, build_basis(self.spec)):
            total = total + vector.scale(coeff)
        return total

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "target": self.target.to_json_terms(),
            "family": self.spec.family.value,
            "n": self.spec.n,
            "coords": [str(c) for c in self.coords],
        }


def decompose(target: BivarPoly, spec: BasisSpec) -> Decomposition:
    """Solve for the exact coordinates of ``target`` over the given basis.

    Raises MalformedElement when the target has monomials outside the
    ambient canonical family.  The result reconstructs the target exactly;
    a non-zero residual would be an internal defect and raises.
    """
    rhs = target.canonical_coordinates(ambient_degree(spec))
    coords = tuple(coordinate_matrix(spec).solve(rhs))
    decomposition = Decomposition(target, spec, coords)
    if decomposition.reconstruct() != target:
        raise ArithmeticError("internal error: decomposition residual is not zero")
    return decomposition


def check_determinant(family: BasisFamily, n_max: int) -> CheckResult:
    """Exact determinants for orders 1..n_max against the known value."""
    expected = EXPECTED_DETERMINANTS[family]
    bad = []
    for n in range(1, n_max + 1):
        if coordinate_matrix(BasisSpec(family, n)).det() != expected:
            bad.append(n)
    name = f"lemma1.det.{family.value}"
    if bad:
        shown = ", ".join(str(n) for n in bad[:5])
        return CheckResult(name, False, f"det != {expected} at n = {shown}")
    return CheckResult(name, True, f"det = {expected} for n = 1..{n_max}")


def check_determinants(n_max: int) -> list[CheckResult]:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    return [check_determinant(family, n_max) for family in EXPECTED_DETERMINANTS]
