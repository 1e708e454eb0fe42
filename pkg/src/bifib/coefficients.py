"""The five integer coefficient families a, b, c, d, e.

Each family gives the coordinates of a doubled-index sequence member over
one of the four sequence bases:

    a:  2*U_{2n+1} = sum_{k=0..n}   a(n,k) x^(n-k) V_{n+k}      (n >= 0)
    b:    U_{2n}   = sum_{k=0..n-1} b(n,k) x^(n-k) U_{n+k}      (n >= 1)
    c:    V_{2n-1} = sum_{k=0..n-1} c(n,k) x^(n-k) U_{n+k}      (n >= 1)
    d:  2*V_{2n-1} = sum_{k=0..n-1} d(n,k) x^(n-k) V_{n+k-1}    (n >= 1)
    e:  2*U_{2n}   = sum_{k=0..n-1} e(n,k) x^(n-k) V_{n+k-1}    (n >= 1)

Closed forms (delta is the Kronecker symbol):

    a(n,k) = (-1)^(k+1) C(n,k) + 2 (-1)^(n-k) sum_{j=0..n} (-1)^j C(j, n-k)
    b(n,k) = (-1)^(n-k+1) C(n,k)
    c(n,k) = 2 (-1)^(n-k+1) C(n,k) - delta(n-1,k)
    d(n,k) = (-1)^(n-k+1) (n+k)/n C(n,k)
    e(n,k) = (a(n-1,k) + d(n,k)) / 2 + delta(n,k)

Every family also satisfies a Pascal-like two-term row recurrence; the
triangles can be generated three independent ways (closed form, recurrence,
and the exact linear-solve oracle of ``bases.decompose``) and
``cross_check`` compares them entry by entry.

Rows of the b, c and d triangles carry a final k = n entry (for example
c(1,1) = -2).  Those values feed the recurrences and the operator
expansions but are not part of the decomposition sums above, which stop at
k = n-1.  The e family has e(n,n) = 0 by construction and its rows stop at
k = n-1.  Text renderings are tab-separated integers, one row per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable

from .bases import BasisFamily, BasisSpec, build_basis, decompose
from .errors import DomainError, IntegralityViolation
from .poly import BivarPoly
from .report import CheckResult
from .sequences import u_poly, v_poly


class Family(Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


MIN_ROW = {Family.A: 0, Family.B: 0, Family.C: 1, Family.D: 1, Family.E: 1}


def table_row_length(family: Family, n: int) -> int:
    """Entries stored for row n: k = 0..n, except the e family stops at n-1."""
    return n if family is Family.E else n + 1


def decomposition_length(family: Family, n: int) -> int:
    """Coordinates consumed by the decomposition identity for row n."""
    return n + 1 if family is Family.A else n


def _require(condition: bool, family: str, n: int, k: int) -> None:
    if not condition:
        raise IndexError(f"({n}, {k}) outside the domain of family {family}")


def a_closed(n: int, k: int) -> int:
    _require(n >= 0 and 0 <= k <= n, "a", n, k)
    alternating = sum((-1) ** j * comb(j, n - k) for j in range(n + 1))
    return (-1) ** (k + 1) * comb(n, k) + 2 * (-1) ** (n - k) * alternating


def b_closed(n: int, k: int) -> int:
    _require(n >= 0 and 0 <= k <= n, "b", n, k)
    return (-1) ** (n - k + 1) * comb(n, k)


def c_closed(n: int, k: int) -> int:
    _require(n >= 1 and 0 <= k <= n, "c", n, k)
    return 2 * (-1) ** (n - k + 1) * comb(n, k) - (1 if n - 1 == k else 0)


def d_closed(n: int, k: int) -> int:
    _require(n >= 1 and 0 <= k <= n, "d", n, k)
    value = Fraction((n + k) * comb(n, k), n)
    if value.denominator != 1:
        raise IntegralityViolation(f"d({n},{k}) evaluated to {value}")
    return (-1) ** (n - k + 1) * value.numerator


def e_closed(n: int, k: int) -> int:
    # The k = n coefficient is 0 by construction (the half-sum contributes -1
    # and the Kronecker term +1), so rows stop at k = n-1 and the delta term
    # never fires in-domain.
    _require(n >= 1 and 0 <= k <= n - 1, "e", n, k)
    half = Fraction(a_closed(n - 1, k) + d_closed(n, k), 2)
    if half.denominator != 1:
        raise IntegralityViolation(f"e({n},{k}) evaluated to {half}")
    return half.numerator


_CLOSED: dict[Family, Callable[[int, int], int]] = {
    Family.A: a_closed,
    Family.B: b_closed,
    Family.C: c_closed,
    Family.D: d_closed,
    Family.E: e_closed,
}


def closed_value(family: Family, n: int, k: int) -> int:
    return _CLOSED[family](n, k)


@dataclass(frozen=True)
class CoeffTriangle:
    """Integer triangle rows with the method that produced them."""

    family: Family
    method: str
    start_row: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return self.start_row + len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        if not self.start_row <= n <= self.n_max:
            raise IndexError(f"row {n} not in triangle (rows {self.start_row}..{self.n_max})")
        return self.rows[n - self.start_row]

    def to_text(self) -> str:
        return "\n".join("\t".join(str(v) for v in row) for row in self.rows)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "family": self.family.value,
            "method": self.method,
            "start_row": self.start_row,
            "rows": [[str(v) for v in row] for row in self.rows],
        }

    def to_latex(self) -> str:
        width = max(len(row) for row in self.rows)
        lines = [
            "\\begin{tabular}{r|" + "r" * width + "}",
            "$n \\setminus k$ & " + " & ".join(f"${k}$" for k in range(width)) + " \\\\",
            "\\hline",
        ]
        for offset, row in enumerate(self.rows):
            cells = [f"${v}$" for v in row] + [""] * (width - len(row))
            lines.append(f"${self.start_row + offset}$ & " + " & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)


def closed_triangle(family: Family, n_max: int) -> CoeffTriangle:
    """Rows built value by value from the closed form."""
    start = MIN_ROW[family]
    if n_max < start:
        raise IndexError(f"n_max {n_max} below first row {start} of family {family.value}")
    rows = tuple(
        tuple(closed_value(family, n, k) for k in range(table_row_length(family, n)))
        for n in range(start, n_max + 1)
    )
    return CoeffTriangle(family, "closed", start, rows)


def recurrence_triangle(family: Family, n_max: int) -> CoeffTriangle:
    """Rows built purely from the family's seeds and two-term recurrence."""
    start = MIN_ROW[family]
    if n_max < start:
        raise IndexError(f"n_max {n_max} below first row {start} of family {family.value}")
    builder = _RECURRENCES[family]
    return CoeffTriangle(family, "recurrence", start, builder(n_max))


def _entry(row: tuple[int, ...], k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


def _a_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, n + 1):
            row.append(_entry(prev, k) - _entry(prev, k - 1) + (2 if k == n else 0))
        rows.append(tuple(row))
    return tuple(rows)


def _b_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(-1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [(-1) ** (n + 1)]
        for k in range(1, n + 1):
            row.append(-_entry(prev, k) + _entry(prev, k - 1))
        rows.append(tuple(row))
    return tuple(rows)


def _c_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1, -2)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = [2 * (-1) ** (n + 1)]
        for k in range(1, n + 1):
            row.append(-_entry(prev, k) + _entry(prev, k - 1) - (1 if n == k + 2 else 0))
        rows.append(tuple(row))
    return tuple(rows)


def _d_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1, -2)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = [(-1) ** (n + 1)]
        for k in range(1, n + 1):
            row.append(-_entry(prev, k) + _entry(prev, k - 1))
        rows.append(tuple(row))
    return tuple(rows)


def _e_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    a_rows = _a_rows(n_max - 1) if n_max >= 2 else ()
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = [(1 - (-1) ** n) // 2]
        for k in range(1, n):
            row.append(-_entry(prev, k) + _entry(prev, k - 1) + _entry(a_rows[n - 1], k))
        rows.append(tuple(row))
    return tuple(rows)


_RECURRENCES: dict[Family, Callable[[int], tuple[tuple[int, ...], ...]]] = {
    Family.A: _a_rows,
    Family.B: _b_rows,
    Family.C: _c_rows,
    Family.D: _d_rows,
    Family.E: _e_rows,
}


@dataclass(frozen=True)
class DecompositionScheme:
    """Which target decomposes over which basis for one coefficient family."""

    basis: BasisFamily
    min_n: int
    target: Callable[[int], BivarPoly]
    description: str


SCHEMES: dict[Family, DecompositionScheme] = {
    Family.A: DecompositionScheme(
        BasisFamily.BV, 0, lambda n: u_poly(2 * n + 1).scale(2), "2*U[2n+1] over BV"
    ),
    Family.B: DecompositionScheme(
        BasisFamily.BU_STAR, 1, lambda n: u_poly(2 * n), "U[2n] over BUstar"
    ),
    Family.C: DecompositionScheme(
        BasisFamily.BU_STAR, 1, lambda n: v_poly(2 * n - 1), "V[2n-1] over BUstar"
    ),
    Family.D: DecompositionScheme(
        BasisFamily.BV_STAR, 1, lambda n: v_poly(2 * n - 1).scale(2), "2*V[2n-1] over BVstar"
    ),
    Family.E: DecompositionScheme(
        BasisFamily.BV_STAR, 1, lambda n: u_poly(2 * n).scale(2), "2*U[2n] over BVstar"
    ),
}


def oracle_triangle(family: Family, n_max: int) -> CoeffTriangle:
    """Rows recovered by the exact linear-solve oracle, independent of both
    the closed forms and the recurrences.

    Row n holds the decomposition coordinates, so for families b, c, d the
    final k = n table entry has no oracle counterpart, and the b/c/d/e
    triangles start at row 1.
    """
    scheme = SCHEMES[family]
    if n_max < scheme.min_n:
        raise IndexError(f"n_max {n_max} below first row {scheme.min_n} of family {family.value}")
    rows = []
    for n in range(scheme.min_n, n_max + 1):
        coords = decompose(scheme.target(n), BasisSpec(scheme.basis, n)).coords
        row = []
        for value in coords:
            if not isinstance(value, int):
                raise IntegralityViolation(
                    f"oracle coordinate {value} for family {family.value}, row {n}"
                )
            row.append(value)
        rows.append(tuple(row))
    return CoeffTriangle(family, "oracle", scheme.min_n, tuple(rows))


@dataclass(frozen=True)
class MethodMismatch:
    """One entry where the generation methods disagree."""

    n: int
    k: int
    values: dict[str, int | None]


@dataclass(frozen=True)
class CrossCheckReport:
    family: Family
    n_max: int
    methods: tuple[str, ...]
    mismatches: tuple[MethodMismatch, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def cross_check(family: Family, n_max: int, include_oracle: bool = True) -> CrossCheckReport:
    """Compare closed form, recurrence, and (optionally) the solve oracle.

    Entries a method does not produce (the k = n seeds of b, c, d, which lie
    past the oracle's coordinate vector) are skipped, not flagged.
    """
    triangles = {
        "closed": closed_triangle(family, n_max),
        "recurrence": recurrence_triangle(family, n_max),
    }
    if include_oracle and n_max >= SCHEMES[family].min_n:
        triangles["oracle"] = oracle_triangle(family, n_max)
    mismatches = []
    for n in range(MIN_ROW[family], n_max + 1):
        rows = {
            method: triangle.row(n)
            for method, triangle in triangles.items()
            if n >= triangle.start_row
        }
        width = max(len(row) for row in rows.values())
        for k in range(width):
            values = {method: (row[k] if k < len(row) else None) for method, row in rows.items()}
            seen = {v for v in values.values() if v is not None}
            if len(seen) > 1:
                mismatches.append(MethodMismatch(n, k, values))
    return CrossCheckReport(family, n_max, tuple(triangles), tuple(mismatches))


def check_theorem(family: Family, n_max: int) -> CheckResult:
    """Verify the family's decomposition identity exactly, two ways.

    For each row the closed-form coefficients must rebuild the target
    polynomial term for term, and the linear-solve oracle must return the
    identical integer vector.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    scheme = SCHEMES[family]
    name = f"theorems.{family.value}"
    bad = []
    for n in range(scheme.min_n, n_max + 1):
        spec = BasisSpec(scheme.basis, n)
        coeffs = [closed_value(family, n, k) for k in range(decomposition_length(family, n))]
        target = scheme.target(n)
        combination = BivarPoly()
        for coeff, vector in zip(coeffs, build_basis(spec)):
            combination = combination + vector.scale(coeff)
        if combination != target or list(decompose(target, spec).coords) != coeffs:
            bad.append(n)
    if bad:
        shown = ", ".join(str(n) for n in bad[:5])
        return CheckResult(name, False, f"{scheme.description} fails at n = {shown}")
    return CheckResult(name, True, f"{scheme.description}, n = {scheme.min_n}..{n_max}")


def check_theorems(n_max: int) -> list[CheckResult]:
    return [check_theorem(family, n_max) for family in Family]
