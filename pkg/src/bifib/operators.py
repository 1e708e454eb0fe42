"""Polynomials in the forward shift operator E with bivariate coefficients.

E sends a sequence (W_n) to (W_{n+1}), so an operator sum_k p_k E^k applied
at index n evaluates to sum_k p_k * W_{n+k}.  Coefficients live in Q[x, y]
and commute with E, making the operator ring a plain commutative polynomial
ring over the coefficient ring.

``build_family`` constructs five operator families from their defining
products and sums:

    A_m = (x-E)^m + 2 sum_{k=1..m} E^k (x-E)^(m-k)        (m >= 0)
    B_m = -(E-x)^m                                        (m >= 0)
    C_m = 2 E^m + 2 B_m - x E^(m-1)                       (m >= 1)
    D_m = (E-x)^(m-1) (x-2E)                              (m >= 1)
    E_m = (x A_{m-1} + D_m) / 2 + E^m                     (m >= 1)

Expanded, family F_m equals sum_k f(m,k) x^(m-k) E^k with f the matching
integer triangle from ``coefficients``; C_m and E_m have zero coefficient
at k = m.  Applied at the right base index the families annihilate or
double-step the two sequences:

    A_n at V, base n     -> 2 U_{2n+1}        (n >= 0)
    B_n at U, base n     -> 0                 (n >= 0)
    C_n at U, base n     -> V_{2n-1}          (n >= 1)
    D_n at V, base n-1   -> 0                 (n >= 1)
    E_n at V, base n-1   -> 2 U_{2n}          (n >= 1)

and (x-E)^j applied at base m multiplies by (-y)^j while stepping the index
back j places (the shift law checked by ``check_shift_law``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .coefficients import Family
from .errors import DomainError
from .poly import ONE, X, Y, ZERO, BivarPoly, Rational
from .report import CheckResult
from .sequences import SequenceCache, SequenceKind

CoeffsInput = Union[Mapping, Iterable]


class OperatorPoly:
    """Immutable finite sum of powers of E with BivarPoly coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: CoeffsInput = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, BivarPoly] = {}
        for power, value in items:
            if not isinstance(power, int) or power < 0:
                raise ValueError(f"shift power must be a non-negative integer, got {power!r}")
            poly = value if isinstance(value, BivarPoly) else BivarPoly.constant(value)
            total = acc.get(power, ZERO) + poly
            if total.is_zero():
                acc.pop(power, None)
            else:
                acc[power] = total
        self._coeffs = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def shift(cls, power: int = 1) -> OperatorPoly:
        return cls({power: ONE})

    @classmethod
    def from_poly(cls, poly: BivarPoly) -> OperatorPoly:
        return cls({0: poly})

    @classmethod
    def identity(cls) -> OperatorPoly:
        return cls({0: ONE})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[int, BivarPoly]]:
        return iter(self._coeffs.items())

    def coefficient(self, power: int) -> BivarPoly:
        return self._coeffs.get(power, ZERO)

    def shift_powers(self) -> list[int]:
        return sorted(self._coeffs)

    @property
    def degree(self) -> int:
        """Largest shift power, or -1 for the zero operator."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: OperatorPoly) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for power, poly in other._coeffs.items():
            total = acc.get(power, ZERO) + poly
            if total.is_zero():
                acc.pop(power, None)
            else:
                acc[power] = total
        return OperatorPoly(acc)

    def __neg__(self) -> OperatorPoly:
        return OperatorPoly({k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other: OperatorPoly) -> OperatorPoly:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: OperatorPoly | BivarPoly | Rational) -> OperatorPoly:
        if isinstance(other, (BivarPoly, int, Fraction)):
            return OperatorPoly({k: p * other for k, p in self._coeffs.items()})
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        acc: dict[int, BivarPoly] = {}
        for k1, p1 in self._coeffs.items():
            for k2, p2 in other._coeffs.items():
                power = k1 + k2
                acc[power] = acc.get(power, ZERO) + p1 * p2
        return OperatorPoly(acc)

    def __rmul__(self, other: BivarPoly | Rational) -> OperatorPoly:
        if isinstance(other, (BivarPoly, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> OperatorPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = OperatorPoly.identity()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- action on sequences -------------------------------------------------

    def apply(self, seq: SequenceCache, base: int) -> BivarPoly:
        """Evaluate sum_k p_k * seq[base + k]."""
        if base < 0:
            raise DomainError(f"base index must be >= 0, got {base}")
        total = ZERO
        for power, poly in self._coeffs.items():
            total = total + poly * seq[base + power]
        return total

    # -- rendering -------------------------------------------------------------

    def render(self, descending: bool = False) -> str:
        if not self._coeffs:
            return "0"
        powers = self.shift_powers()
        if descending:
            powers = powers[::-1]
        return " + ".join(f"({self._coeffs[k]})·E^{k}" for k in powers)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"OperatorPoly({str(self)!r})"


X_MINUS_E = OperatorPoly({0: X}) - OperatorPoly.shift()
E_MINUS_X = -X_MINUS_E


def build_family(family: Family, m: int) -> OperatorPoly:
    """Construct one of the five operator families, fully expanded."""
    if family is Family.A:
        _require_order(family, m, 0)
        total = X_MINUS_E ** m
        for k in range(1, m + 1):
            total = total + OperatorPoly.shift(k) * (X_MINUS_E ** (m - k)) * 2
        return total
    if family is Family.B:
        _require_order(family, m, 0)
        return -(E_MINUS_X ** m)
    if family is Family.C:
        _require_order(family, m, 1)
        return OperatorPoly.shift(m) * 2 + build_family(Family.B, m) * 2 - OperatorPoly.shift(m - 1) * X
    if family is Family.D:
        _require_order(family, m, 1)
        return (E_MINUS_X ** (m - 1)) * (OperatorPoly({0: X}) - OperatorPoly.shift() * 2)
    _require_order(family, m, 1)
    return (build_family(Family.A, m - 1) * X + build_family(Family.D, m)) * Fraction(1, 2) + OperatorPoly.shift(m)


def _require_order(family: Family, m: int, minimum: int) -> None:
    if m < minimum:
        raise DomainError(f"operator family {family.value.upper()} needs m >= {minimum}, got {m}")


def check_shift_law(kind: SequenceKind, n_max: int) -> CheckResult:
    """(x-E)^j at base m equals (-y)^j times member m-j, for 0 <= j <= m <= n_max."""
    seq = SequenceCache(kind)
    power = OperatorPoly.identity()
    sign_pow = ONE
    minus_y = -Y
    bad = []
    for j in range(n_max + 1):
        for m in range(j, n_max + 1):
            if power.apply(seq, m) != sign_pow * seq[m - j]:
                bad.append((j, m))
        power = power * X_MINUS_E
        sign_pow = sign_pow * minus_y
    name = f"lemma2.shift-{kind.value.lower()}"
    if bad:
        shown = ", ".join(str(pair) for pair in bad[:5])
        return CheckResult(name, False, f"fails at (j, m) = {shown}")
    return CheckResult(name, True, f"0 <= j <= m <= {n_max}")


def check_shift_lemma(n_max: int) -> list[CheckResult]:
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    return [check_shift_law(kind, n_max) for kind in SequenceKind]


_RELATION_RANGES = {Family.A: 0, Family.B: 0, Family.C: 1, Family.D: 1, Family.E: 1}


def check_relation(family: Family, n_max: int) -> CheckResult:
    """Verify one operator relation by exact application for every order."""
    u_cache = SequenceCache(SequenceKind.FIBONACCI_U)
    v_cache = SequenceCache(SequenceKind.LUCAS_V)
    start = _RELATION_RANGES[family]
    bad = []
    for n in range(start, n_max + 1):
        op = build_family(family, n)
        if family is Family.A:
            ok = op.apply(v_cache, n) == u_cache[2 * n + 1] * 2
        elif family is Family.B:
            ok = op.apply(u_cache, n).is_zero()
        elif family is Family.C:
            ok = op.apply(u_cache, n) == v_cache[2 * n - 1]
        elif family is Family.D:
            ok = op.apply(v_cache, n - 1).is_zero()
        else:
            ok = op.apply(v_cache, n - 1) == u_cache[2 * n] * 2
        if not ok:
            bad.append(n)
    name = f"relations.{family.value}"
    if bad:
        shown = ", ".join(str(n) for n in bad[:5])
        return CheckResult(name, False, f"fails at n = {shown}")
    return CheckResult(name, True, f"n = {start}..{n_max}")


def check_relations(n_max: int) -> list[CheckResult]:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    return [check_relation(family, n_max) for family in Family]
