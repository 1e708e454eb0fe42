"""Exact sparse polynomials in the two variables x and y.

A polynomial is a finite map from monomials x^a y^b to non-zero exact
coefficients.  Coefficients are Python ints, or ``Fraction`` when a value is
not integral; no float ever enters, so equality of polynomials is equality
of term maps.  The representation is canonical: zero coefficients are never
stored and integral fractions are normalised back to int on construction.

The degree-n canonical family is the monomial list (x^(n-2k) y^k) for
0 <= k <= n//2.  A polynomial supported on it is weight homogeneous (every
term has x_exp + 2*y_exp = n); ``canonical_coordinates`` and
``from_canonical_coordinates`` convert between such polynomials and their
coordinate vectors over that family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import DomainError, MalformedElement

Rational = Union[int, Fraction]


def as_rational(value: Rational) -> Rational:
    """Normalise an exact coefficient: int stays int, integral Fraction becomes int.

    Inexact types (float, complex, Decimal, ...) are rejected outright.
    """
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"exact rational required, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Monomial:
    """A power product x^x_exp * y^y_exp with non-negative exponents.

    Ordered by total degree, ties broken by x_exp; the order is total and
    agrees with equality because (degree, x_exp) determines the pair.
    """

    x_exp: int
    y_exp: int

    def __post_init__(self):
        if not isinstance(self.x_exp, int) or not isinstance(self.y_exp, int):
            raise TypeError("exponents must be integers")
        if self.x_exp < 0 or self.y_exp < 0:
            raise ValueError(f"exponents must be non-negative, got {self}")

    @property
    def degree(self) -> int:
        return self.x_exp + self.y_exp

    @property
    def weight(self) -> int:
        """x_exp + 2*y_exp, constant across the degree-n canonical family."""
        return self.x_exp + 2 * self.y_exp

    def _order_key(self) -> tuple[int, int]:
        return (self.degree, self.x_exp)

    def __lt__(self, other: Monomial) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._order_key() < other._order_key()

    def __le__(self, other: Monomial) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._order_key() <= other._order_key()

    def __gt__(self, other: Monomial) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._order_key() > other._order_key()

    def __ge__(self, other: Monomial) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._order_key() >= other._order_key()

    def __str__(self) -> str:
        return _var_string(self) or "1"


TermsInput = Union[Mapping, Iterable]


def _var_string(mono: Monomial) -> str:
    x = "" if mono.x_exp == 0 else ("x" if mono.x_exp == 1 else f"x^{mono.x_exp}")
    y = "" if mono.y_exp == 0 else ("y" if mono.y_exp == 1 else f"y^{mono.y_exp}")
    return x + y


class BivarPoly:
    """Immutable sparse polynomial in x and y with exact coefficients.

    Values are never mutated after construction; operations return fresh
    polynomials, so instances can be shared freely across threads.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsInput = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Rational] = {}
        for key, value in items:
            mono = key if isinstance(key, Monomial) else Monomial(*key)
            coeff = acc.get(mono, 0) + as_rational(value)
            if coeff == 0:
                acc.pop(mono, None)
            else:
                acc[mono] = coeff
        self._terms = {m: as_rational(c) for m, c in acc.items()}

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: Rational) -> BivarPoly:
        return cls({Monomial(0, 0): value})

    @classmethod
    def monomial(cls, x_exp: int, y_exp: int, coeff: Rational = 1) -> BivarPoly:
        return cls({Monomial(x_exp, y_exp): coeff})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Rational]]:
        return iter(self._terms.items())

    def coefficient(self, x_exp: int, y_exp: int) -> Rational:
        return self._terms.get(Monomial(x_exp, y_exp), 0)

    def sorted_monomials(self) -> list[Monomial]:
        """Monomials in display order: descending x_exp, then descending y_exp."""
        return sorted(self._terms, key=lambda m: (-m.x_exp, -m.y_exp))

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(isinstance(c, int) for c in self._terms.values())

    def homogeneous_weight(self) -> int | None:
        """The common x_exp + 2*y_exp over all terms, or None when mixed or zero."""
        weights = {m.weight for m in self._terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: BivarPoly | Rational) -> BivarPoly:
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = acc.get(mono, 0) + coeff
            if total == 0:
                acc.pop(mono, None)
            else:
                acc[mono] = total
        return BivarPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> BivarPoly:
        return BivarPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: BivarPoly | Rational) -> BivarPoly:
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> BivarPoly:
        return (-self) + other

    def __mul__(self, other: BivarPoly | Rational) -> BivarPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        acc: dict[Monomial, Rational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = Monomial(m1.x_exp + m2.x_exp, m1.y_exp + m2.y_exp)
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return BivarPoly(acc)

    def __rmul__(self, other: Rational) -> BivarPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> BivarPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, factor: Rational) -> BivarPoly:
        factor = as_rational(factor)
        if factor == 0:
            return BivarPoly()
        return BivarPoly({m: c * factor for m, c in self._terms.items()})

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, x_image: BivarPoly | Rational, y_image: BivarPoly | Rational) -> BivarPoly:
        """Simultaneously replace x and y by polynomial images, fully expanded.

        Acts as a ring homomorphism: products and sums may be substituted
        factor by factor.
        """
        x_image = x_image if isinstance(x_image, BivarPoly) else BivarPoly.constant(x_image)
        y_image = y_image if isinstance(y_image, BivarPoly) else BivarPoly.constant(y_image)
        if not self._terms:
            return BivarPoly()
        x_pows = _power_table(x_image, max(m.x_exp for m in self._terms))
        y_pows = _power_table(y_image, max(m.y_exp for m in self._terms))
        total = BivarPoly()
        for mono, coeff in self._terms.items():
            total = total + (x_pows[mono.x_exp] * y_pows[mono.y_exp]).scale(coeff)
        return total

    def evaluate(self, x0: Rational, y0: Rational) -> Rational:
        """Exact value at a rational point."""
        x0 = as_rational(x0)
        y0 = as_rational(y0)
        total: Rational = 0
        for mono, coeff in self._terms.items():
            total += coeff * x0 ** mono.x_exp * y0 ** mono.y_exp
        return as_rational(total)

    # -- canonical-family coordinates ----------------------------------------

    def canonical_coordinates(self, n: int) -> list[Rational]:
        """Coordinates over the degree-n canonical family, entry k for x^(n-2k) y^k.

        Raises MalformedElement when a term falls outside that family.
        """
        if n < 0:
            raise DomainError(f"canonical degree index must be >= 0, got {n}")
        coords: list[Rational] = [0] * (n // 2 + 1)
        for mono, coeff in self._terms.items():
            if mono.weight != n:
                raise MalformedElement(
                    f"monomial {mono} lies outside the degree-{n} canonical family"
                )
            coords[mono.y_exp] = coeff
        return coords

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono in self.sorted_monomials():
            coeff = self._terms[mono]
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            var = _var_string(mono)
            if var and magnitude == 1:
                body = var
            else:
                head = str(magnitude) if isinstance(magnitude, int) else f"({magnitude})"
                body = head + var
            if not chunks:
                chunks.append(("-" if negative else "") + body)
            else:
                chunks.append((" - " if negative else " + ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def to_json_terms(self) -> list[dict[str, object]]:
        """Term records in display order, with string-encoded big integers."""
        records = []
        for mono in self.sorted_monomials():
            coeff = Fraction(self._terms[mono])
            records.append(
                {
                    "x": mono.x_exp,
                    "y": mono.y_exp,
                    "num": str(coeff.numerator),
                    "den": str(coeff.denominator),
                }
            )
        return records


def _power_table(base: BivarPoly, top: int) -> list[BivarPoly]:
    powers = [ONE]
    for _ in range(top):
        powers.append(powers[-1] * base)
    return powers


def canonical_monomials(n: int) -> list[Monomial]:
    """The degree-n canonical family x^(n-2k) y^k for k = 0..n//2."""
    if n < 0:
        raise DomainError(f"canonical degree index must be >= 0, got {n}")
    return [Monomial(n - 2 * k, k) for k in range(n // 2 + 1)]


def from_canonical_coordinates(n: int, coords: Iterable[Rational]) -> BivarPoly:
    """Rebuild sum coords[k] * x^(n-2k) y^k; the left inverse of canonical_coordinates."""
    coords = list(coords)
    family = canonical_monomials(n)
    if len(coords) != len(family):
        raise DomainError(
            f"expected {len(family)} coordinates for degree {n}, got {len(coords)}"
        )
    return BivarPoly({mono: c for mono, c in zip(family, coords)})


ZERO = BivarPoly()
ONE = BivarPoly.constant(1)
X = BivarPoly.monomial(1, 0)
Y = BivarPoly.monomial(0, 1)
