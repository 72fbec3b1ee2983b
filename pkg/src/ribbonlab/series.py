"""Exact scalars over Q or a prime field F_p, and Laurent polynomials in one variable u.

Everything here is exact and immutable: rationals are arbitrary-precision
fractions, prime-field elements are residues, and a Laurent polynomial is a
finite sorted map exponent -> nonzero scalar.  The zero polynomial is the
empty map, and asking for the order of zero raises instead of returning a
sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ConfigError, FieldMismatchError, ZeroOrderError

MAX_PRIME = 2 ** 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (p is None) or F_p for a prime p < 2^31."""

    p: Union[int, None] = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < MAX_PRIME and _is_prime(self.p)):
                raise ConfigError(f"prime field needs a prime p < 2^31, got {self.p}")

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @staticmethod
    def from_tag(tag: str) -> "Field":
        if tag == "Q":
            return QQ
        if tag.startswith("Fp:"):
            return Field(int(tag[3:]))
        raise ConfigError(f"unknown field tag {tag!r}")

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction or coefficient string into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.tag} vs {self.tag}")
            return value
        if isinstance(value, str):
            return self._parse(value)
        if self.p is None:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            return Scalar(self, num * pow(den, -1, self.p) % self.p)
        return Scalar(self, int(value) % self.p)

    def _parse(self, s: str) -> "Scalar":
        if "/" in s:
            num, den = s.split("/", 1)
            return self.scalar(Fraction(int(num), int(den)))
        return self.scalar(int(s))

    def format(self, a: "Scalar") -> str:
        if self.p is None:
            return f"{a.value.numerator}/{a.value.denominator}"
        return str(a.value)

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)


QQ = Field()


@dataclass(frozen=True)
class Scalar:
    """Exact field element; arithmetic never leaves the field and never rounds."""

    field: Field
    value: Union[Fraction, int]

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")
            return other
        return self.field.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        v = self.value + other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        v = self.value - other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def __mul__(self, other):
        other = self._coerce(other)
        v = self.value * other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if self.field.p is None:
            return Scalar(self.field, self.value / other.value)
        return Scalar(self.field, self.value * pow(other.value, -1, self.field.p) % self.field.p)

    def __neg__(self):
        v = -self.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def inverse(self) -> "Scalar":
        return self.field.one / self

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self)


@dataclass(frozen=True)
class LaurentPoly:
    """Finite Laurent polynomial in u: sorted tuple of (exponent, nonzero scalar)."""

    field: Field
    coeffs: tuple = ()

    @staticmethod
    def from_dict(field: Field, d: dict) -> "LaurentPoly":
        items = []
        for e, c in d.items():
            c = field.scalar(c)
            if c:
                items.append((int(e), c))
        items.sort(key=lambda ec: ec[0])
        return LaurentPoly(field, tuple(items))

    @staticmethod
    def zero(field: Field) -> "LaurentPoly":
        return LaurentPoly(field, ())

    @staticmethod
    def one(field: Field) -> "LaurentPoly":
        return LaurentPoly.monomial(field, 0)

    @staticmethod
    def monomial(field: Field, exp: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly.from_dict(field, {exp: coeff})

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def support(self):
        return tuple(e for e, _ in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "LaurentPoly"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        d = self.as_dict()
        for e, c in other.coeffs:
            if e in d:
                d[e] = d[e] + c
            else:
                d[e] = c
        return LaurentPoly.from_dict(self.field, d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.field, tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        d: dict = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                prod = c1 * c2
                if e in d:
                    d[e] = d[e] + prod
                else:
                    d[e] = prod
        return LaurentPoly.from_dict(self.field, d)

    def scale(self, c) -> "LaurentPoly":
        c = self.field.scalar(c)
        return LaurentPoly.from_dict(self.field, {e: a * c for e, a in self.coeffs})

    def ord(self) -> int:
        """Minimal exponent carrying a nonzero coefficient; undefined for zero."""
        if not self.coeffs:
            raise ZeroOrderError("ord_u of the zero polynomial is undefined")
        return self.coeffs[0][0]

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "coeffs": [[e, self.field.format(c)] for e, c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        field = Field.from_tag(obj["field"])
        return LaurentPoly.from_dict(field, {int(e): field.scalar(c) for e, c in obj["coeffs"]})


def lp_add(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    """Coefficient-wise sum, canonicalized (zeros dropped)."""
    return x + y


def lp_mul(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    """Convolution product; over a field ord(xy) = ord(x) + ord(y)."""
    return x * y


def lp_ord(x: LaurentPoly) -> int:
    return x.ord()


def random_laurent(rng, field: Field, exp_lo=-6, exp_hi=6, max_terms=4) -> LaurentPoly:
    """Small random Laurent polynomial, used by the property suites."""
    d = {}
    for _ in range(rng.randint(0, max_terms)):
        e = rng.randint(exp_lo, exp_hi)
        if field.p is None:
            d[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        else:
            d[e] = rng.randint(0, field.p - 1)
    return LaurentPoly.from_dict(field, d)

