"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Every geometric computation in this package runs over one of these two
field implementations behind the same ``Scalar`` interface; there is no
floating-point mode.  Values are kept canonical after every operation
(lowest terms with positive denominator over the rationals, residues in
``[0, p)`` over GF(p)) so scalar equality is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import (
    CharacteristicTwoError,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
)

ScalarLike = Union["Scalar", int, Fraction, str]


def is_prime(n: int) -> bool:
    """Trial-division primality test; moduli in this package are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common contract of the two scalar fields."""

    characteristic: int

    def scalar(self, value: ScalarLike) -> "Scalar":
        raise NotImplementedError

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    def require_odd_characteristic(self) -> None:
        """Harmonic constructions degenerate in characteristic 2."""
        if self.characteristic == 2:
            raise CharacteristicTwoError(
                "harmonic constructions are undefined over a field of characteristic 2"
            )


class RationalField(Field):
    """The field of arbitrary-precision rationals."""

    characteristic = 0
    _instance: "RationalField | None" = None

    def __new__(cls) -> "RationalField":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def scalar(self, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch("scalar belongs to a different field")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            return Scalar(self, value)
        if isinstance(value, str):
            return Scalar(self, Fraction(value.strip()))
        raise TypeError(f"cannot build a rational scalar from {type(value).__name__}")

    def __repr__(self) -> str:
        return "QQ"

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField(Field):
    """The prime field GF(p).  Instances are interned via :func:`gf`."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def scalar(self, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch("scalar belongs to a different field")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return Scalar(self, value % self.p)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            return Scalar(self, value.numerator * pow(den, -1, self.p) % self.p)
        if isinstance(value, str):
            text = value.strip()
            if "mod" in text:
                residue, modulus = text.split("mod")
                if int(modulus) != self.p:
                    raise FieldMismatch(f"element of GF({modulus.strip()}) given to GF({self.p})")
                return self.scalar(int(residue))
            return self.scalar(Fraction(text))
        raise TypeError(f"cannot build a GF({self.p}) scalar from {type(value).__name__}")

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def gf(p: int) -> PrimeField:
    """The prime field GF(p); instances are cached so identity comparison works."""
    return PrimeField(p)


def characteristic(field: Field) -> int:
    """0 for the rationals, p for GF(p)."""
    return field.characteristic


class Scalar:
    """An immutable exact field element tagged with its field.

    Arithmetic never coerces between fields; plain ``int`` (and, over the
    rationals, ``Fraction``) operands are promoted into the scalar's own
    field, which is always unambiguous.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other: ScalarLike) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value + other.value) % self.field.p)
        return Scalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value - other.value) % self.field.p)
        return Scalar(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, (self.value * other.value) % self.field.p)
        return Scalar(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, -self.value % self.field.p)
        return Scalar(self.field, -self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, pow(self.value, -1, self.field.p))
        return Scalar(self.field, 1 / self.value)

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if isinstance(self.field, PrimeField):
            return Scalar(self.field, pow(self.value, exponent, self.field.p))
        return Scalar(self.field, self.value ** exponent)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                other = self.field.scalar(other)
            except DivisionByZero:
                return False
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def sign(self) -> int:
        """-1/0/+1; only meaningful over the rationals."""
        if isinstance(self.field, PrimeField):
            raise FieldMismatch("sign is undefined over a prime field")
        return (self.value > 0) - (self.value < 0)

    # -- text form ------------------------------------------------------------

    def __str__(self) -> str:
        if isinstance(self.field, PrimeField):
            return f"{self.value} mod {self.field.p}"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse the wire form: "num/den" or "num" over QQ, "k mod p" over GF(p)."""
    return field.scalar(text)
