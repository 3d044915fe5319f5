#!/usr/bin/env python3

"""
Exact coefficient fields: the rationals (arbitrary precision fractions) and
prime fields F_p. A FieldSpec does arithmetic on *raw* canonical values
(`Fraction` for Q, `int` in [0, p) for F_p); the polynomial kernel works on raw
values, FieldElement wraps a raw value together with its spec for the public
surface.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exceptions import CharacteristicZeroError, DivisionByZero, MixedFieldError, NotPrime

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

MAX_MODULUS: int = 2**31

Raw = Union[Fraction, int]
Scalar = Union[int, Fraction, str, "FieldElement"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.modulus != 0:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if not is_prime(self.modulus):
                raise NotPrime(f"{self.modulus} is not a prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p: int, max_modulus: int = MAX_MODULUS) -> "FieldSpec":
        if p > max_modulus:
            raise NotPrime(f"modulus {p} exceeds the configured limit {max_modulus}")
        return cls(PRIME_FIELD, p)

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_rationals(self) -> bool:
        return self.kind == RATIONALS

    def __str__(self) -> str:
        return "QQ" if self.is_rationals else f"GF({self.modulus})"

    # -- raw arithmetic ---------------------------------------------------

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.is_rationals else 1

    def convert(self, value: Scalar) -> Raw:
        """Canonical raw value of an int, Fraction, "a/b" literal or FieldElement."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise MixedFieldError(f"element of {value.spec} used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {type(value).__name__} to a field element")
        if self.is_rationals:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, int):
            return value % p
        num, den = value.numerator % p, value.denominator % p
        if den == 0:
            raise DivisionByZero(f"denominator of {value} vanishes in {self}")
        return num * pow(den, -1, p) % p

    def is_zero(self, a: Raw) -> bool:
        return a == 0

    def is_canonical(self, a: object) -> bool:
        if self.is_rationals:
            # Fraction normalises on construction: gcd 1, positive denominator
            return isinstance(a, Fraction)
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.modulus

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.is_rationals else (a + b) % self.modulus

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.is_rationals else (a - b) % self.modulus

    def neg(self, a: Raw) -> Raw:
        return -a if self.is_rationals else (-a) % self.modulus

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.is_rationals else (a * b) % self.modulus

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero(f"division by zero in {self}")
        return 1 / a if self.is_rationals else pow(a, -1, self.modulus)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.pow(self.inv(a), -e)
        return a**e if self.is_rationals else pow(a, e, self.modulus)

    def from_int(self, n: int) -> Raw:
        return Fraction(n) if self.is_rationals else n % self.modulus

    def element(self, value: Scalar) -> "FieldElement":
        return FieldElement(self, self.convert(value))

    def format(self, a: Raw) -> str:
        return str(a)


def field_from_characteristic(chi: int) -> FieldSpec:
    if chi == 0:
        return FieldSpec.rationals()
    return FieldSpec.prime_field(chi)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: Raw

    def __post_init__(self) -> None:
        if not self.spec.is_canonical(self.value):
            raise ValueError(f"{self.value!r} is not a canonical element of {self.spec}")

    def _other(self, other: object) -> Raw:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFieldError(f"cannot combine elements of {self.spec} and {other.spec}")
            return other.value
        return self.spec.convert(other)  # type: ignore[arg-type]

    def __add__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.div(self.value, self._other(other)))

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return FieldElement(self.spec, self.spec.div(self._other(other), self.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __bool__(self) -> bool:
        return not self.spec.is_zero(self.value)

    def __str__(self) -> str:
        return self.spec.format(self.value)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))


def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    if x.spec != y.spec:
        raise MixedFieldError(f"cannot combine elements of {x.spec} and {y.spec}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def frobenius_root(c: FieldElement, nu: int) -> FieldElement:
    """
    The element r with r^(chi^nu) = c. On a prime field the Frobenius map
    y -> y^p is the identity (Fermat), so r is c itself.
    """
    spec = c.spec
    if spec.characteristic == 0:
        raise CharacteristicZeroError("chi-th roots are only defined in positive characteristic")
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    return c
