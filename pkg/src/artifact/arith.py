"""Exact coefficient arithmetic.

Two coefficient fields are supported: the rationals (values are
:class:`fractions.Fraction`) and prime fields ``F_p`` (values are ``int``
residues in ``[0, p)``).  Polynomials and matrices store raw values and
carry the :class:`Field` they belong to; :class:`Scalar` pairs a raw value
with its field for use at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

DEFAULT_PRIME = 32003

Raw = Union[int, Fraction]


class Field:
    """Base class for coefficient fields.

    Subclasses implement ``normalize`` (canonical representative of a raw
    value) and ``inv``.  All other operations go through the native ``+``,
    ``-``, ``*`` of the raw values followed by ``normalize``.
    """

    characteristic: int = 0
    zero: Raw
    one: Raw

    @property
    def is_prime(self) -> bool:
        return self.characteristic != 0

    def normalize(self, v: Raw) -> Raw:
        raise NotImplementedError

    def inv(self, v: Raw) -> Raw:
        raise NotImplementedError

    def from_int(self, k: int) -> Raw:
        return self.normalize(k)

    def from_fraction(self, num: int, den: int) -> Raw:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return self.normalize(self.from_int(num) * self.inv(self.from_int(den)))

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a - b)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a * b)

    def neg(self, a: Raw) -> Raw:
        return self.normalize(-a)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a * self.inv(b))

    def to_text(self, v: Raw) -> str:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, v: Raw) -> Fraction:
        return v if isinstance(v, Fraction) else Fraction(v)

    def inv(self, v: Raw) -> Fraction:
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(v)

    def to_text(self, v: Raw) -> str:
        return str(Fraction(v))

    def signed(self, v: Raw) -> Fraction:
        return Fraction(v)

    def label(self) -> str:
        return "q"

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 3 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        if p >= 2**31:
            # keeps products of two residues inside int64 for the numpy paths
            raise ValueError(f"modulus {p} does not fit the machine-word bound 2^31")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def p(self) -> int:
        return self.characteristic

    def normalize(self, v: Raw) -> int:
        if isinstance(v, Fraction):
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return v % self.p

    def inv(self, v: Raw) -> int:
        v = self.normalize(v)
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(v, -1, self.p)

    def signed(self, v: int) -> int:
        """Symmetric representative in ``(-p/2, p/2]``."""
        return v - self.p if v > self.p // 2 else v

    def to_text(self, v: Raw) -> str:
        return str(self.signed(v))

    def label(self) -> str:
        return f"fp:{self.p}"

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse ``q``, ``fp:<p>`` or ``fp <p>`` into a field."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp"):
        rest = t[2:].lstrip(": ")
        return GF(int(rest)) if rest else GF()
    raise ValueError(f"unknown field {text!r} (expected q or fp:<prime>)")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field.

    Arithmetic between scalars of different fields raises ``TypeError``.
    """

    field: Field
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.normalize(self.value))

    def _check(self, other: Scalar | int) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise TypeError(f"cannot mix {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return Scalar(self.field, self.value + self._check(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.value - self._check(other))

    def __rsub__(self, other):
        return Scalar(self.field, self._check(other) - self.value)

    def __mul__(self, other):
        return Scalar(self.field, self.value * self._check(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._check(other)))

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.normalize(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.to_text(self.value)

    def inverse(self) -> Scalar:
        return field_inverse(self)


def canonicalize(num: int, den: int) -> Scalar:
    """Canonical rational ``num/den``: reduced, positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Scalar(QQ, Fraction(num, den))


def field_inverse(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.inv(a.value))
