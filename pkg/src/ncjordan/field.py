"""Exact scalar fields: the rationals and prime fields of odd characteristic."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union


class FieldError(ValueError):
    pass


class Residue:
    """An element of GF(p), stored as its canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, (int, Fraction)):
            return GF(self.p).to_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) / self

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pow__(self, k: int):
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and o == self.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]


class Field:
    """Common interface; concrete fields are :data:`QQ` and ``GF(p)``."""

    characteristic: int = 0
    token: str = ""

    def __call__(self, x) -> Scalar:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __repr__(self):
        return f"Field({self.token!r})"


class Rationals(Field):
    characteristic = 0
    token = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Residue):
            raise FieldError("cannot coerce a prime-field residue into Q")
        if isinstance(x, str):
            return parse_rational(x)
        if isinstance(x, Rational):
            return Fraction(x.numerator, x.denominator)
        if hasattr(x, "numerator") and hasattr(x, "denominator"):
            return Fraction(int(x.numerator), int(x.denominator))
        raise FieldError(f"not an exact rational: {x!r}")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def serialize(self, x: Fraction) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class PrimeField(Field):
    def __init__(self, p: int):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not a prime")
        self.characteristic = p
        self.token = f"p{p}"

    @property
    def p(self) -> int:
        return self.characteristic

    def to_int(self, x) -> int:
        """Canonical representative in [0, p) of an integer, fraction or residue."""
        p = self.characteristic
        if isinstance(x, Residue):
            if x.p != p:
                raise FieldError(f"mixing GF({x.p}) and GF({p})")
            return x.value
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Rational) or hasattr(x, "denominator"):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise FieldError(f"{x} has denominator divisible by {p}")
            return num * pow(den, -1, p) % p
        raise FieldError(f"cannot coerce {x!r} into GF({p})")

    def __call__(self, x) -> Residue:
        return Residue(self.to_int(x), self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("p", self.characteristic))

    def serialize(self, x) -> str:
        return str(self.to_int(x))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise FieldError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_field(token: str) -> Field:
    """Parse ``q``/``Q`` or ``p<N>``/``GF(N)`` into a field."""
    t = token.strip()
    if t.lower() in ("q", "qq", "rationals"):
        return QQ
    m = re.fullmatch(r"(?:p|P|GF\()(\d+)\)?", t)
    if m:
        return GF(int(m.group(1)))
    raise FieldError(f"unknown field {token!r}; expected 'q' or 'p<N>'")
