"""Ground fields: the rationals and prime fields GF(p).

A field object converts Python numbers into its elements and exposes
``zero``, ``one`` and ``char``.  Elements support the usual arithmetic
operators, mixed with plain ints, so polynomial code stays field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

MPQ = type(mpq())
RATIONAL_TYPES = (MPQ, Fraction)

DEFAULT_PRIME = 10007


class CharacteristicError(ValueError):
    """Raised when the field characteristic is too small for a cover degree."""


class Rationals:
    char = 0
    zero = mpq(0)
    one = mpq(1)

    def __call__(self, value):
        if isinstance(value, MPQ):
            return value
        if isinstance(value, str):
            return mpq(value.strip())
        if isinstance(value, Fp):
            raise TypeError("cannot coerce a prime-field element to a rational")
        return mpq(value)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("QQ")

    def to_json(self):
        return 0


class Fp:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, RATIONAL_TYPES):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Fp(pow(pow(self.v, -1, self.p), -n, self.p), self.p)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def centered(self) -> int:
        """Representative in (-p/2, p/2]."""
        return self.v - self.p if self.v > self.p // 2 else self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.centered())


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.char = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, value) -> Fp:
        if isinstance(value, Fp):
            if value.p != self.char:
                raise ValueError("element of a different prime field")
            return value
        if isinstance(value, str):
            value = mpq(value.strip())
        if isinstance(value, RATIONAL_TYPES):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.char == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.char})")
            return Fp(num * pow(den, -1, self.char), self.char)
        return Fp(int(value), self.char)

    def __repr__(self):
        return f"GF({self.char})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))

    def to_json(self):
        return self.char


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(char: int):
    """Field of the given characteristic (0 means the rationals)."""
    return QQ if char == 0 else GF(char)


def check_characteristic(field, d: int) -> None:
    """Enforce char k = 0 or char k > d."""
    if field.char != 0 and field.char <= d:
        raise CharacteristicError(
            f"characteristic {field.char} must exceed the cover degree {d}")
