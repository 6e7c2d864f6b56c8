"""Dense univariate polynomials and rational functions over a ground field."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import QQ, RATIONAL_TYPES, Fp

NEG_INF = float("-inf")  # degree of the zero polynomial


def _fmt_scalar(c) -> str:
    if isinstance(c, Fp):
        return str(c.centered())
    if isinstance(c, RATIONAL_TYPES) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fp) + RATIONAL_TYPES)


class Poly:
    """Immutable polynomial with coefficients in ascending degree order."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field, cs: list) -> "Poly":
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def const(cls, field, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def x(cls, field) -> "Poly":
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def monomial(cls, field, n: int, c=1) -> "Poly":
        return cls._raw(field, [field.zero] * n + [field(c)])

    @classmethod
    def from_roots(cls, field, roots: Iterable) -> "Poly":
        out = cls.const(field, 1)
        x = cls.x(field)
        for r in roots:
            out = out * (x - r)
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(self.field, cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = self.field(other)
            if not c:
                return Poly._raw(self.field, [])
            return Poly._raw(self.field, [a * c for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, [])
        cs = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                cs[i + j] += ai * bj
        return Poly._raw(self.field, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(r) - 1 < db:
            return Poly._raw(self.field, []), self
        inv = 1 / other.coeffs[-1]
        q = [self.field.zero] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] -= c * b[j]
        return Poly._raw(self.field, q), Poly._raw(self.field, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "Poly") -> bool:
        if not self:
            return not other
        return not (other % self)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == Poly(self.field, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, point):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def deriv(self) -> "Poly":
        return Poly._raw(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if not self:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly._raw(self.field, [c * inv for c in self.coeffs])

    def shift_x(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if not self:
            return self
        return Poly._raw(self.field, [self.field.zero] * k + list(self.coeffs))

    def reverse(self, n: int | None = None) -> "Poly":
        """x^n * p(1/x); n defaults to the degree."""
        if not self:
            return self
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("reversal length below degree")
        cs = [self.field.zero] * (n - self.degree) + list(reversed(self.coeffs))
        return Poly._raw(self.field, cs)

    def valuation(self):
        """Order of vanishing at x = 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return float("inf")

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            neg = (c.centered() < 0) if isinstance(c, Fp) else (c < 0)
            mag = -c if neg else c
            s = _fmt_scalar(mag)
            if i == 0:
                body = s
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if s == "1" else f"{s}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (h, s, t) with s*f + t*g = h = monic gcd(f, g)."""
    field = f.field
    r0, r1 = f, g
    s0, s1 = Poly.const(field, 1), Poly(field)
    t0, t1 = Poly(field), Poly.const(field, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant."""
    if not f:
        raise ValueError("squarefree test of the zero polynomial")
    return poly_gcd(f, f.deriv()).degree <= 0


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return Poly(f.field)
    return (f * g).exquo(poly_gcd(f, g)).monic()


class RationalFunction:
    """Element of k(x) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _reduced: bool = False):
        if den is None:
            den = Poly.const(num.field, 1)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Poly.const(num.field, 1)
            elif not den.is_const():
                g = poly_gcd(num, den)
                if not g.is_const():
                    num, den = num.exquo(g), den.exquo(g)
            lc = den.lc
            if lc != 1:
                inv = 1 / lc
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def const(cls, field, c) -> "RationalFunction":
        return cls(Poly.const(field, c))

    @classmethod
    def x_power(cls, field, n: int) -> "RationalFunction":
        """x^n for any integer n (Laurent monomial)."""
        if n >= 0:
            return cls(Poly.monomial(field, n), _reduced=False)
        return cls(Poly.const(field, 1), Poly.monomial(field, -n), _reduced=True)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self) -> bool:
        return self.den.is_const()

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num

    @property
    def degree(self):
        """deg(num) - deg(den): minus the order of vanishing at infinity."""
        if not self.num:
            return NEG_INF
        return self.num.degree - self.den.degree

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, _reduced=True)
        if _is_scalar(other):
            return RationalFunction(Poly(self.field, [other]), _reduced=True)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        if self.den.is_const():
            return RationalFunction(self.num * o.den + o.num, o.den, _reduced=True)
        if o.den.is_const():
            return RationalFunction(self.num + o.num * self.den, self.den, _reduced=True)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RationalFunction(Poly(self.field), _reduced=True)
        if self.den.is_const() and o.den.is_const():
            return RationalFunction(self.num * o.num, _reduced=True)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = self.num.exquo(g1) * o.num.exquo(g2)
        den = self.den.exquo(g2) * o.den.exquo(g1)
        return RationalFunction(num, den, _reduced=den.lc == 1)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num, _reduced=self.num.lc == 1)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, point):
        d = self.den(point)
        if not d:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num(point) / d

    def deriv(self) -> "RationalFunction":
        return RationalFunction(self.num.deriv() * self.den - self.num * self.den.deriv(),
                                self.den * self.den)

    def order_at(self, point) -> int:
        """Order of vanishing at a finite point (negative for poles)."""
        if not self.num:
            return float("inf")
        lin = Poly(self.field, [-self.field(point), 1])
        n = 0
        num, den = self.num, self.den
        while not num(point):
            num = num.exquo(lin)
            n += 1
        while not den(point):
            den = den.exquo(lin)
            n -= 1
        return n

    def to_str(self, var: str = "x") -> str:
        if self.den.is_const():
            return self.num.to_str(var)
        # Laurent monomial denominators print as negative powers.
        if self.den.coeffs[-1] == 1 and all(not c for c in self.den.coeffs[:-1]):
            k = self.den.degree
            terms = []
            for i in range(len(self.num.coeffs) - 1, -1, -1):
                c = self.num.coeffs[i]
                if c:
                    terms.append((i - k, c))
            parts = []
            for e, c in terms:
                neg = (c.centered() < 0) if isinstance(c, Fp) else (c < 0)
                s = _fmt_scalar(-c if neg else c)
                if e == 0:
                    body = s
                else:
                    mono = var if e == 1 else f"{var}^{e}"
                    body = mono if s == "1" else f"{s}*{mono}"
                if not parts:
                    parts.append(("-" if neg else "") + body)
                else:
                    parts.append((" - " if neg else " + ") + body)
            return "".join(parts)
        n = self.num.to_str(var)
        if len(self.num.coeffs) > 1 and sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        return f"{n}/({self.den.to_str(var)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RationalFunction({self.to_str()!r})"


def as_rational(v, field=QQ) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Poly):
        return RationalFunction(v, _reduced=True)
    return RationalFunction(Poly(field, [v]), _reduced=True)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: Poly) -> list:
    """Distinct roots of f lying in the ground field, sorted.

    Over the rationals this is the rational root test; over GF(p) every
    residue is tried.
    """
    if not f:
        raise ValueError("roots of the zero polynomial")
    field = f.field
    if field.char:
        return [field(a) for a in range(field.char) if not f(field(a))]
    roots = set()
    g = f
    while g and not g.coeffs[0]:
        roots.add(field(0))
        g = Poly._raw(field, list(g.coeffs[1:]))
    if g.degree <= 0:
        return sorted(roots)
    den = 1
    for c in g.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    den = int(den)
    ints = [int(c * den) for c in g.coeffs]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (field(Fraction(p, q)), field(Fraction(-p, q))):
                if not g(cand):
                    roots.add(cand)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
