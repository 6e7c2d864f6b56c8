"""Polynomials in y with coefficients in k[x], and their discriminants."""

from __future__ import annotations

from typing import Sequence

from .field import check_characteristic
from .poly import Poly
from .polymat import poly_det


class BiPoly:
    """sum_j c_j(x) y^j, stored as the tuple (c_0, c_1, ...)."""

    __slots__ = ("field", "cy")

    def __init__(self, field, cy: Sequence[Poly]):
        cs = [c if isinstance(c, Poly) else Poly(field, [c]) for c in cy]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.cy = tuple(cs)

    @classmethod
    def from_terms(cls, field, terms: dict) -> "BiPoly":
        """Build from {(i, j): coeff} meaning coeff * x^i * y^j."""
        if not terms:
            return cls(field, [])
        dy = max(j for _, j in terms)
        cols: list[dict] = [dict() for _ in range(dy + 1)]
        for (i, j), c in terms.items():
            cols[j][i] = cols[j].get(i, 0) + c
        cy = []
        for col in cols:
            if col:
                n = max(col) + 1
                cy.append(Poly(field, [col.get(i, 0) for i in range(n)]))
            else:
                cy.append(Poly(field))
        return cls(field, cy)

    @property
    def degree_y(self) -> int:
        return len(self.cy) - 1

    @property
    def degree_x(self):
        return max(c.degree for c in self.cy)

    def is_monic_y(self) -> bool:
        return bool(self.cy) and self.cy[-1] == 1

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out = [Poly(self.field)] * (len(self.cy) + len(other.cy) - 1 or 1)
        for i, a in enumerate(self.cy):
            for j, b in enumerate(other.cy):
                if a and b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.field, out)

    def deriv_y(self) -> "BiPoly":
        return BiPoly(self.field, [c * j for j, c in enumerate(self.cy)][1:])

    def at_x(self, x0) -> Poly:
        """Specialize x = x0, giving a polynomial in y."""
        return Poly(self.field, [c(x0) for c in self.cy])

    def terms(self) -> dict:
        out = {}
        for j, c in enumerate(self.cy):
            for i, a in enumerate(c.coeffs):
                if a:
                    out[(i, j)] = a
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.cy == other.cy

    def __hash__(self):
        return hash(self.cy)

    def to_str(self) -> str:
        parts = []
        for j in range(len(self.cy) - 1, -1, -1):
            c = self.cy[j]
            if not c:
                continue
            ymono = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            cs = c.to_str("x")
            nterms = sum(1 for a in c.coeffs if a)
            if not ymono:
                neg = cs.startswith("-")
                body = cs[1:] if neg else cs
            elif cs == "1":
                body, neg = ymono, False
            elif cs == "-1":
                body, neg = ymono, True
            elif nterms == 1:
                neg = cs.startswith("-")
                body = f"{cs.lstrip('-')}*{ymono}"
            else:
                body, neg = f"({cs})*{ymono}", False
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts) if parts else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BiPoly({self.to_str()!r})"


def sylvester_matrix(f: Sequence[Poly], g: Sequence[Poly], field) -> list[list[Poly]]:
    """Sylvester matrix of two polynomials in y given by their y-coefficients."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = Poly(field)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant_y(f: BiPoly, g: BiPoly) -> Poly:
    if not f.cy or not g.cy:
        return Poly(f.field)
    if f.degree_y == 0:
        return f.cy[0] ** g.degree_y
    if g.degree_y == 0:
        return g.cy[0] ** f.degree_y
    return poly_det(sylvester_matrix(f.cy, g.cy, f.field), f.field)


def discriminant_y(f: BiPoly) -> Poly:
    """disc_y(f) = (-1)^(d(d-1)/2) * Res_y(f, df/dy) for f monic in y."""
    if not f.is_monic_y():
        raise ValueError("discriminant_y requires a polynomial monic in y")
    d = f.degree_y
    if d < 1:
        raise ValueError("discriminant_y requires y-degree at least 1")
    check_characteristic(f.field, d)
    res = resultant_y(f, f.deriv_y())
    return -res if (d * (d - 1) // 2) % 2 else res


def binary_cubic_discriminant(p: Poly, q: Poly, r: Poly, s: Poly) -> Poly:
    """Discriminant of p z^3 + q z^2 w + r z w^2 + s w^3."""
    return (q * q * r * r - p * r * r * r * 4 - q * q * q * s * 4
            - p * p * s * s * 27 + p * q * r * s * 18)
