"""Matrices over k[x]: weak Popov form, constrained kernels, lattice membership."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .poly import NEG_INF, Poly, RationalFunction, as_rational, poly_gcd, poly_lcm

log = logging.getLogger(__name__)


class RankDeficientError(ValueError):
    def __init__(self, rank: int, rows: int):
        super().__init__(f"matrix has rank {rank} < {rows} rows over k(x)")
        self.rank = rank
        self.rows = rows


class NotInLattice(ValueError):
    """The vector is not an integral combination of the lattice basis."""


class PolyMatrix:
    """Row-major matrix of polynomials over a common field."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = tuple(tuple(e if isinstance(e, Poly) else Poly(field, [e]) for e in r)
                          for r in rows)
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix dimensions must be positive")
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, field, n: int) -> "PolyMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field, entries: Sequence) -> "PolyMatrix":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        zero = Poly(self.field)
        return PolyMatrix(self.field, linalg.matmul(self.rows, other.rows, zero))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.field, list(zip(*self.rows)))

    def evaluate(self, point) -> list[list]:
        return [[e(point) for e in r] for r in self.rows]

    def row_degree(self, i: int):
        return max(e.degree for e in self.rows[i])

    def max_degree(self):
        return max(self.row_degree(i) for i in range(len(self.rows)))

    def det(self) -> Poly:
        return poly_det(self.rows, self.field)

    def to_rational(self) -> list[list[RationalFunction]]:
        return [[as_rational(e) for e in r] for r in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.to_json()})"


def poly_det(rows: Sequence[Sequence[Poly]], field) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Poly.const(field, 1)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = Poly.const(field, 1)
    for k in range(n - 1):
        if not m[k][k]:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return Poly(field)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exquo(prev)
            m[i][k] = Poly(field)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def fraction_free_solve(A: Sequence[Sequence[Poly]], B: Sequence[Sequence[Poly]], field) -> tuple[Poly, list[list[Poly]]]:
    """(D, X) with A X = D B and D = +-det A, by fraction-free Gauss-Jordan.

    Every intermediate entry is a minor of [A | B], so the divisions are exact.
    """
    n = len(A)
    m = [list(a) + list(b) for a, b in zip(A, B)]
    width = len(m[0]) if m else 0
    prev = Poly.const(field, 1)
    for k in range(n):
        if not m[k][k]:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            m[k], m[p] = m[p], m[k]
        piv = m[k][k]
        for i in range(n):
            if i == k:
                continue
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(width):
                if j == k:
                    continue
                v = row_i[j] * piv
                if mik and row_k[j]:
                    v = v - mik * row_k[j]
                row_i[j] = v if prev == 1 else v.exquo(prev)
            row_i[k] = Poly(field)
        prev = piv
    return prev, [row[n:] for row in m]


def common_denominator(rows: Sequence[Sequence[RationalFunction]], field) -> tuple[list[list[Poly]], Poly]:
    """(N, den) with rows = N / den entrywise."""
    den = Poly.const(field, 1)
    for r in rows:
        for e in r:
            den = poly_lcm(den, e.den)
    return [[e.num * den.exquo(e.den) for e in r] for r in rows], den


def rank_over_fraction_field(rows: Sequence[Sequence[Poly]]) -> int:
    return linalg.rank([[as_rational(e) for e in r] for r in rows])


def _pivot(row: Sequence[Poly]):
    """(degree, rightmost column attaining it); (-inf, -1) for a zero row."""
    deg = NEG_INF
    col = -1
    for j, e in enumerate(row):
        if e.degree >= deg and e:
            deg, col = e.degree, j
    return deg, col


@dataclass(frozen=True)
class PopovResult:
    reduced: PolyMatrix
    transform: PolyMatrix
    row_degrees: tuple[int, ...]


def weak_popov(M: PolyMatrix) -> PopovResult:
    """Mulders-Storjohann reduction to weak Popov form.

    Pivot of a row: rightmost entry of maximal degree.  The reduction only
    uses row operations ``row_a -= c*x^k*row_b``, so the accumulated
    transform is unimodular and ``transform @ M == reduced``.
    """
    field = M.field
    nr, nc = M.shape
    rows = [list(r) for r in M.rows]
    U = [[Poly.const(field, 1 if i == j else 0) for j in range(nr)] for i in range(nr)]
    piv = [_pivot(r) for r in rows]
    if any(c < 0 for _, c in piv):
        raise RankDeficientError(rank_over_fraction_field(M.rows), nr)
    while True:
        seen: dict[int, int] = {}
        clash = None
        for i, (_, c) in enumerate(piv):
            if c in seen:
                clash = (seen[c], i)
                break
            seen[c] = i
        if clash is None:
            break
        a, b = clash
        if piv[a][0] < piv[b][0]:
            a, b = b, a
        col = piv[a][1]
        shift = piv[a][0] - piv[b][0]
        coef = rows[a][col].lc / rows[b][col].lc
        rows[a] = [ea - eb.shift_x(shift) * coef for ea, eb in zip(rows[a], rows[b])]
        U[a] = [ea - eb.shift_x(shift) * coef for ea, eb in zip(U[a], U[b])]
        piv[a] = _pivot(rows[a])
        if piv[a][1] < 0:
            raise RankDeficientError(rank_over_fraction_field(M.rows), nr)
    reduced = PolyMatrix(field, rows)
    return PopovResult(reduced, PolyMatrix(field, U), tuple(int(d) for d, _ in piv))


def is_weak_popov(M: PolyMatrix) -> bool:
    cols = [_pivot(r)[1] for r in M.rows]
    return -1 not in cols and len(set(cols)) == len(cols)


def constrained_kernel_basis(field, n: int, constraints: Sequence[tuple]) -> PolyMatrix:
    """Row basis of {v in k[x]^n : functional . v(y0) = 0 for every constraint}.

    Constraints are processed one at a time starting from the identity basis;
    each independent one multiplies a single (low-degree) pivot row by
    ``x - y0`` after clearing the others, followed by weak Popov cleanup.
    Zero and already-implied constraints are skipped and logged.
    """
    basis = [list(r) for r in PolyMatrix.identity(field, n).rows]
    for idx, (y0, functional) in enumerate(constraints):
        y0 = field(y0)
        phi = [field(c) for c in functional]
        if len(phi) != n:
            raise ValueError(f"constraint {idx}: functional has length {len(phi)}, expected {n}")
        if not any(phi):
            log.info("constraint %d: zero functional skipped", idx)
            continue
        vals = [sum((c * e(y0) for c, e in zip(phi, row) if c), field.zero) for row in basis]
        live = [i for i, v in enumerate(vals) if v]
        if not live:
            log.info("constraint %d at %s: implied by earlier constraints, skipped", idx, y0)
            continue
        p = min(live, key=lambda i: (max(e.degree for e in basis[i]), -i))
        inv = 1 / vals[p]
        for i in live:
            if i != p:
                f = vals[i] * inv
                basis[i] = [a - b * f for a, b in zip(basis[i], basis[p])]
        lin = Poly(field, [-y0, 1])
        basis[p] = [e * lin for e in basis[p]]
        basis = [list(r) for r in weak_popov(PolyMatrix(field, basis)).reduced.rows]
    return PolyMatrix(field, basis)


class LatticeSolver:
    """Coordinates of vectors with respect to a square row basis over k[x]."""

    def __init__(self, A: PolyMatrix):
        nr, nc = A.shape
        if nr != nc:
            raise ValueError("lattice basis must be square")
        if not A.det():
            raise ValueError("singular lattice basis")
        self.A = A
        f = A.field
        zero = RationalFunction.const(f, 0)
        one = RationalFunction.const(f, 1)
        self.inverse = linalg.inverse(A.to_rational(), zero, one)
        self._zero = zero

    def coordinates(self, v: Sequence) -> list[RationalFunction]:
        """u with u A = v over k(x)."""
        f = self.A.field
        row = [[as_rational(e, f) for e in v]]
        return linalg.matmul(row, self.inverse, self._zero)[0]

    def solve(self, v: Sequence) -> list[Poly]:
        u = self.coordinates(v)
        if not all(c.is_poly() for c in u):
            raise NotInLattice("vector is not in the row lattice")
        return [c.num for c in u]


def solve_in_lattice(A: PolyMatrix, v: Sequence) -> list[Poly]:
    """Return polynomial u with u A = v; raise NotInLattice otherwise."""
    return LatticeSolver(A).solve(v)


def unimodular_completion(w: Sequence[Poly]) -> PolyMatrix:
    """Unimodular matrix whose first row is the primitive vector ``w``."""
    field = w[0].field
    n = len(w)
    cur = list(w)
    # Inverse of the accumulated column operations, updated by row operations.
    W = [[Poly.const(field, 1 if i == j else 0) for j in range(n)] for i in range(n)]
    while True:
        nz = [i for i, e in enumerate(cur) if e]
        if not nz:
            raise ValueError("zero vector has no unimodular completion")
        i = min(nz, key=lambda k: cur[k].degree)
        others = [j for j in nz if j != i]
        if not others:
            break
        for j in others:
            q, r = divmod(cur[j], cur[i])
            cur[j] = r
            W[i] = [a + q * b for a, b in zip(W[i], W[j])]
    if cur[i].degree != 0:
        raise ValueError("vector is not primitive")
    if i != 0:
        cur[0], cur[i] = cur[i], cur[0]
        W[0], W[i] = W[i], W[0]
    c = cur[0].coeffs[0]
    W[0] = [e * c for e in W[0]]
    return PolyMatrix(field, W)
