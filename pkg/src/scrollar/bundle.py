"""Vector bundles on the projective line as lattice pairs.

A bundle of rank r is a pair of full-rank lattices in k(x)^r: a k[x]-lattice
``finite`` (the affine chart) and a lattice over the local ring at infinity
``infinity``.  Both are given by square matrices whose columns are basis
vectors.  Global sections of E(n) are the v in the finite lattice with
x^(-n) v in the infinity lattice.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import linalg
from .field import QQ
from .poly import Poly, RationalFunction, as_rational, poly_gcd, poly_lcm
from .polymat import PolyMatrix, common_denominator, constrained_kernel_basis, fraction_free_solve, weak_popov


@dataclass(frozen=True)
class SplittingType:
    """Sorted degrees (a_1 <= ... <= a_r) of O(a_1) + ... + O(a_r)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("splitting type of rank 0")
        object.__setattr__(self, "parts", tuple(sorted(int(a) for a in self.parts)))

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def shifted(self, n: int) -> "SplittingType":
        return SplittingType(tuple(a + n for a in self.parts))

    def dual(self) -> "SplittingType":
        return SplittingType(tuple(-a for a in self.parts))

    def to_json(self) -> dict:
        h0, h1 = cohomology(self)
        return {"type": list(self.parts), "degree": self.degree, "h0": h0, "h1": h1}

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.parts) + ")"


def cohomology(t: SplittingType | Sequence[int]) -> tuple[int, int]:
    parts = t.parts if isinstance(t, SplittingType) else tuple(t)
    return (sum(max(a + 1, 0) for a in parts), sum(max(-a - 1, 0) for a in parts))


def end_h1(t: SplittingType | Sequence[int]) -> int:
    """h^1 of End(O(a_1) + ... + O(a_r))."""
    parts = t.parts if isinstance(t, SplittingType) else tuple(t)
    return sum(max(ai - aj - 1, 0) for ai in parts for aj in parts)


class InvalidLatticeError(ValueError):
    pass


def _rat_matrix(field, m) -> list[list[RationalFunction]]:
    return [[e if isinstance(e, RationalFunction) else as_rational(
        e if isinstance(e, Poly) else Poly(field, [e]), field) for e in row] for row in m]


def _rzero(field):
    return RationalFunction.const(field, 0)


def _rone(field):
    return RationalFunction.const(field, 1)


@dataclass(frozen=True)
class InflationDatum:
    """A point y0 and independent fiber vectors s_1..s_m of E at y0.

    Vectors are coordinates with respect to the finite basis.  The defining
    quotient E^dual_y0 -> k^m is w -> (<w, s_i>)_i.
    """

    point: object
    vectors: tuple[tuple, ...]

    @property
    def length(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class NoDrop:
    reason: str  # "spanning" or "V=0"
    detail: str = ""


class BundleLattice:
    def __init__(self, field, finite, infinity, *, check: bool = True):
        self.field = field
        self.finite = _rat_matrix(field, finite)
        self.infinity = _rat_matrix(field, infinity)
        self.rank = len(self.finite)
        if check:
            for name, m in (("finite", self.finite), ("infinity", self.infinity)):
                if len(m) != self.rank or any(len(r) != self.rank for r in m):
                    raise InvalidLatticeError(f"{name} chart basis must be {self.rank}x{self.rank}")
            if not self.det_finite:
                raise InvalidLatticeError("finite chart basis singular")
            if not self.det_infinity:
                raise InvalidLatticeError("infinity chart basis singular")

    @classmethod
    def standard(cls, parts: Sequence[int], field=QQ) -> "BundleLattice":
        """Identity / diag(x^a_i) presentation of O(a_1) + ... + O(a_r)."""
        r = len(parts)
        one, zero = _rone(field), _rzero(field)
        fin = [[one if i == j else zero for j in range(r)] for i in range(r)]
        inf = [[RationalFunction.x_power(field, parts[i]) if i == j else zero
                for j in range(r)] for i in range(r)]
        return cls(field, fin, inf)

    @cached_property
    def det_finite(self) -> RationalFunction:
        return linalg.det(self.finite, _rzero(self.field), _rone(self.field))

    @cached_property
    def det_infinity(self) -> RationalFunction:
        return linalg.det(self.infinity, _rzero(self.field), _rone(self.field))

    @property
    def degree(self) -> int:
        return int(self.det_infinity.degree - self.det_finite.degree)

    def dual(self) -> "BundleLattice":
        z, o = _rzero(self.field), _rone(self.field)
        fin = linalg.transpose(linalg.inverse(self.finite, z, o))
        inf = linalg.transpose(linalg.inverse(self.infinity, z, o))
        return BundleLattice(self.field, fin, inf, check=False)

    def twist(self, n: int) -> "BundleLattice":
        xn = RationalFunction.x_power(self.field, n)
        inf = [[e * xn for e in row] for row in self.infinity]
        return BundleLattice(self.field, self.finite, inf, check=False)

    def tensor(self, other: "BundleLattice") -> "BundleLattice":
        def kron(a, b):
            return [[a[i][j] * b[k][l] for j in range(len(a)) for l in range(len(b))]
                    for i in range(len(a)) for k in range(len(b))]
        return BundleLattice(self.field, kron(self.finite, other.finite),
                             kron(self.infinity, other.infinity), check=False)

    def endomorphisms(self) -> "BundleLattice":
        return self.tensor(self.dual())

    @cached_property
    def _transition(self) -> tuple[PolyMatrix, Poly]:
        """(M, q) with q * infinity^-1 * finite = M polynomial."""
        f = self.field
        n_inf, d_inf = common_denominator(self.infinity, f)
        n_fin, d_fin = common_denominator(self.finite, f)
        D, X = fraction_free_solve(n_inf, n_fin, f)
        q = D * d_fin
        M = [[e * d_inf for e in row] for row in X]
        g = q
        for row in M:
            for e in row:
                if g.degree == 0:
                    break
                g = poly_gcd(g, e)
        if g.degree > 0:
            q = q.exquo(g)
            M = [[e.exquo(g) for e in row] for row in M]
        return PolyMatrix(f, M), q

    @cached_property
    def _reduction(self):
        """Column reduction of the transition matrix.

        Returns (U, degrees): the rows of U are finite-chart coordinate
        vectors g_j of a k[x]-basis of the finite lattice such that
        x^(a_j) g_j is a basis of the infinity lattice, with a_j = degrees[j].
        """
        M, q = self._transition
        res = weak_popov(M.transpose())
        a = tuple(int(q.degree) - d for d in res.row_degrees)
        return res.transform, a

    def splitting_type(self, method: str = "reduction") -> SplittingType:
        if method == "reduction":
            return SplittingType(self._reduction[1])
        if method == "profile":
            return splitting_type_from_profile(self)
        raise ValueError(f"unknown method {method!r}")

    def global_sections(self, n: int = 0) -> list[list[Poly]]:
        """k-basis of H^0(E(n)), as coordinate vectors in the finite basis."""
        U, a = self._reduction
        out = []
        for j, aj in enumerate(a):
            for k in range(aj + n + 1):
                out.append([e.shift_x(k) for e in U.rows[j]])
        return out

    def h0(self, n: int = 0) -> int:
        return sum(max(aj + n + 1, 0) for aj in self._reduction[1])

    def ambient(self, coords: Sequence[Poly]) -> list[RationalFunction]:
        """Vector of k(x)^r with the given finite-basis coordinates."""
        z = _rzero(self.field)
        col = [[as_rational(c, self.field)] for c in coords]
        return [r[0] for r in linalg.matmul(self.finite, col, z)]

    def frame(self) -> tuple[list[list[RationalFunction]], tuple[int, ...]]:
        """Ambient frame (g_j) and degrees (a_j) realizing E = sum O(a_j)."""
        U, a = self._reduction
        return [self.ambient(row) for row in U.rows], a

    def flip(self) -> "BundleLattice":
        """The same bundle after the coordinate change x -> 1/x."""
        frame, a = self.frame()
        r = self.rank
        f = self.field
        fin = [[_substitute_inverse(frame[j][i] * RationalFunction.x_power(f, a[j]))
                for j in range(r)] for i in range(r)]
        inf = [[fin[i][j] * RationalFunction.x_power(f, a[j]) for j in range(r)]
               for i in range(r)]
        return BundleLattice(f, fin, inf)

    def __repr__(self):
        return f"BundleLattice(rank={self.rank}, degree={self.degree})"

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "finite": [[str(e) for e in row] for row in self.finite],
                "infinity": [[str(e) for e in row] for row in self.infinity]}

    @classmethod
    def from_json(cls, data: dict | str, field=QQ) -> "BundleLattice":
        from .parse import parse_rational
        if isinstance(data, str):
            data = json.loads(data)
        fin = [[parse_rational(s, field) for s in row] for row in data["finite"]]
        inf = [[parse_rational(s, field) for s in row] for row in data["infinity"]]
        if "rank" in data and (len(fin) != data["rank"]):
            raise InvalidLatticeError("rank does not match the finite chart basis")
        return cls(field, fin, inf)


def _substitute_inverse(r: RationalFunction) -> RationalFunction:
    """r(1/x)."""
    f = r.field
    n = max(r.num.degree, r.den.degree, 0)
    num = r.num.reverse(n) if r.num else r.num
    den = r.den.reverse(n)
    return RationalFunction(num, den)


def splitting_type(B: BundleLattice, method: str = "reduction") -> SplittingType:
    return B.splitting_type(method)


def global_sections(B: BundleLattice, n: int = 0) -> list[list[Poly]]:
    return B.global_sections(n)


# Independent route: bounded-degree linear algebra on section coefficients.

def sections_by_linear_algebra(B: BundleLattice, n: int) -> list[list[Poly]]:
    """Basis of H^0(E(n)) by solving for coefficient vectors directly.

    With M = q infinity^-1 finite, c is a section iff every entry of M c has
    degree <= n + deg q.  Since c = adj(M) (M c) / det M, the degrees of c are
    bounded by (r-1) maxdeg(M) + n + deg q - deg det M.
    """
    system = _section_system(B, n)
    if system is None:
        return []
    rows, nvars, D = system
    f, r = B.field, B.rank
    basis = linalg.nullspace(rows, nvars, f.zero, f.one)
    return [[Poly(f, v[j * (D + 1):(j + 1) * (D + 1)]) for j in range(r)] for v in basis]


def h0_by_linear_algebra(B: BundleLattice, n: int) -> int:
    """dim H^0(E(n)) from the rank of the same coefficient system."""
    system = _section_system(B, n)
    if system is None:
        return 0
    rows, nvars, _ = system
    return nvars - linalg.rank(rows)


def _section_system(B: BundleLattice, n: int):
    M, q = B._transition
    f = B.field
    r = B.rank
    N = n + int(q.degree)
    maxdeg = max(int(M.max_degree()), 0)
    D = (r - 1) * maxdeg + N - int(M.det().degree)
    if D < 0 or N < 0:
        return None
    nvars = r * (D + 1)
    top = maxdeg + D
    rows = []
    for i in range(r):
        for t in range(N + 1, top + 1):
            row = [f.zero] * nvars
            for j in range(r):
                mij = M.rows[i][j]
                for k in range(D + 1):
                    row[j * (D + 1) + k] = mij.coeff(t - k)
            if any(row):
                rows.append(row)
    return rows, nvars, D


def splitting_type_from_profile(B: BundleLattice) -> SplittingType:
    """Recover (a_i) from h0(E(n)) - h0(E(n-1)) = #{i : a_i + n >= 0}."""
    r = B.rank
    cache: dict[int, int] = {}

    def h0(n):
        if n not in cache:
            cache[n] = h0_by_linear_algebra(B, n)
        return cache[n]

    lo = 0
    while h0(lo) > 0:
        lo -= 1
    hi = lo + 1
    while h0(hi) - h0(hi - 1) < r:
        hi += 1
    parts = []
    prev = 0
    for n in range(lo + 1, hi + 1):
        c = h0(n) - h0(n - 1)
        parts.extend([-n] * (c - prev))
        prev = c
    return SplittingType(tuple(parts))


# Inflations.

def _check_datum(B: BundleLattice, datum: InflationDatum):
    f = B.field
    vecs = [[f(c) for c in v] for v in datum.vectors]
    m = len(vecs)
    if not 1 <= m <= B.rank:
        raise ValueError(f"inflation length {m} outside 1..{B.rank}")
    if any(len(v) != B.rank for v in vecs):
        raise ValueError("fiber vectors must have length equal to the rank")
    if linalg.rank(vecs) != m:
        raise ValueError("fiber vectors are linearly dependent")
    return f(datum.point), vecs


def inflate(B: BundleLattice, datum: InflationDatum) -> BundleLattice:
    """Finite lattice L + sum_i (x - y0)^-1 s_i k[x]; infinity lattice unchanged."""
    f = B.field
    y0, vecs = _check_datum(B, datum)
    r = B.rank
    cols = [list(v) for v in vecs]
    for i in range(r):
        if len(cols) == r:
            break
        e = [f.one if k == i else f.zero for k in range(r)]
        if linalg.rank(cols + [e]) > len(cols):
            cols.append(e)
    P = [[as_rational(Poly(f, [cols[j][i]]), f) for j in range(r)] for i in range(r)]
    inv_lin = RationalFunction(Poly.const(f, 1), Poly(f, [-y0, 1]))
    one = _rone(f)
    scale = [inv_lin if j < len(vecs) else one for j in range(r)]
    FP = linalg.matmul(B.finite, P, _rzero(f))
    fin = [[FP[i][j] * scale[j] for j in range(r)] for i in range(r)]
    return BundleLattice(f, fin, B.infinity, check=False)


def defining_quotient_kernel(B: BundleLattice, datum: InflationDatum) -> PolyMatrix:
    """Row basis, in dual finite coordinates, of ker(E^dual -> k^m) for the datum."""
    y0, vecs = _check_datum(B, datum)
    return constrained_kernel_basis(B.field, B.rank, [(y0, v) for v in vecs])


def _qv_rank(B: BundleLattice, y0, vecs) -> int:
    sections = B.dual().global_sections(-2)
    values = [[c(y0) for c in s] for s in sections]
    if not values:
        return 0
    pairing = [[sum((a * b for a, b in zip(val, v)), B.field.zero) for v in vecs] for val in values]
    return linalg.rank(pairing)


def evaluation_image(B: BundleLattice, y0) -> list[list]:
    """Spanning vectors of V = image of H^0(E^dual (x) Omega) in the fiber at y0."""
    y0 = B.field(y0)
    return [[c(y0) for c in s] for s in B.dual().global_sections(-2)]


def predicted_inflation(B: BundleLattice, datum: InflationDatum) -> tuple[int, int, int]:
    """(h0, h1, rank q_V) of the inflation, from the exact cohomology law."""
    y0, vecs = _check_datum(B, datum)
    rk = _qv_rank(B, y0, vecs)
    h0 = B.h0(0)
    h1 = h0 - B.degree - B.rank
    return h0 + len(vecs) - rk, h1 - rk, rk


def select_effective_quotient(B: BundleLattice, y0, S: Sequence[InflationDatum]):
    """Pick q in S with h1 dropping by at least one, or explain why none must exist."""
    if not S:
        raise ValueError("empty set of quotients")
    f = B.field
    y0 = f(y0)
    h1 = B.h0(0) - B.degree - B.rank
    if h1 <= 0:
        raise ValueError("precondition violated: h1(E) = 0, nothing to drop")
    for q in S:
        if f(q.point) != y0:
            raise ValueError("all quotients must sit at the same point")
    span = [v for q in S for v in _check_datum(B, q)[1]]
    if linalg.rank(span) < B.rank:
        return NoDrop("spanning", f"subspaces span rank {linalg.rank(span)} < {B.rank}")
    V = evaluation_image(B, y0)
    if not V or linalg.rank(V) == 0:
        return NoDrop("V=0", f"no section of E^dual(x)Omega is nonzero at {y0}")
    for q in S:
        if _qv_rank(B, y0, _check_datum(B, q)[1]) >= 1:
            return q
    raise AssertionError("spanning quotients with V != 0 must contain an effective one")


# Random presentations for property suites.

def random_unimodular(field, r: int, rng: random.Random, steps: int = 6, maxdeg: int = 2) -> list[list[Poly]]:
    U = [[Poly.const(field, 1 if i == j else 0) for j in range(r)] for i in range(r)]
    if r == 1:
        return [[Poly.const(field, rng.choice([1, -1, 2]))]]
    for _ in range(steps):
        i, j = rng.sample(range(r), 2)
        g = Poly(field, [rng.randint(-3, 3) for _ in range(rng.randint(1, maxdeg + 1))])
        U[i] = [a + g * b for a, b in zip(U[i], U[j])]
    return U


def random_bundle(parts: Sequence[int], rng: random.Random, field=QQ, *, ambient: bool = True) -> BundleLattice:
    """A scrambled presentation of O(a_1) + ... + O(a_r).

    finite = g U and infinity = g diag(x^a) W with g a random nonsingular
    polynomial matrix, U unimodular over k[x] and W invertible over the
    local ring at infinity.  With ``ambient`` false, g is the identity.
    """
    r = len(parts)
    while ambient:
        g = [[Poly(field, [rng.randint(-4, 4), rng.randint(-2, 2)]) for _ in range(r)] for _ in range(r)]
        if PolyMatrix(field, g).det():
            break
    U = random_unimodular(field, r, rng)
    z = _rzero(field)
    W = [[z] * r for _ in range(r)]
    for i in range(r):
        W[i][i] = RationalFunction.const(field, rng.choice([1, -1, 2, 3]))
        for j in range(i + 1, r):
            W[i][j] = RationalFunction.x_power(field, -rng.randint(0, 2)) * rng.randint(-3, 3)
    if not ambient:
        g = [[Poly.const(field, 1 if i == j else 0) for j in range(r)] for i in range(r)]
    G = _rat_matrix(field, g)
    D = [[RationalFunction.x_power(field, parts[i]) if i == j else z for j in range(r)] for i in range(r)]
    fin = linalg.matmul(G, _rat_matrix(field, U), z)
    inf = linalg.matmul(linalg.matmul(G, D, z), W, z)
    return BundleLattice(field, fin, inf)
