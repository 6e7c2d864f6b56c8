"""Finite covers of the projective line as explicit O-algebras.

A :class:`CoverAlgebra` of degree d is a free k[x]-module with basis
e_0 = 1, e_1, ..., e_{d-1} and a multiplication tensor, together with a
basis f_0, ..., f_{d-1} of the algebra over the local ring at infinity,
stored as the matrix ``infinity`` whose column j holds f_j in e-coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from math import ceil, gcd
from typing import Sequence

from . import linalg
from .bivariate import BiPoly, binary_cubic_discriminant, discriminant_y
from .bundle import BundleLattice, SplittingType
from .field import QQ, check_characteristic
from .poly import Poly, RationalFunction, as_rational, poly_lcm, rational_roots, squarefree
from .polymat import LatticeSolver, PolyMatrix, constrained_kernel_basis, poly_det, unimodular_completion


class InvalidAlgebraError(ValueError):
    pass


class MaximalityNotCertified(ValueError):
    """The visible order of a plane model could not be certified maximal."""


class DegenerateTraceForm(ValueError):
    pass


class NotAnIsomorphism(ValueError):
    def __init__(self, chart: str, message: str):
        super().__init__(f"{chart} chart: {message}")
        self.chart = chart


def _rz(field):
    return RationalFunction.const(field, 0)


def _ro(field):
    return RationalFunction.const(field, 1)


def lattice_basis_at_infinity(columns: Sequence[Sequence[RationalFunction]], field) -> list[list[RationalFunction]]:
    """Basis (as matrix columns) of the span of ``columns`` over the local ring at infinity.

    Column echelon form over a discrete valuation ring: in each row the pivot is
    a column whose entry has maximal degree, so every elimination multiplier
    has degree <= 0 and stays in the ring.
    """
    active = [list(c) for c in columns if any(c)]
    if not active:
        return []
    n = len(active[0])
    basis = []
    for i in range(n):
        cands = [k for k, c in enumerate(active) if c[i]]
        if not cands:
            continue
        p = max(cands, key=lambda k: active[k][i].degree)
        piv = active.pop(p)
        for c in active:
            if c[i]:
                m = c[i] / piv[i]
                for t in range(n):
                    if piv[t]:
                        c[t] = c[t] - m * piv[t]
        basis.append(piv)
        active = [c for c in active if any(c)]
    if active:
        raise InvalidAlgebraError("columns do not reduce to a basis")
    return [[basis[j][i] for j in range(len(basis))] for i in range(n)]


@dataclass(frozen=True)
class PinchSpec:
    """Gluing data: pairs (y_i, sheet value vector (e_j(z_i))_j)."""

    points: tuple[tuple[object, tuple], ...]

    @classmethod
    def of(cls, pairs) -> "PinchSpec":
        return cls(tuple((y, tuple(s)) for y, s in pairs))

    def __len__(self):
        return len(self.points)


class CoverAlgebra:
    def __init__(self, field, mult, infinity, provenance: str = "manual", *,
                 model=None, base: "CoverAlgebra | None" = None, embedding: PolyMatrix | None = None,
                 validate: bool = True):
        self.field = field
        self.d = len(mult)
        check_characteristic(field, self.d)
        self.mult = tuple(tuple(tuple(c if isinstance(c, Poly) else Poly(field, [c]) for c in cij)
                                for cij in ci) for ci in mult)
        self.infinity = [[e if isinstance(e, RationalFunction) else as_rational(
            e if isinstance(e, Poly) else Poly(field, [e]), field) for e in row] for row in infinity]
        self.provenance = provenance
        self.model = model
        self.base = base
        self.embedding = embedding
        if validate:
            self.validate()

    # arithmetic

    def multiply(self, u: Sequence, v: Sequence) -> list:
        """Product of two elements given by e-coordinates (Polys or rational functions)."""
        d = self.d
        zero = u[0] * 0 if u else Poly(self.field)
        out = [zero] * d
        for i in range(d):
            if not u[i]:
                continue
            for j in range(d):
                if not v[j]:
                    continue
                uv = u[i] * v[j]
                cij = self.mult[i][j]
                for k in range(d):
                    if cij[k]:
                        out[k] = out[k] + uv * cij[k]
        return out

    def basis_vector(self, i: int) -> list[Poly]:
        return [Poly.const(self.field, 1 if k == i else 0) for k in range(self.d)]

    @cached_property
    def traces(self) -> tuple[Poly, ...]:
        """tr(e_j) = trace of multiplication by e_j."""
        d = self.d
        return tuple(sum((self.mult[j][i][i] for i in range(d)), Poly(self.field)) for j in range(d))

    def trace(self, v: Sequence):
        acc = v[0] * 0
        for vj, tj in zip(v, self.traces):
            if vj and tj:
                acc = acc + vj * tj
        return acc

    @cached_property
    def trace_form(self) -> list[list[Poly]]:
        d = self.d
        return [[self.trace(self.mult[i][j]) for j in range(d)] for i in range(d)]

    @cached_property
    def discriminant(self) -> Poly:
        """det of the trace form in the finite basis."""
        return poly_det(self.trace_form, self.field)

    @cached_property
    def _infinity_polys(self) -> tuple[list[list[Poly]], Poly, list[list[Poly]], Poly]:
        """(N, den, adj N, det N) with infinity = N / den and N polynomial."""
        f = self.field
        den = Poly.const(f, 1)
        for row in self.infinity:
            for e in row:
                den = poly_lcm(den, e.den)
        N = [[e.num * den.exquo(e.den) for e in row] for row in self.infinity]
        d = self.d
        adj = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                minor = [[N[a][b] for b in range(d) if b != i] for a in range(d) if a != j]
                c = poly_det(minor, f) if minor else Poly.const(f, 1)
                adj[i][j] = -c if (i + j) % 2 else c
        return N, den, adj, poly_det(N, f)

    def infinity_structure(self) -> list[list[list[RationalFunction]]]:
        """gamma[i][j] = f_i f_j in f-coordinates."""
        N, den, adj, detN = self._infinity_polys
        d = self.d
        cols = [[N[a][j] for a in range(d)] for j in range(d)]
        scale = as_rational(detN * den, self.field)
        out = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                prod = self.multiply(cols[i], cols[j])
                g = [as_rational(sum((adj[k][l] * prod[l] for l in range(d)), Poly(self.field)),
                                 self.field) / scale for k in range(d)]
                out[i][j] = out[j][i] = g
        return out

    def _check_infinity(self) -> None:
        f, d = self.field, self.d
        N, den, adj, detN = self._infinity_polys
        if not detN:
            raise InvalidAlgebraError("infinity transition is singular")
        bound = detN.degree
        # the unit: T^-1 e_0 = den * adj[:, 0] / det N
        if any((den * adj[k][0]).degree > bound for k in range(d)):
            raise InvalidAlgebraError("unit is not in the infinity-chart module")
        bound += den.degree
        cols = [[N[a][j] for a in range(d)] for j in range(d)]
        for i in range(d):
            for j in range(i, d):
                prod = self.multiply(cols[i], cols[j])
                for k in range(d):
                    num = sum((adj[k][l] * prod[l] for l in range(d)), Poly(f))
                    if num.degree > bound:
                        raise InvalidAlgebraError(
                            f"infinity basis not closed under product at ({i},{j})")

    def validate(self) -> None:
        d, f = self.d, self.field
        m = self.mult
        for i in range(d):
            for k in range(d):
                if m[0][i][k] != (1 if i == k else 0) or m[i][0][k] != (1 if i == k else 0):
                    raise InvalidAlgebraError("e_0 is not a two-sided unit")
            for j in range(i + 1, d):
                if m[i][j] != m[j][i]:
                    raise InvalidAlgebraError(f"not commutative at ({i},{j})")
        for i in range(1, d):
            for j in range(i, d):
                eij = list(m[i][j])
                for l in range(j, d):
                    left = self.multiply(eij, self.basis_vector(l))
                    right = self.multiply(self.basis_vector(i), list(m[j][l]))
                    if left != right:
                        raise InvalidAlgebraError(f"not associative at ({i},{j},{l})")
        if len(self.infinity) != d or any(len(r) != d for r in self.infinity):
            raise InvalidAlgebraError("infinity transition must be d x d")
        self._check_infinity()
        if self.traces[0] != d:
            raise InvalidAlgebraError("trace of the unit differs from the degree")

    def validated(self) -> "CoverAlgebra":
        self.validate()
        return self

    # fibers

    def is_algebra_point(self, y, sheet: Sequence) -> bool:
        f = self.field
        y = f(y)
        s = [f(v) for v in sheet]
        if len(s) != self.d or s[0] != 1:
            return False
        for i in range(self.d):
            for j in range(i, self.d):
                rhs = sum((c(y) * s[k] for k, c in enumerate(self.mult[i][j]) if c), f.zero)
                if s[i] * s[j] != rhs:
                    return False
        return True

    def unramified_at(self, y) -> bool:
        y = self.field(y)
        return bool(linalg.det([[c(y) for c in row] for row in self.trace_form], self.field.zero, self.field.one))

    def fiber_points(self, y) -> list[tuple]:
        """Sheet vectors (e_j(z))_j of the k-rational points over y."""
        f = self.field
        y = f(y)
        if self.provenance in ("plane", "kummer") and self.model is not None:
            fy = self.model.at_x(y)
            pts = []
            for root in rational_roots(fy):
                pts.append(tuple(root ** j if j else f.one for j in range(self.d)))
            return pts
        if self.embedding is not None:
            rows = [[e(y) for e in r] for r in self.embedding.rows]
            if self.base is None:
                ncomp = len(rows[0])
                return [tuple(rows[j][c] for j in range(self.d)) for c in range(ncomp)]
            r = self.base.d
            pts = []
            for s in self.base.fiber_points(y):
                pts.append(tuple(sum((rows[j][l] * s[l] for l in range(r)), f.zero)
                                 for j in range(self.d)))
            pts.append(tuple(rows[j][r] for j in range(self.d)))
            return pts
        raise NotImplementedError(f"no fiber point finder for provenance {self.provenance!r}")

    # serialization

    def to_json(self) -> dict:
        return {"d": self.d, "char": self.field.to_json(),
                "mult": [[[str(c) for c in cij] for cij in ci] for ci in self.mult],
                "infinity": [[str(e) for e in row] for row in self.infinity],
                "provenance": self.provenance}

    @classmethod
    def from_json(cls, data: dict | str) -> "CoverAlgebra":
        from .field import field_for
        from .parse import parse_poly, parse_rational
        if isinstance(data, str):
            data = json.loads(data)
        f = field_for(int(data.get("char", 0)))
        mult = [[[parse_poly(s, f) for s in cij] for cij in ci] for ci in data["mult"]]
        inf = [[parse_rational(s, f) for s in row] for row in data["infinity"]]
        if "d" in data and len(mult) != data["d"]:
            raise InvalidAlgebraError("d does not match the multiplication tensor")
        return cls(f, mult, inf, data.get("provenance", "manual"))

    def __repr__(self):
        return f"CoverAlgebra(d={self.d}, provenance={self.provenance!r})"


# constructors

def split_cover(d: int, field=QQ) -> CoverAlgebra:
    """d disjoint copies of the line: basis 1, eps_1, ..., eps_{d-1} (idempotents)."""
    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            v = [0] * d
            if i == 0:
                v[j] = 1
            elif j == 0:
                v[i] = 1
            elif i == j:
                v[i] = 1
            row.append(v)
        mult.append(row)
    inf = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    emb = PolyMatrix(field, [[1] * d] + [[1 if c == i else 0 for c in range(d)] for i in range(1, d)])
    return CoverAlgebra(field, mult, inf, "split", embedding=emb)


def _newton_slope(f: BiPoly) -> Fraction:
    d = f.degree_y
    slopes = [Fraction(int(c.degree), d - j) for j, c in enumerate(f.cy[:-1]) if c]
    return max(slopes) if slopes else Fraction(0)


@dataclass(frozen=True)
class InfinityCertificate:
    kind: str  # "ore" or "discriminant"
    slope: Fraction
    branch_contribution: int  # sum of (e_P - 1) f_P over places above infinity


def certify_infinity(f: BiPoly) -> InfinityCertificate:
    """Certify that y^i / x^ceil(i*slope) is a maximal order at infinity.

    Either the Newton polygon at infinity is one side whose residual
    polynomial is squarefree (Ore regularity), or the discriminant of the
    candidate lattice has valuation <= 1 at infinity.
    """
    field = f.field
    d = f.degree_y
    lam = _newton_slope(f)
    c0 = f.cy[0]
    if c0 and c0.degree == d * lam:
        k = lam.denominator
        m = d // k
        res = []
        for l in range(m + 1):
            j = l * k
            c = f.cy[j]
            res.append(c.lc if c and c.degree == (d - j) * lam else field.zero)
        R = Poly(field, res)
        if R.degree == m and squarefree(R):
            return InfinityCertificate("ore", lam, d - m)
    exps = [ceil(i * lam) for i in range(d)]
    v = -int(discriminant_y(f).degree) + 2 * sum(exps)
    if v <= 1:
        return InfinityCertificate("discriminant", lam, v)
    raise MaximalityNotCertified(
        f"order at infinity not certified (slope {lam}, discriminant valuation {v})")


def _power_table(f: BiPoly, upto: int) -> list[list[Poly]]:
    """y^k mod f in the basis 1, y, ..., y^{d-1}, for k <= upto."""
    field = f.field
    d = f.degree_y
    zero = Poly(field)
    table = []
    cur = [zero] * d
    cur[0] = Poly.const(field, 1)
    for k in range(upto + 1):
        table.append(cur)
        top = cur[-1]
        nxt = [zero] + cur[:-1]
        if top:
            nxt = [a - top * c for a, c in zip(nxt, f.cy[:-1])]
        cur = nxt
    return table


def from_plane_model(f: BiPoly, provenance: str = "plane", *, finite_certified: bool = False) -> CoverAlgebra:
    field = f.field
    if not f.is_monic_y():
        raise ValueError("plane model must be monic in y")
    d = f.degree_y
    check_characteristic(field, d)
    disc = discriminant_y(f)
    if not disc:
        raise MaximalityNotCertified("discriminant vanishes identically (non-reduced model)")
    if not finite_certified and not squarefree(disc):
        raise MaximalityNotCertified(f"finite-chart discriminant {disc} is not squarefree")
    cert = certify_infinity(f)
    powers = _power_table(f, 2 * d - 2)
    mult = [[powers[i + j] for j in range(d)] for i in range(d)]
    inf = [[RationalFunction.x_power(field, -ceil(i * cert.slope)) if i == j else 0
            for j in range(d)] for i in range(d)]
    alg = CoverAlgebra(field, mult, inf, provenance, model=f)
    alg.infinity_certificate = cert
    return alg


def kummer_cover(d: int, p: Poly) -> CoverAlgebra:
    """k[x][y]/(y^d - p) with infinity basis y^i / x^ceil(i e / d)."""
    field = p.field
    check_characteristic(field, d)
    if p.degree < 1:
        raise ValueError("p must have positive degree")
    if not squarefree(p):
        raise ValueError(f"{p} is not squarefree")
    cy = [-p] + [Poly(field)] * (d - 1) + [Poly.const(field, 1)]
    # y^d - p is Eisenstein at every root of a squarefree p
    alg = from_plane_model(BiPoly(field, cy), provenance="kummer", finite_certified=True)
    alg.kummer_data = (d, p)
    return alg


def from_binary_cubic(p: Poly, q: Poly, r: Poly, s: Poly, a1: int, a2: int) -> CoverAlgebra:
    """Triple cover attached to the binary cubic p z^3 + q z^2 w + r z w^2 + s w^3.

    Multiplication on the basis 1, w1, w2 (Delone-Faddeev normalization):
    w1 w2 = -ps, w1^2 = -pr + q w1 - p w2, w2^2 = -qs + s w1 - r w2.
    The infinity basis is 1, w1 / x^a1, w2 / x^a2.
    """
    field = p.field
    check_characteristic(field, 3)
    z = Poly(field)
    one = Poly.const(field, 1)
    mult = [
        [[one, z, z], [z, one, z], [z, z, one]],
        [[z, one, z], [-(p * r), q, -p], [-(p * s), z, z]],
        [[z, z, one], [-(p * s), z, z], [-(q * s), s, -r]],
    ]
    inf = [[1, 0, 0],
           [0, RationalFunction.x_power(field, -a1), 0],
           [0, 0, RationalFunction.x_power(field, -a2)]]
    alg = CoverAlgebra(field, mult, inf, "cubic")
    alg.cubic_data = (p, q, r, s, a1, a2)
    return alg


def pinch(base: CoverAlgebra, spec: PinchSpec, *, reduce: bool = True) -> CoverAlgebra:
    """Glue a fresh copy of the line to ``base`` at the given fiber points.

    The result is ker(base ⊕ k[x] -> ⊕ k_{y_i}), (f, g) -> f(z_i) - g(y_i),
    with basis starting at the unit and tensor recomputed in that basis.
    With ``reduce`` the result is re-presented by :func:`reduced_presentation`.
    """
    f = base.field
    r = base.d
    check_characteristic(f, r + 1)
    ys = [f(y) for y, _ in spec.points]
    if len(set(ys)) != len(ys):
        raise ValueError("pinch points must be distinct")
    constraints = []
    for y, sheet in spec.points:
        sheet = tuple(f(v) for v in sheet)
        if not base.is_algebra_point(y, sheet):
            raise ValueError(f"sheet {sheet} is not a point of the fiber over {y}")
        if not base.unramified_at(y):
            raise ValueError(f"base cover is ramified over {y}")
        constraints.append((f(y), sheet))
    # R = k[x].(1, 1) + (I, 0) with I the ideal of the glued sheets in the base
    ideal = constrained_kernel_basis(f, r, constraints)
    zero = Poly(f)
    rows = [[Poly.const(f, 1)] + [zero] * (r - 1) + [Poly.const(f, 1)]]
    rows += [list(row) + [zero] for row in ideal.rows]
    B = PolyMatrix(f, rows)
    solver = LatticeSolver(B)

    def amb_mult(a, b):
        return base.multiply(a[:r], b[:r]) + [a[r] * b[r]]

    mult = [[None] * (r + 1) for _ in range(r + 1)]
    for i in range(r + 1):
        for j in range(i, r + 1):
            mult[i][j] = mult[j][i] = solver.solve(amb_mult(rows[i], rows[j]))
    z, o = _rz(f), _ro(f)
    T = base.infinity
    amb_inf = []
    for j in range(r):
        amb_inf.append([T[a][j] for a in range(r)] + [z])
    amb_inf.append([z] * r + [o])
    cols = [solver.coordinates(v) for v in amb_inf]
    inf = lattice_basis_at_infinity(cols, f)
    raw = CoverAlgebra(f, mult, inf, "pinched", base=base, embedding=B, validate=False)
    return reduced_presentation(raw) if reduce else raw.validated()


def reduced_presentation(c: CoverAlgebra) -> CoverAlgebra:
    """The same algebra in a basis 1, g_1, ..., g_{d-1} adapted to the trace splitting.

    The g_j are trace-zero and reduced against the infinity chart, so the
    infinity basis becomes diag(1, x^(a_1), ...) with (a_j) the type of E^dual.
    """
    f, d = c.field, c.d
    if d == 1:
        return c.validated()
    E_dual, _ = tschirnhausen(c)
    U, a = E_dual._reduction
    inv_d = f.one / d
    zero = Poly(f)
    rows = [[Poly.const(f, 1)] + [zero] * (d - 1)]
    for g in U.rows:
        # g is in coordinates of pi(e_1), ..., pi(e_(d-1)); pi(e_i) = e_i - tr(e_i)/d
        t = sum((gi * c.traces[i + 1] for i, gi in enumerate(g)), zero)
        rows.append([-(t * inv_d)] + list(g))
    P = PolyMatrix(f, rows)
    solver = LatticeSolver(P)
    mult = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            mult[i][j] = mult[j][i] = solver.solve(c.multiply(rows[i], rows[j]))
    inf = [[RationalFunction.x_power(f, ([0] + list(a))[i]) if i == j else 0 for j in range(d)]
           for i in range(d)]
    emb = P @ c.embedding if c.embedding is not None else None
    out = CoverAlgebra(f, mult, inf, c.provenance, model=c.model, base=c.base, embedding=emb)
    if c.embedding is None:
        out.original_basis = P
    return out


def default_pinch_points(used: set, count: int, field, start: int = 1) -> list:
    pts = []
    k = start
    while len(pts) < count:
        y = field(k)
        if y not in used:
            pts.append(y)
            used.add(y)
        k += 1
    return pts


def pinch_tower(degrees: Sequence[int], field=QQ) -> list[CoverAlgebra]:
    """Covers realizing O(l_1) + ... + O(l_{d-1}) by successive pinching.

    Starting from the degree-1 cover, each step glues a new line along
    l_i points, largest l first; returns every intermediate algebra.
    """
    ls = sorted(int(l) for l in degrees)
    if any(l < 0 for l in ls):
        raise ValueError("pinch degrees must be non-negative")
    alg = split_cover(1, field)
    tower = [alg]
    used: set = set()
    for l in reversed(ls):
        pts = default_pinch_points(used, l, field)
        pairs = []
        for i, y in enumerate(pts):
            sheets = alg.fiber_points(y)
            pairs.append((y, sheets[i % len(sheets)]))
        alg = pinch(alg, PinchSpec.of(pairs))
        tower.append(alg)
    return tower


# Tschirnhausen bundle

def tschirnhausen(c: CoverAlgebra) -> tuple[BundleLattice | None, SplittingType | None]:
    """(E^dual lattice, splitting type of E) from the trace splitting.

    E^dual is the trace-zero part v - (tr v / d) 1 of the algebra, in the
    basis pi(e_1), ..., pi(e_{d-1}) on the finite chart; the infinity
    lattice is the projection of the f_j, reduced to a basis over the
    local ring at infinity.
    """
    f = c.field
    d = c.d
    if d == 1:
        return None, None
    if not c.discriminant:
        raise DegenerateTraceForm("trace form is degenerate over k(x)")
    inv_d = f.one / d
    z, o = _rz(f), _ro(f)
    projected = []
    for j in range(d):
        col = [c.infinity[a][j] for a in range(d)]
        t = c.trace(col)
        pcol = [col[0] - t * inv_d] + col[1:]
        # pi(e_i) has e-coordinates (-tr(e_i)/d, ..., 1 at i, ...): drop e_0.
        projected.append(pcol[1:])
    inf = lattice_basis_at_infinity(projected, f)
    fin = [[o if i == j else z for j in range(d - 1)] for i in range(d - 1)]
    E_dual = BundleLattice(f, fin, inf)
    return E_dual, E_dual.splitting_type().dual()


def tschirnhausen_degree(c: CoverAlgebra) -> int:
    if c.d == 1:
        return 0
    return tschirnhausen(c)[1].degree


@dataclass(frozen=True)
class BranchGenus:
    branch_degree: int
    p_a: int
    discriminant_degree: int
    independent_branch: int | None = None


def discriminant_degree(c: CoverAlgebra) -> int:
    """Degree of the discriminant divisor: finite zeros plus order at infinity."""
    f = c.field
    fin = int(c.discriminant.degree)
    T = c.infinity
    detT = linalg.det(T, _rz(f), _ro(f))
    inf_disc = as_rational(c.discriminant, f) * detT * detT
    return fin - int(inf_disc.degree)


def independent_branch_degree(c: CoverAlgebra) -> int | None:
    """Branch degree from ramification data, for smooth models only."""
    if c.provenance == "kummer":
        d, p = c.kummer_data
        e = int(p.degree)
        return e * (d - 1) + (d - gcd(d, e))
    if c.provenance == "plane":
        return int(discriminant_y(c.model).degree) + c.infinity_certificate.branch_contribution
    if c.provenance == "cubic":
        p, q, r, s, a1, a2 = c.cubic_data
        disc = binary_cubic_discriminant(p, q, r, s)
        # squarefree finite discriminant plus the simple zeros at infinity
        return int(disc.degree) + (2 * (a1 + a2) - int(disc.degree))
    return None


def branch_and_genus(c: CoverAlgebra) -> BranchGenus:
    e = tschirnhausen_degree(c)
    return BranchGenus(2 * e, e + 1 - c.d, discriminant_degree(c), independent_branch_degree(c))


# canonical affine embedding

@dataclass(frozen=True)
class AffineNormalization:
    """The affine automorphism (-alpha, id) of Tot(F)."""

    translation: tuple
    linear: PolyMatrix

    def is_identity(self) -> bool:
        return all(not t for t in self.translation) and self.linear == PolyMatrix.identity(
            self.linear.field, len(self.linear.rows))


def normalize_affine_embedding(alpha: Sequence, lam_finite: PolyMatrix, lam_infinity,
                               target: CoverAlgebra) -> AffineNormalization:
    """Check that lambda: F^dual -> E^dual is an isomorphism and return T_alpha."""
    f = target.field
    r = target.d - 1
    nr, nc = lam_finite.shape
    if (nr, nc) != (r, r):
        raise NotAnIsomorphism("finite", f"expected a {r}x{r} matrix")
    det = lam_finite.det()
    if det.degree != 0:
        raise NotAnIsomorphism("finite", f"determinant {det} is not a nonzero constant")
    inf = [[as_rational(e, f) if not isinstance(e, RationalFunction) else e for e in row]
           for row in lam_infinity]
    if len(inf) != r or any(len(row) != r for row in inf):
        raise NotAnIsomorphism("infinity", f"expected a {r}x{r} matrix")
    if any(e.degree > 0 for row in inf for e in row):
        raise NotAnIsomorphism("infinity", "entries not regular at infinity")
    dinf = linalg.det(inf, _rz(f), _ro(f))
    if not dinf or dinf.degree != 0:
        raise NotAnIsomorphism("infinity", "determinant is not a unit at infinity")
    alpha = [a if isinstance(a, Poly) else Poly(f, [a]) for a in alpha]
    if len(alpha) != r:
        raise ValueError(f"alpha must have {r} entries")
    return AffineNormalization(tuple(-a for a in alpha), PolyMatrix.identity(f, r))
