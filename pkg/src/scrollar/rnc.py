"""Rational normal curves through the coordinate points and the pairing Lambda(R).

The curve is x -> [b_1 F/(x - a_1) : ... : b_d F/(x - a_d)] with F = prod (x - a_i);
it sends a_i to the i-th coordinate point. G = sum b_i F/(x - a_i) cuts out the
intersection with the hyperplane H = {sum Y_i = 0}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .field import QQ
from .poly import Poly, RationalFunction, poly_gcd, squarefree
from .rng import distinct_ints, generic_int, stream


@dataclass(frozen=True)
class RncData:
    a: tuple
    b: tuple
    field: object = QQ

    def __post_init__(self):
        f = self.field
        a = tuple(f(v) for v in self.a)
        b = tuple(f(v) for v in self.b)
        if len(a) != len(b):
            raise ValueError("a and b must have the same length")
        if len(set(a)) != len(a):
            raise ValueError("the a_i must be pairwise distinct")
        if any(not v for v in b):
            raise ValueError("the b_i must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def F(self) -> Poly:
        return Poly.from_roots(self.field, self.a)

    def components(self) -> list[Poly]:
        F = self.F
        return [F.exquo(Poly.from_roots(self.field, [ai])) * Poly.const(self.field, bi)
                for ai, bi in zip(self.a, self.b)]

    @property
    def G(self) -> Poly:
        return sum(self.components(), Poly(self.field))

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.d) for j in range(self.d) if i != j]


@dataclass(frozen=True)
class TransversalityReport:
    coordinate_points_hit: bool
    no_base_points: bool
    G: Poly
    G_squarefree: bool
    sum_b: object
    infinity_multiplicity: int
    transverse: bool

    def to_json(self) -> dict:
        return {"coordinate_points_hit": self.coordinate_points_hit,
                "no_base_points": self.no_base_points,
                "G": str(self.G), "G_squarefree": self.G_squarefree,
                "sum_b": str(self.sum_b), "infinity_multiplicity": self.infinity_multiplicity,
                "transverse": self.transverse}


def rnc_parametrize(r: RncData) -> tuple[list[Poly], Poly, TransversalityReport]:
    comps = r.components()
    hit = True
    for i, ai in enumerate(r.a):
        vals = [c(ai) for c in comps]
        hit &= all((v != 0) == (k == i) for k, v in enumerate(vals))
    g = comps[0]
    for c in comps[1:]:
        g = poly_gcd(g, c)
    G = r.G
    sq = bool(G) and squarefree(G)
    mult = r.d - 1 - int(G.degree) if G else r.d - 1
    report = TransversalityReport(hit, g.degree == 0, G, sq, sum(r.b, r.field.zero), mult,
                                  sq and mult <= 1)
    return comps, G, report


def lingen_values(r: RncData, u, v) -> dict[tuple[int, int], object]:
    """omega(i, j) paired with (ux + v)G/F: b_i (u a_j + v) / (a_j - a_i)."""
    f = r.field
    u, v = f(u), f(v)
    if not u and not v:
        raise ValueError("(u, v) must be nonzero")
    a, b = r.a, r.b
    return {(i, j): b[i] * (u * a[j] + v) / (a[j] - a[i]) for i, j in r.pairs()}


def lingen_oracle(r: RncData, u, v) -> dict[tuple[int, int], object]:
    """The same pairing from the parametrization, without the closed formula.

    For each (i, j): the cotangent vector d(Y_i/Y_j) at the j-th coordinate
    point, pulled back to the parameter line, is the derivative of the ratio
    of components at a_j; the section (ux + v)G/F of O(delta) is identified
    with a tangent vector at a_j through its residue. Their contraction is
    the product.
    """
    f = r.field
    u, v = f(u), f(v)
    if not u and not v:
        raise ValueError("(u, v) must be nonzero")
    comps = [RationalFunction(c) for c in r.components()]
    section = RationalFunction(Poly(f, [v, u]) * r.G, r.F)
    out = {}
    for j, aj in enumerate(r.a):
        local = section * RationalFunction(Poly.from_roots(f, [aj]))
        residue = local(aj)
        for i in range(r.d):
            if i == j:
                continue
            ratio = comps[i] / comps[j]
            out[(i, j)] = ratio.deriv()(aj) * residue
    return out


def lingen_matrix(r: RncData) -> list[list]:
    """2 x d(d-1) matrix with rows (u, v) = (1, 0) and (0, 1)."""
    cols = [lingen_values(r, 1, 0), lingen_values(r, 0, 1)]
    return [[c[p] for p in r.pairs()] for c in cols]


def proportionality_scalar(x: dict, y: dict):
    """The scalar c with y = c x entrywise, or None if there is none."""
    c = None
    for k in x:
        if not x[k]:
            if y[k]:
                return None
            continue
        q = y[k] / x[k]
        if c is None:
            c = q
        elif q != c:
            return None
    return c


def random_rnc(rng: random.Random, d: int, field=QQ) -> RncData:
    a = distinct_ints(rng, d)
    b = [generic_int(rng, nonzero=True) for _ in range(d)]
    if field.char:
        p = field.char
        while len({x % p for x in a}) < d:
            a = distinct_ints(rng, d)
        b = [x if x % p else 1 for x in b]
    return RncData(tuple(a), tuple(b), field)


@dataclass(frozen=True)
class LingenRank:
    d: int
    trials: int
    rank: int

    @property
    def expected(self) -> int:
        return self.d * (self.d - 1)

    @property
    def full(self) -> bool:
        return self.rank == self.expected

    @property
    def inconclusive(self) -> bool:
        return not self.full

    def to_json(self) -> dict:
        return {"d": self.d, "rank": self.rank, "full": self.full}


def lingen_sample_rank(d: int, trials: int, seed: int, field=QQ) -> LingenRank:
    if d < 3:
        raise ValueError("d must be at least 3")
    rows = []
    for t in range(trials):
        rng = stream(seed, "lingen", d, t)
        r = random_rnc(rng, d, field)
        u, v = 0, 0
        while not u and not v:
            u, v = generic_int(rng), generic_int(rng)
        col = lingen_values(r, u, v)
        rows.append([col[p] for p in r.pairs()])
    return LingenRank(d, trials, linalg.rank(rows))


def lingen_rank(d: int, trials: int, seed: int, field=QQ) -> int:
    """Rank of `trials` sampled pairing vectors; d(d-1) proves independence."""
    return lingen_sample_rank(d, trials, seed, field).rank
