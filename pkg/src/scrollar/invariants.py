"""Dimension counts, the degree-3 realizability criterion, and filtration degrees."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .bivariate import BiPoly, binary_cubic_discriminant
from .bundle import SplittingType, end_h1
from .field import QQ
from .poly import Poly, squarefree
from .rng import generic_int, stream

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HurwitzParams:
    d: int
    g: int
    g_Y: int = 0

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if self.g_Y < 0:
            raise ValueError("base genus must be non-negative")

    @property
    def b(self) -> int:
        return self.g - 1 - self.d * (self.g_Y - 1)


def hurwitz_dimension(p: HurwitzParams) -> int:
    if p.b < 0:
        raise ValueError(f"b = {p.b} is negative")
    dim = 2 * p.b
    if dim != (2 * p.g - 2) - p.d * (2 * p.g_Y - 2):
        raise AssertionError("the two Hurwitz dimension formulas disagree")
    return dim


@dataclass(frozen=True)
class MaroniCount:
    b: int
    hilb_dim: int
    affine_group_dim: int
    maroni_dim: int
    codim: int
    hurwitz_dim: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def maroni_expected(t: SplittingType | Sequence[int], p: HurwitzParams) -> MaroniCount:
    t = t if isinstance(t, SplittingType) else SplittingType(tuple(t))
    if t.rank != p.d - 1:
        raise ValueError(f"type has rank {t.rank}, expected {p.d - 1}")
    if t.degree != p.b:
        raise ValueError(f"type has degree {t.degree}, expected b = {p.b}")
    shift = p.d * (p.d - 1) * (p.g_Y - 1)
    hilb = 3 * p.b - shift
    codim = end_h1(t)
    aff = p.b - shift + codim
    maroni = hilb - aff
    return MaroniCount(p.b, hilb, aff, maroni, codim, hurwitz_dimension(p))


def miranda_realizable(a1: int, a2: int) -> bool:
    if not 1 <= a1 <= a2:
        raise ValueError("need 1 <= a1 <= a2")
    return a2 <= 2 * a1


class Exhausted(RuntimeError):
    def __init__(self, attempts: int, stats: dict):
        super().__init__(f"no witness in {attempts} attempts: {stats}")
        self.attempts = attempts
        self.stats = stats


@dataclass(frozen=True)
class TripleCoverSection:
    """Binary cubic p z^3 + q z^2 w + r z w^2 + s w^3 with coefficients in k[x]."""

    a1: int
    a2: int
    p: Poly
    q: Poly
    r: Poly
    s: Poly

    def __post_init__(self):
        for name, c, bound in zip("pqrs", (self.p, self.q, self.r, self.s), self.degree_bounds()):
            if c.degree > bound:
                raise ValueError(f"deg {name} = {c.degree} exceeds {bound}")

    def degree_bounds(self) -> tuple[int, int, int, int]:
        return degree_bounds(self.a1, self.a2)

    @property
    def discriminant(self) -> Poly:
        return binary_cubic_discriminant(self.p, self.q, self.r, self.s)

    def cover(self):
        from .cover import from_binary_cubic
        return from_binary_cubic(self.p, self.q, self.r, self.s, self.a1, self.a2)

    def plane_model(self) -> BiPoly:
        """Monic model y^3 + q y^2 + p r y + p^2 s of the cubic in the chart w = 1 (y = p z)."""
        if not self.p:
            raise ValueError("p vanishes; the chart w = 1 has no monic model")
        f = self.p.field
        return BiPoly(f, [self.p * self.p * self.s, self.p * self.r, self.q, Poly.const(f, 1)])

    def to_json(self) -> dict:
        return {"a1": self.a1, "a2": self.a2, "p": str(self.p), "q": str(self.q),
                "r": str(self.r), "s": str(self.s), "discriminant": str(self.discriminant)}


def degree_bounds(a1: int, a2: int) -> tuple[int, int, int, int]:
    return (2 * a1 - a2, a1, a2, 2 * a2 - a1)


def _random_poly(rng, field, n: int) -> Poly:
    if n < 0:
        return Poly(field)
    return Poly(field, [field(generic_int(rng)) for _ in range(n + 1)])


def random_section(a1: int, a2: int, rng, field=QQ) -> TripleCoverSection:
    p, q, r, s = (_random_poly(rng, field, n) for n in degree_bounds(a1, a2))
    return TripleCoverSection(a1, a2, p, q, r, s)


def smoothness_failure(sec: TripleCoverSection) -> str | None:
    """None when branching is simple on both charts, else the reason."""
    disc = sec.discriminant
    if not disc:
        return "zero discriminant"
    if not squarefree(disc):
        return "finite discriminant not squarefree"
    # disc is a section of O(2(a1 + a2)); its order at infinity is the degree drop
    if disc.degree < 2 * (sec.a1 + sec.a2) - 1:
        return "multiple root at infinity"
    return None


@dataclass(frozen=True)
class MirandaWitness:
    section: TripleCoverSection
    discriminant: Poly
    attempts: int

    def to_json(self) -> dict:
        out = self.section.to_json()
        out["attempts"] = self.attempts
        return out


def miranda_construct(a1: int, a2: int, attempts: int = 100, seed: int = 0, field=QQ) -> MirandaWitness:
    if not miranda_realizable(a1, a2):
        raise ValueError(f"({a1}, {a2}) violates a2 <= 2 a1")
    stats: Counter = Counter()
    for k in range(attempts):
        sec = random_section(a1, a2, stream(seed, "miranda", a1, a2, k), field)
        why = smoothness_failure(sec)
        if why is None:
            return MirandaWitness(sec, sec.discriminant, k + 1)
        stats[why] += 1
        log.info("miranda (%d,%d) attempt %d rejected: %s", a1, a2, k, why)
    raise Exhausted(attempts, dict(stats))


@dataclass(frozen=True)
class DegenerateDiagnostic:
    a1: int
    a2: int
    samples: int
    failures: int
    p_forced_zero: bool

    def to_json(self) -> dict:
        return {"a1": self.a1, "a2": self.a2, "samples": self.samples, "failures": self.failures,
                "p_forced_zero": self.p_forced_zero,
                "note": "statistical evidence, not a proof"}


def miranda_degenerate_diagnostic(a1: int, a2: int, samples: int = 100, seed: int = 0,
                                  field=QQ) -> DegenerateDiagnostic:
    """Sample sections with the degree bounds of (a1, a2) and count non-smooth ones."""
    fails = 0
    for k in range(samples):
        sec = random_section(a1, a2, stream(seed, "miranda-diag", a1, a2, k), field)
        if smoothness_failure(sec) is not None:
            fails += 1
    return DegenerateDiagnostic(a1, a2, samples, fails, degree_bounds(a1, a2)[0] < 0)


def filtration_degrees(r: int, e: int, N: int) -> tuple[int, ...]:
    """Degrees (deg L_1, ..., deg L_r) with deg L_i + N <= deg L_(i+1) summing to e."""
    if r < 1:
        raise ValueError("rank must be positive")
    if N < 0:
        raise ValueError("gap must be non-negative")
    t = -(e // r) if e < 0 else 0  # ceil(-e / r) for e < 0
    work = e + r * t
    low = [-N * (r - i) for i in range(1, r)]
    out = low + [work - sum(low)]
    return tuple(v - t for v in out)


def rees_degeneration_target(t: SplittingType | Sequence[int], N: int) -> SplittingType:
    t = t if isinstance(t, SplittingType) else SplittingType(tuple(t))
    return SplittingType(tuple(sorted(filtration_degrees(t.rank, t.degree, N))))
