import random

import pytest
from hypothesis import given, settings, strategies as st

from scrollar.bundle import (
    BundleLattice, InflationDatum, InvalidLatticeError, NoDrop, SplittingType, cohomology, end_h1,
    global_sections, inflate, predicted_inflation, random_bundle, sections_by_linear_algebra,
    select_effective_quotient, splitting_type,
)
from scrollar.field import GF, QQ
from scrollar.parse import parse_poly
from scrollar.poly import Poly, RationalFunction

x = parse_poly("x")


def xp(n):
    return RationalFunction.x_power(QQ, n)


@pytest.mark.parametrize("t,want", [((-3, 0, 2), (4, 2)), ((-1, -1), (0, 0)), ((0,), (1, 0))])
def test_cohomology_examples(t, want):
    assert cohomology(t) == want


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_riemann_roch(parts):
    t = SplittingType(tuple(parts))
    h0, h1 = cohomology(t)
    assert h0 - h1 == t.degree + t.rank


@pytest.mark.parametrize("t,want", [((0, 0, 0), 0), ((0, 2), 1), ((-1, 3), 3)])
def test_end_h1_examples(t, want):
    assert end_h1(t) == want


def test_standard_pair():
    B = BundleLattice(QQ, [[1, 0], [0, 1]], [[xp(2), 0], [0, xp(-1)]])
    assert splitting_type(B) == SplittingType((-1, 2))
    assert splitting_type(B, "profile") == SplittingType((-1, 2))
    assert splitting_type(B.dual()) == SplittingType((-2, 1))


def test_nonsplit_presentation_by_profile_oracle():
    # oracle: bounded-degree linear algebra gives h0 = 4 at twist 0 and degree 2
    B = BundleLattice(QQ, [[1, 0], [0, 1]], [[x, 1], [0, x]])
    assert B.degree == 2
    assert len(sections_by_linear_algebra(B, 0)) == 4
    assert splitting_type(B, "profile") == SplittingType((1, 1))
    assert splitting_type(B) == SplittingType((1, 1))
    assert len(global_sections(B, 0)) == 4


def test_global_sections_standard():
    B = BundleLattice.standard([1, -1])
    secs = global_sections(B, 0)
    assert len(secs) == 2
    assert {tuple(str(c) for c in s) for s in secs} == {("1", "0"), ("x", "0")}
    assert global_sections(BundleLattice.standard([-1, -1]), 0) == []


def test_sections_satisfy_both_charts():
    rng = random.Random(3)
    B = random_bundle([-2, 1, 3], rng)
    for n in (-1, 0, 2):
        secs = global_sections(B, n)
        assert len(secs) == cohomology(splitting_type(B).shifted(n))[0]
        assert len(secs) == len(sections_by_linear_algebra(B, n))


def test_singular_lattice_rejected():
    with pytest.raises(InvalidLatticeError, match="finite chart basis singular"):
        BundleLattice(QQ, [[1, 0], [0, 0]], [[1, 0], [0, 1]])
    with pytest.raises(InvalidLatticeError, match="infinity chart basis singular"):
        BundleLattice(QQ, [[1, 0], [0, 1]], [[1, 1], [1, 1]])


def test_random_presentations_dual_twist_flip():
    rng = random.Random(8)
    for _ in range(8):
        parts = sorted(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
        B = random_bundle(parts, rng)
        t = SplittingType(tuple(parts))
        assert splitting_type(B) == t
        assert B.degree == t.degree
        assert splitting_type(B.dual()) == t.dual()
        assert splitting_type(B.twist(3)) == t.shifted(3)
        assert splitting_type(B.flip()) == t


def test_json_round_trip():
    B = random_bundle([-1, 2], random.Random(2))
    C = BundleLattice.from_json(B.to_json())
    assert splitting_type(C) == splitting_type(B)


def test_inflate_examples():
    B = BundleLattice.standard([-1, -1])
    E = inflate(B, InflationDatum(0, ((1, 0),)))
    assert splitting_type(E) == SplittingType((-1, 0))
    assert splitting_type(E, "profile") == SplittingType((-1, 0))
    for a in (-3, 0, 2):
        F = inflate(BundleLattice.standard([a, a]), InflationDatum(5, ((1, 0), (0, 1))))
        assert splitting_type(F) == SplittingType((a + 1, a + 1))


def test_inflate_rejects_dependent_vectors():
    with pytest.raises(ValueError):
        inflate(BundleLattice.standard([0, 0]), InflationDatum(0, ((1, 2), (2, 4))))


def test_inflation_degree_additivity():
    rng = random.Random(12)
    for _ in range(50):
        r = rng.randint(1, 3)
        B = random_bundle([rng.randint(-3, 3) for _ in range(r)], rng)
        m = rng.randint(1, r)
        vecs = tuple(tuple(rng.randint(-9, 9) for _ in range(r)) for _ in range(m))
        try:
            E = inflate(B, InflationDatum(rng.randint(-9, 9), vecs))
        except ValueError:
            continue
        assert E.degree == B.degree + m


def test_predicted_inflation_examples():
    # O(-1)^2: E^dual (x) Omega = O(-1)^2 has no sections, so V = 0
    B = BundleLattice.standard([-1, -1])
    assert predicted_inflation(B, InflationDatum(3, ((2, 7),))) == (1, 0, 0)
    # O(-2)^2: E^dual (x) Omega = O^2 evaluates onto the fiber
    B = BundleLattice.standard([-2, -2])
    d = InflationDatum(5, ((3, 7),))
    assert predicted_inflation(B, d) == (0, 1, 1)
    assert cohomology(splitting_type(inflate(B, d))) == (0, 1)
    B = BundleLattice.standard([-3])
    d = InflationDatum(4, ((1,),))
    assert predicted_inflation(B, d) == (0, 1, 1)
    assert cohomology(splitting_type(inflate(B, d))) == (0, 1)


def test_cohomology_law_on_special_data():
    rng = random.Random(21)
    for _ in range(25):
        r = rng.randint(1, 3)
        B = random_bundle([rng.randint(-4, 2) for _ in range(r)], rng)
        m = rng.randint(1, r)
        vecs = tuple(tuple(rng.randint(-1, 1) for _ in range(r)) for _ in range(m))
        d = InflationDatum(rng.randint(-1, 1), vecs)
        try:
            h0, h1, _ = predicted_inflation(B, d)
        except ValueError:
            continue
        assert cohomology(splitting_type(inflate(B, d))) == (h0, h1)


def test_select_effective_quotient():
    B = BundleLattice.standard([-2, -2])
    S = [InflationDatum(5, ((1, 0),)), InflationDatum(5, ((0, 1),))]
    q = select_effective_quotient(B, 5, S)
    assert isinstance(q, InflationDatum)
    assert cohomology(splitting_type(inflate(B, q)))[1] == 1
    res = select_effective_quotient(B, 5, S[:1])
    assert isinstance(res, NoDrop) and res.reason == "spanning"
    with pytest.raises(ValueError):
        select_effective_quotient(B, 5, [])
    with pytest.raises(ValueError, match="h1"):
        select_effective_quotient(BundleLattice.standard([0, 0]), 5, S)


def test_prime_field_bundle():
    F = GF(10007)
    B = random_bundle([-2, 0, 3], random.Random(6), F)
    assert splitting_type(B) == SplittingType((-2, 0, 3))
    assert splitting_type(B, "profile") == SplittingType((-2, 0, 3))
