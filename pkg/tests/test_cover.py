import random
from fractions import Fraction

import pytest

from scrollar.bundle import SplittingType
from scrollar.cover import (
    CoverAlgebra, InvalidAlgebraError, MaximalityNotCertified, NotAnIsomorphism, PinchSpec,
    branch_and_genus, certify_infinity, discriminant_degree, from_binary_cubic, from_plane_model,
    kummer_cover, normalize_affine_embedding, pinch, pinch_tower, reduced_presentation, split_cover,
    tschirnhausen,
)
from scrollar.field import GF, QQ, CharacteristicError
from scrollar.parse import parse_bivariate, parse_poly
from scrollar.poly import Poly
from scrollar.polymat import PolyMatrix


def T(c):
    return tschirnhausen(c)[1]


def test_elliptic_double_cover():
    # oracle: genus 1 double cover, deg E = g + d - 1 = 2
    c = from_plane_model(parse_bivariate("y^2 - (x^3 - x)"))
    assert c.d == 2
    assert T(c) == SplittingType((2,))
    bg = branch_and_genus(c)
    assert (bg.branch_degree, bg.p_a) == (4, 1)
    assert bg.independent_branch == 4


def test_plane_model_rejections():
    with pytest.raises(MaximalityNotCertified):
        from_plane_model(parse_bivariate("y^2 - x^2"))
    with pytest.raises(CharacteristicError):
        from_plane_model(parse_bivariate("y^3 - x", GF(3)))


def test_trinomial_cubic():
    # oracle: disc of y^3 + p y + q is -4p^3 - 27q^2 = 4 - 27x^2, squarefree; genus 0 so deg E = 2
    c = from_plane_model(parse_bivariate("y^3 - y - x"))
    assert T(c) == SplittingType((1, 1))
    assert branch_and_genus(c).p_a == 0


def test_infinity_certificate_uses_slope_basis():
    cert = certify_infinity(parse_bivariate("y^3 - y - x"))
    assert cert.kind == "ore"
    assert cert.slope == Fraction(1, 3)
    assert certify_infinity(parse_bivariate("y^2 - x^2 - x^4")).slope == 2
    # residual polynomial (y+1)^3 is not squarefree and the discriminant is too deep
    with pytest.raises(MaximalityNotCertified):
        certify_infinity(parse_bivariate("(y+x)^3 + 1"))


@pytest.mark.parametrize("d,p,want", [(3, "x^4 + x + 1", (2, 3)), (2, "x^3 - x", (2,)), (3, "x^3 + 1", (1, 2)),
                                      (5, "x^7 - 3*x + 1", (2, 3, 5, 6))])
def test_kummer_closed_form(d, p, want):
    # oracle: ceil(i e / d)
    from math import ceil
    e = parse_poly(p).degree
    assert want == tuple(ceil(i * e / d) for i in range(1, d))
    assert T(kummer_cover(d, parse_poly(p))) == SplittingType(want)


def test_kummer_branch_riemann_hurwitz():
    # oracle: 2g - 2 = -6 + 2*4 + 2, totally ramified at the 4 roots and at infinity
    c = kummer_cover(3, parse_poly("x^4 + x + 1"))
    bg = branch_and_genus(c)
    assert (bg.branch_degree, bg.p_a) == (10, 3)
    assert bg.independent_branch == 10 == discriminant_degree(c)


def test_kummer_rejects_non_squarefree():
    with pytest.raises(ValueError):
        kummer_cover(2, parse_poly("(x - 1)^2"))


def test_split_cover():
    for d in (1, 2, 4):
        c = split_cover(d)
        if d > 1:
            assert T(c) == SplittingType((0,) * (d - 1))
            bg = branch_and_genus(c)
            assert (bg.branch_degree, bg.p_a) == (0, 1 - d)


def test_pinch_two_nodes():
    c = pinch(split_cover(1), PinchSpec.of([(0, (1,)), (1, (1,))]))
    assert c.d == 2
    assert T(c) == SplittingType((2,))
    bg = branch_and_genus(c)
    assert (bg.branch_degree, bg.p_a) == (4, 1)
    raw = pinch(split_cover(1), PinchSpec.of([(0, (1,)), (1, (1,))]), reduce=False)
    assert T(raw) == SplittingType((2,))


def test_pinch_empty_spec_is_disjoint_union():
    assert T(pinch(split_cover(1), PinchSpec.of([]))) == SplittingType((0,))


def test_pinch_validation():
    base = from_plane_model(parse_bivariate("y^2 - (x^3 - x)"))
    with pytest.raises(ValueError, match="distinct"):
        pinch(split_cover(1), PinchSpec.of([(0, (1,)), (0, (1,))]))
    with pytest.raises(ValueError, match="not a point"):
        pinch(base, PinchSpec.of([(2, (1, 1))]))
    with pytest.raises(ValueError, match="ramified"):
        pinch(base, PinchSpec.of([(0, (1, 0))]))


def test_pinch_over_plane_model_degree_law():
    # Lemma-type law: deg E grows by the number of glued points
    base = from_plane_model(parse_bivariate("y^2 - (x^3 - x)"))
    pts = [(y, base.fiber_points(y)[0]) for y in (2, 3) if base.fiber_points(y)]
    pts = [(x0, s) for x0 in range(2, 40) for s in base.fiber_points(x0)][:3]
    pts = list({p[0]: p for p in pts}.values())
    c = pinch(base, PinchSpec.of(pts))
    assert T(c).degree == T(base).degree + len(pts)
    assert branch_and_genus(c).p_a == branch_and_genus(base).p_a + len(pts) - 1


@pytest.mark.parametrize("ls", [(1, 2), (2, 3, 5), (1, 1, 1), (0, 0, 3), (4, 4, 4, 4)])
def test_pinch_tower(ls):
    tower = pinch_tower(ls)
    assert T(tower[-1]) == SplittingType(ls)
    degs = [0] + [T(c).degree for c in tower[1:]]
    assert [b - a for a, b in zip(degs, degs[1:])] == sorted(ls, reverse=True)


def test_pinch_tower_prime_field():
    assert T(pinch_tower((1, 3, 4), GF(10007))[-1]) == SplittingType((1, 3, 4))


def test_tower_fiber_points_are_algebra_points():
    c = pinch_tower((2, 3))[-1]
    for y in (0, 7, 11):
        pts = c.fiber_points(y)
        assert len(pts) == c.d
        assert all(c.is_algebra_point(y, p) for p in pts)


def test_binary_cubic_algebra_associative_and_typed():
    rng = random.Random(1)
    P = lambda n: Poly(QQ, [rng.randint(-9, 9) for _ in range(n + 1)]) if n >= 0 else Poly(QQ)
    for a1, a2 in [(1, 1), (1, 2), (2, 3), (3, 5)]:
        c = from_binary_cubic(P(2 * a1 - a2), P(a1), P(a2), P(2 * a2 - a1), a1, a2)
        c.validate()
        assert T(c) == SplittingType((a1, a2))


def test_validation_rejects_broken_tensors():
    good = from_plane_model(parse_bivariate("y^2 - x"))
    mult = [[list(cij) for cij in ci] for ci in good.mult]
    bad = [row[:] for row in mult]
    bad[1] = [mult[1][0], [Poly.const(QQ, 1), Poly.const(QQ, 1)]]
    bad[0] = [mult[0][0], [Poly.const(QQ, 0), Poly.const(QQ, 1)]]
    bad[1][0] = [Poly.const(QQ, 0), Poly.const(QQ, 2)]
    with pytest.raises(InvalidAlgebraError):
        CoverAlgebra(QQ, bad, good.infinity)
    with pytest.raises(InvalidAlgebraError, match="infinity"):
        CoverAlgebra(QQ, good.mult, [[1, 0], [0, 1]])


def test_json_round_trip():
    c = kummer_cover(3, parse_poly("x^4 + x + 1"))
    c2 = CoverAlgebra.from_json(c.to_json())
    assert T(c2) == T(c)
    t = pinch_tower((1, 2))[-1]
    assert T(CoverAlgebra.from_json(t.to_json())) == SplittingType((1, 2))


def test_reduced_presentation_preserves_type():
    c = kummer_cover(3, parse_poly("x^5 - x + 2"))
    r = reduced_presentation(c)
    assert T(r) == T(c)
    assert all(r.infinity[i][j] == 0 for i in range(3) for j in range(3) if i != j)


def test_flip_consistency():
    for c in (kummer_cover(3, parse_poly("x^4 + x + 1")), pinch_tower((1, 3))[-1]):
        E_dual, E = tschirnhausen(c)
        assert E_dual.flip().splitting_type() == E.dual()
        assert E_dual.twist(2).flip().splitting_type() == E.dual().shifted(2)


def test_degree_identity_on_smooth_models():
    for c in (kummer_cover(2, parse_poly("x^5 + 3*x + 1")), from_plane_model(parse_bivariate("y^3 - y - x^2"))):
        bg = branch_and_genus(c)
        assert T(c).degree == bg.p_a - 1 + c.d
        assert bg.independent_branch == bg.branch_degree


def test_normalize_affine_embedding():
    c = pinch_tower((1, 2))[-1]
    I = PolyMatrix.identity(QQ, 2)
    inf = [[1, 0], [0, 1]]
    zero = [Poly(QQ), Poly(QQ)]
    assert normalize_affine_embedding(zero, I, inf, c).is_identity()
    alpha = [parse_poly("x + 1"), parse_poly("3")]
    tr = normalize_affine_embedding(alpha, I, inf, c)
    assert list(tr.translation) == [-a for a in alpha]
    with pytest.raises(NotAnIsomorphism) as exc:
        normalize_affine_embedding(zero, PolyMatrix.diagonal(QQ, [parse_poly("x"), 1]), inf, c)
    assert exc.value.chart == "finite"
