import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from scrollar.bivariate import BiPoly, binary_cubic_discriminant, discriminant_y, resultant_y
from scrollar.field import GF, QQ, CharacteristicError
from scrollar.parse import ParseError, parse_bivariate, parse_poly, parse_rational
from scrollar.poly import Poly, RationalFunction, poly_gcd, poly_xgcd, rational_roots, squarefree

X = sympy.Symbol("x")
Y = sympy.Symbol("y")


def P(text, field=QQ):
    return parse_poly(text, field)


def to_sympy(p: Poly):
    return sympy.Poly(list(reversed([sympy.Rational(str(c)) for c in p.coeffs])) or [0], X)


# oracles: sympy's gcd and discriminant, independent of this package

@pytest.mark.parametrize("f,g,want", [
    ("x^2 - 1", "x^2 - 2*x + 1", "x - 1"),
    ("x^3 + x", "x^2 + 1", "x^2 + 1"),
    ("3*x^2 - 3", "0", "x^2 - 1"),
    ("0", "0", "0"),
])
def test_gcd_examples(f, g, want):
    assert poly_gcd(P(f), P(g)) == P(want)


def test_gcd_matches_sympy_on_random_pairs():
    rng = random.Random(5)
    for _ in range(40):
        common = Poly(QQ, [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
        f = common * Poly(QQ, [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        g = common * Poly(QQ, [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        ours = poly_gcd(f, g)
        ref = sympy.gcd(to_sympy(f), to_sympy(g))
        if ours:
            assert (to_sympy(ours) - sympy.Poly(ref.monic(), X)).is_zero
            assert not (f % ours) and not (g % ours)
        else:
            assert ref.is_zero


def test_xgcd_bezout():
    f, g = P("x^4 - 1"), P("x^3 + 2*x + 5")
    d, s, t = poly_xgcd(f, g)
    assert s * f + t * g == d


@pytest.mark.parametrize("text,want", [("x^2 - 1", True), ("(x - 1)^2", False), ("5", True)])
def test_squarefree(text, want):
    assert squarefree(P(text)) is want


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree(Poly(QQ))


@given(st.lists(st.tuples(st.integers(-10**6, 10**6), st.integers(1, 10**6)), min_size=2, max_size=2))
@settings(max_examples=200)
def test_exactness_rationals(pair):
    (an, ad), (bn, bd) = pair
    a, b = QQ(an) / ad, QQ(bn) / bd
    assert (a + b) - b == a
    assert (a * b) / b == a if b else True


def test_exactness_ten_thousand_draws():
    rng = random.Random(0)
    for F in (QQ, GF(10007)):
        for _ in range(10_000):
            a = F(rng.randint(-10**9, 10**9)) / F(rng.randint(1, 10**4))
            b = F(rng.randint(-10**9, 10**9))
            assert (a + b) - b == a


@pytest.mark.parametrize("text,want", [("y^2 - x", "4*x"), ("y^2 - 1", "4"),
                                       ("y^3 - y - x", "-27*x^2 + 4"), ("y^2 - (x^3 - x)", "4*x^3 - 4*x")])
def test_discriminant_examples_against_sympy(text, want):
    f = parse_bivariate(text)
    ref = sympy.discriminant(sympy.sympify(text.replace("^", "**")), Y)
    assert sympy.expand(ref - sympy.sympify(want.replace("^", "**"))) == 0
    assert discriminant_y(f) == P(want)


def test_discriminant_sign_convention_via_resultant():
    # disc = (-1)^(d(d-1)/2) Res(f, f'); for y^2 - x the resultant is -4x
    f = parse_bivariate("y^2 - x")
    assert resultant_y(f, f.deriv_y()) == P("-4*x")


def test_discriminant_rejects_small_characteristic_and_non_monic():
    with pytest.raises(CharacteristicError):
        discriminant_y(parse_bivariate("y^3 - x", GF(3)))
    with pytest.raises(ValueError):
        discriminant_y(parse_bivariate("2*y^2 - x"))


def test_discriminant_vanishes_iff_repeated_factor():
    rng = random.Random(2)
    for _ in range(15):
        g = BiPoly(QQ, [Poly(QQ, [rng.randint(-3, 3), rng.randint(-3, 3)]), Poly.const(QQ, 1)])
        h = BiPoly(QQ, [Poly(QQ, [rng.randint(-3, 3)]), Poly(QQ, [0, rng.randint(1, 3)]), Poly.const(QQ, 1)])
        assert discriminant_y(g * g * h) == 0
        assert (discriminant_y(g * h) == 0) == (sympy.discriminant(
            sympy.sympify((g * h).to_str().replace("^", "**")), Y) == 0)


def test_binary_cubic_discriminant_matches_sympy():
    p, q, r, s = sympy.symbols("p q r s")
    z = sympy.Symbol("z")
    ref = sympy.expand(sympy.discriminant(p * z**3 + q * z**2 + r * z + s, z))
    ours = q**2 * r**2 - 4 * p * r**3 - 4 * q**3 * s - 27 * p**2 * s**2 + 18 * p * q * r * s
    assert sympy.expand(ref - ours) == 0
    one = Poly.const(QQ, 1)
    assert binary_cubic_discriminant(one, Poly(QQ), P("-1"), P("-x")) == P("-27*x^2 + 4")


def test_rational_function_lowest_terms_and_printing():
    r = parse_rational("(x^2 - 1)/(2*x - 2)")
    assert r == RationalFunction(P("x + 1"), P("2"))
    assert str(parse_rational("2 + 1/x")) == "2 + x^-1"
    assert parse_rational("x^3/x^5").degree == -2


def test_rational_roots():
    assert rational_roots(P("(2*x - 1)*(x + 3)*(x^2 + 1)")) == [QQ(-3), QQ(1) / 2]
    F = GF(7)
    assert sorted(int(r) for r in rational_roots(P("x^2 - 2", F))) == [3, 4]


@pytest.mark.parametrize("text", ["3/2*x^4 - x + 1", "y^3 - x*y - 1", "y^2 - x^3 + x", "-x^2*y + 7"])
def test_parse_roundtrip(text):
    f = parse_bivariate(text)
    assert parse_bivariate(f.to_str()) == f
    assert parse_bivariate(f.to_str()).to_str() == f.to_str()


def test_canonical_poly_string():
    assert str(P("1 - x + 3/2*x^4")) == "3/2*x^4 - x + 1"


def test_parse_error_offset():
    with pytest.raises(ParseError) as exc:
        parse_bivariate("y^2 -")
    assert exc.value.offset == 5


def test_prime_field_arithmetic():
    F = GF(10007)
    a = F(3) / F(4)
    assert a * 4 == 3
    with pytest.raises(ValueError):
        GF(10)
