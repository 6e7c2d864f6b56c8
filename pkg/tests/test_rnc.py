import random
from fractions import Fraction

import pytest

from scrollar.field import GF, QQ
from scrollar.poly import Poly
from scrollar.rnc import (
    RncData, lingen_matrix, lingen_oracle, lingen_rank, lingen_sample_rank, lingen_values,
    proportionality_scalar, random_rnc, rnc_parametrize,
)

R3 = RncData((0, 1, 2), (1, 1, 1))


def test_parametrization_components():
    comps, G, rep = rnc_parametrize(R3)
    assert [str(c) for c in comps] == ["x^2 - 3*x + 2", "x^2 - 2*x", "x^2 - x"]
    assert [c(0) for c in comps] == [2, 0, 0]
    assert rep.coordinate_points_hit and rep.no_base_points


def test_transversality_report():
    _, G, rep = rnc_parametrize(R3)
    assert G == Poly(QQ, [2, -6, 3])
    assert rep.G_squarefree and rep.sum_b == 3 and rep.transverse
    flagged = rnc_parametrize(RncData((0, 1, 2), (1, -2, 1)))[2]
    assert flagged.sum_b == 0 and not flagged.transverse


def test_G_values_at_nodes():
    # G(a_i) = b_i F'(a_i)
    r = random_rnc(random.Random(4), 5)
    for a, b in zip(r.a, r.b):
        assert r.G(a) == b * r.F.deriv()(a)


@pytest.mark.parametrize("bad", [((0, 0, 1), (1, 1, 1)), ((0, 1, 2), (1, 0, 1)), ((0, 1), (1, 1, 1))])
def test_invalid_data(bad):
    with pytest.raises(ValueError):
        RncData(*bad)


def test_pairing_hand_values():
    # 0-based keys: the 1-indexed pair (1,2) is (0,1)
    col = lingen_values(R3, 1, 0)
    assert col[(0, 1)] == 1
    assert col[(1, 0)] == 0
    assert lingen_values(R3, 0, 1)[(0, 1)] == 1
    assert len(col) == 6


def test_oracle_matches_closed_form():
    for uv in [(1, 0), (0, 1), (3, -2)]:
        x, y = lingen_values(R3, *uv), lingen_oracle(R3, *uv)
        assert proportionality_scalar(x, y) == 1
    # zeros where u a_j + v = 0
    o = lingen_oracle(R3, 1, -1)
    assert o[(0, 1)] == 0 and o[(2, 1)] == 0


@pytest.mark.parametrize("field", [QQ, GF(10007)])
def test_oracle_random_d4(field):
    rng = random.Random(9)
    for _ in range(5):
        r = random_rnc(rng, 4, field)
        u, v = field(rng.randint(-50, 50)), field(rng.randint(1, 50))
        assert proportionality_scalar(lingen_values(r, u, v), lingen_oracle(r, u, v)) == 1


def test_lingen_matrix_shape():
    m = lingen_matrix(R3)
    assert len(m) == 2 and all(len(row) == 6 for row in m)


def test_ranks():
    assert lingen_rank(3, 40, 1) == 6
    assert lingen_rank(4, 60, 1) == 12
    few = lingen_sample_rank(3, 3, 1)
    assert few.rank <= 3 and few.inconclusive and not few.full
