import math

import pytest
from hypothesis import assume, given

from marked_spheres.moebius import Mobius, cross_ratio_normalizer, fixed_points, order_of
from marked_spheres.scalars import INF, GaussianRational, NotExactError

from .conftest import gaussian

G = GaussianRational


def mob(a, b, c, d, anti=False):
    return Mobius(G(a), G(b), G(c), G(d), anti)


def test_degenerate_map_rejected():
    with pytest.raises(ValueError):
        mob(1, 2, 2, 4)


def test_infinity_handling():
    m = mob(0, 1, 1, 0)
    assert m(INF) == G(0)
    assert m(G(0)) is INF
    assert mob(2, 1, 0, 1)(INF) is INF


@given(gaussian, gaussian, gaussian)
def test_normalizer_sends_triple(p, q, r):
    assume(len({p, q, r}) == 3)
    n = cross_ratio_normalizer(p, q, r)
    assert n(p) is INF and n(q) == G(0) and n(r) == G(1)


@pytest.mark.parametrize("slot", [0, 1, 2])
def test_normalizer_with_infinite_point(slot):
    pts = [G(2, 1), G(-1), G(3)]
    pts[slot] = INF
    n = cross_ratio_normalizer(*pts)
    assert [n(x) for x in pts] == [INF, G(0), G(1)]


def test_composition_and_inverse():
    f, g = mob(1, 2, 3, 5), mob(0, 1, -1, 3)
    z = G(7, -2)
    assert (f * g)(z) == f(g(z))
    assert (f * f.inverse()).is_identity()
    assert (f**3)(z) == f(f(f(z)))


def test_antiholomorphic_composition():
    f = Mobius(G(1), G(0, 1), G(0), G(1), True)  # z -> conj(z) + i
    g = mob(2, 0, 0, 1)
    z = G(1, 3)
    assert (f * g)(z) == f(g(z))
    assert (g * f)(z) == g(f(z))
    assert (f * f.inverse())(z) == z
    assert (f * g).antiholomorphic and not (f * f).antiholomorphic


def test_order_and_fixed_points():
    assert order_of(mob(0, 2, -1, 2)) == 4
    assert order_of(mob(0, 1, -1, 1)) == 3
    assert order_of(mob(1, 1, 0, 1)) == math.inf
    assert set(fixed_points(mob(0, 2, -1, 2))) == {G(1, 1), G(1, -1)}
    assert fixed_points(mob(2, 1, 0, 1)) == [G(-1), INF]
    with pytest.raises(NotExactError):
        fixed_points(mob(0, 1, -1, 1))
    pts = fixed_points(mob(0, 1, -1, 1).to_float())
    assert all(abs(p.real - 0.5) < 1e-12 for p in pts)
    assert sorted(round(p.imag, 9) for p in pts) == [round(-math.sqrt(3) / 2, 9), round(math.sqrt(3) / 2, 9)]


def test_projective_equality_and_dict():
    assert mob(1, 2, 3, 4).projectively_equal(mob(2, 4, 6, 8))
    assert not mob(1, 2, 3, 4).projectively_equal(mob(1, 2, 3, 5))
    d = mob(1, 0, 0, 1).to_dict()
    assert d == {"coefficients": [["1,0", "0,0"], ["0,0", "1,0"]], "orientation": "holomorphic"}
