import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from marked_spheres.action import Symmetry, apply_symmetry
from marked_spheres.perm import involution
from marked_spheres.reallocus import (
    A1,
    a_component,
    connectivity_operators,
    intersection_graph,
    intersection_solutions,
    intersects,
    max_beta,
    real_component_count,
    real_witness,
    symmetry_class_count,
)
from marked_spheres.scalars import GaussianRational

G = GaussianRational


@pytest.mark.parametrize("n, count", [(4, 3), (5, 4), (100, 51)])
def test_symmetry_class_count(n, count):
    assert symmetry_class_count(n) == count


def test_intersects_examples():
    assert intersects(10, 0, 5)
    assert (1, 1) in intersection_solutions(10, 0, 5)
    assert intersects(10, 4, 5) and (5, 1) in intersection_solutions(10, 4, 5)
    for n in range(4, 60):
        assert not intersects(n, 0, 1)


def test_f1_meets_f2_only_for_small_n():
    assert [n for n in range(4, 80) if intersects(n, 1, 2)] == [4, 5, 6, 7]


def test_f0_meets_exactly_the_near_half_betas():
    for n in range(4, 120):
        hits = {b for b in range(1, max_beta(n) + 1) if intersects(n, 0, b)}
        assert hits == {b for b in range(1, max_beta(n) + 1) if 2 * b in (n - 1, n, n + 1)}


def test_intersects_validation():
    with pytest.raises(ValueError):
        intersects(10, 2, 2)
    with pytest.raises(ValueError):
        intersects(10, 0, 6)


@given(st.integers(4, 80).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (n + 1) // 2), st.integers(0, (n + 1) // 2))))
def test_intersects_symmetric(args):
    n, a, b = args
    if a != b:
        assert intersects(n, a, b) == intersects(n, b, a)


@pytest.mark.parametrize("n", range(4, 101, 2))
def test_even_edges_use_gamma_one(n):
    for a in range(max_beta(n) + 1):
        for b in range(a + 1, max_beta(n) + 1):
            for m, g in intersection_solutions(n, a, b):
                assert g == 1 and (n // 2) % m == 0


def test_small_graphs():
    assert intersection_graph(6).sorted_edges() == [("0", "3"), ("1", "2"), ("2", "3")]
    assert intersection_graph(10).components() == [["0", "1", "4", "5"], ["2", "3"]]
    assert ["3", "4", "10", "11"] in intersection_graph(28).components()


def test_odd_graph_has_hub():
    g = intersection_graph(7)
    assert A1 in g.vertices
    assert all(g.has_edge(A1, str(b)) for b in range(5))
    assert A1 not in intersection_graph(8).vertices


@pytest.mark.parametrize("n, count", [(7, 1), (14, 3), (20, 1), (10, 2), (28, 2)])
def test_real_counts(n, count):
    assert real_component_count(n) == count


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_twice_prime_components(p):
    comps = [set(c) for c in intersection_graph(2 * p).components()]
    assert {str(x) for x in (0, 1, p - 1, p)} in comps
    for k in range(2, (p - 1) // 2 + 1):
        assert {str(k), str(p - k)} in comps


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_connectivity_operators_cover_edges(p):
    ops = connectivity_operators(p)
    edges = {frozenset((str(a), str(b))) for pairs in ops.values() for a, b in pairs}
    assert edges == intersection_graph(4 * p).edges


def test_real_witness_examples():
    assert real_witness(4, 0, [2, 3]).point.coords == (G(2), G(3))
    w = real_witness(4, 1, [math.pi / 3, math.pi / 2]).point
    assert abs(w.coords[0] - complex(0.5, math.sqrt(3) / 2)) < 1e-12
    assert abs(w.coords[1] - 1j) < 1e-12
    a1 = real_witness(5, "A1", [-1, G(1, 1)]).point
    assert a1.coords == (G(-1), G(1, 1), G(Fraction(-1, 2), Fraction(-1, 2)))


@pytest.mark.parametrize("n", range(4, 16))
def test_default_witnesses_are_exact_and_certified(n):
    for beta in range(max_beta(n) + 1):
        w = real_witness(n, beta)
        assert w.point.is_exact
        sym = Symmetry(involution(beta, n + 1))
        assert apply_symmetry(sym, w.point) == w.point


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_a_pieces(n):
    assert a_component(real_witness(n, "A1").point) == "A1"
    assert a_component(real_witness(n, "A2").point) == "A2"
    assert a_component(real_witness(n, "A3").point) == "A3"


def test_real_witness_errors():
    with pytest.raises(ValueError):
        real_witness(6, "A1")
    with pytest.raises(ValueError):
        real_witness(5, "A1", [1, G(1, 1)])
    with pytest.raises(ValueError):
        real_witness(4, 0, [G(2, 1), 3])
    with pytest.raises(ValueError):
        real_witness(4, 1, [G(1, 1), G(0, 1)])
    with pytest.raises(ValueError):
        real_witness(4, 3)


def test_beta_two_seeds():
    w = real_witness(5, 2, [Fraction(4), G(Fraction(6, 5), Fraction(8, 5)), G(0, 2)])
    assert w.point.is_exact
