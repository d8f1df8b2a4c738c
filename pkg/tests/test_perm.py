import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from marked_spheres.perm import (
    FixedClass,
    Permutation,
    canonical_rep,
    classify_fixed_point_class,
    cycle_type,
    involution,
)

from .conftest import permutations


def test_parse_and_str():
    p = Permutation.parse("(1,2)(3,4,5)", 6)
    assert p.degree == p.n_plus_one == 6
    assert str(p) == "(1,2)(3,4,5)"
    assert p(3) == 4 and p(6) == 6
    assert str(Permutation.identity(4)) == "()"


@pytest.mark.parametrize("bad", ["(1,2", "(1,1)", "(0,2)", "1,2", "(1,7)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad, 5)


def test_product_applies_right_factor_first():
    p = Permutation.parse("(1,2)", 3)
    q = Permutation.parse("(2,3)", 3)
    # (p*q)(2) = p(q(2)) = p(3) = 3
    assert (p * q)(2) == 3


@given(st.integers(3, 9).flatmap(lambda d: st.tuples(permutations(d), permutations(d), permutations(d))))
def test_group_laws(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == Permutation.identity(p.degree)
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert p ** p.order() == Permutation.identity(p.degree)
    assert cycle_type(p.conjugate_by(q)) == cycle_type(p)


@given(st.integers(5, 10).flatmap(permutations))
def test_classification_matches_cycle_type(p):
    if p.is_identity():
        return
    cls = classify_fixed_point_class(p)
    lengths = [len(c) for c in p.cycles()]
    fixed = len(p.fixed_symbols())
    if len(set(lengths)) == 1 and fixed <= 2:
        assert cls == FixedClass(lengths[0], len(lengths) - 1, "ABC"[fixed])
        assert cls.n == p.degree - 1
    else:
        assert cls is None


def test_classification_errors():
    with pytest.raises(ValueError):
        classify_fixed_point_class(Permutation.identity(6))
    with pytest.raises(ValueError):
        classify_fixed_point_class(Permutation.parse("(1,2)", 4))


@pytest.mark.parametrize(
    "m, r, case, n, text",
    [(5, 0, "A", 4, "(1,2,3,4,5)"), (2, 1, "B", 4, "(1,2)(3,4)"), (3, 1, "C", 7, "(1,2,3)(4,5,6)")],
)
def test_canonical_rep(m, r, case, n, text):
    rep = canonical_rep(m, r, case, n)
    assert str(rep) == text and rep.degree == n + 1
    assert classify_fixed_point_class(rep) == FixedClass(m, r, case)


def test_canonical_rep_wrong_n():
    with pytest.raises(ValueError):
        canonical_rep(5, 0, "A", 5)


def test_involution():
    assert str(involution(2, 6)) == "(1,2)(3,4)"
    assert involution(0, 5).is_identity()
    with pytest.raises(ValueError):
        involution(4, 7)


def test_fixed_class_label_and_n():
    assert FixedClass(4, 1, "C").n == 9
    assert FixedClass(4, 1, "C").label == "B_{4,1}"
    with pytest.raises(ValueError):
        FixedClass(1, 0, "A")
    with pytest.raises(ValueError):
        FixedClass(3, 0, "D")


def test_involution_class_count_small():
    # conjugacy classes of involutions (with the identity) in S_k: floor(k/2) + 1
    for k in range(2, 8):
        types = {cycle_type(Permutation(p)) for p in itertools.permutations(range(1, k + 1))
                 if (Permutation(p) * Permutation(p)).is_identity()}
        assert len(types) == k // 2 + 1
