from fractions import Fraction

import pytest
from hypothesis import given

from marked_spheres.scalars import (
    INF,
    GaussianRational,
    MixedBackendError,
    NotExactError,
    format_scalar,
    parse_scalar,
    sqrt,
    to_scalar,
    tolerance,
    try_sqrt,
)

from .conftest import gaussian, nonzero_gaussian

G = GaussianRational


def test_arithmetic_is_exact():
    z = G(1, 2)
    assert z * z == G(-3, 4)
    assert (G(1) / G(0, 1)) == G(0, -1)
    assert z - 1 == G(0, 2)
    assert 1 - z == G(0, -2)
    assert G(Fraction(1, 3)) * 3 == G(1)


def test_mixing_backends_is_rejected():
    with pytest.raises(MixedBackendError):
        G(1) + 0.5
    with pytest.raises(MixedBackendError):
        G(1) * 1j
    with pytest.raises(MixedBackendError):
        to_scalar(0.5, exact_backend=True)


def test_to_scalar_conversions():
    assert to_scalar(3) == G(3)
    assert to_scalar(Fraction(1, 2)) == G(Fraction(1, 2))
    assert isinstance(to_scalar(0.25), complex)
    assert to_scalar(G(1, 1), exact_backend=False) == 1 + 1j
    assert to_scalar(INF) is INF
    with pytest.raises(TypeError):
        to_scalar(True)


@given(nonzero_gaussian, nonzero_gaussian)
def test_field_laws(a, b):
    assert (a * b) / b == a
    assert a * (1 / a) == G(1)
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).norm() == a.norm() * b.norm()


@given(gaussian)
def test_sqrt_of_square(z):
    root = sqrt(z * z)
    assert root * root == z * z
    assert root in (z, -z)


def test_sqrt_irrational_raises():
    with pytest.raises(NotExactError):
        sqrt(G(2))
    assert try_sqrt(G(2)) is None
    assert sqrt(G(-4)) == G(0, 2)
    assert sqrt(G(3, 4)) == G(2, 1)


@given(gaussian)
def test_format_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@pytest.mark.parametrize(
    "text, expected",
    [("1/2,3", G(Fraction(1, 2), 3)), ("-4", G(-4)), ("0.5,1", 0.5 + 1j), ("2e0,0", 2 + 0j)],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("bad", ["", "1,2,3", "x,1", "nan,0", "inf"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_tolerance_env_override(monkeypatch):
    assert tolerance() == 1e-9
    monkeypatch.setenv("MODULI_TOLERANCE", "1e-6")
    assert tolerance() == 1e-6
    monkeypatch.setenv("MODULI_TOLERANCE", "-1")
    with pytest.raises(ValueError):
        tolerance()
