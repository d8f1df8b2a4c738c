import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from marked_spheres.action import DegenerateConfigurationError, OmegaPoint
from marked_spheres.perm import Permutation
from marked_spheres.scalars import GaussianRational

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussian = st.builds(GaussianRational, small_fracs, small_fracs)
nonzero_gaussian = gaussian.filter(bool)


@st.composite
def permutations(draw, degree):
    images = draw(st.permutations(range(1, degree + 1)))
    return Permutation(images)


@st.composite
def omega_points(draw, n):
    coords = draw(st.lists(gaussian, min_size=n - 2, max_size=n - 2, unique=True))
    try:
        return OmegaPoint(tuple(coords))
    except DegenerateConfigurationError:
        from hypothesis import assume

        assume(False)


@pytest.fixture
def rng():
    return random.Random(20240611)


def frac(a, b=1):
    return Fraction(a, b)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(RESULTS):
        line = f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}"
        if detail and not ok:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
