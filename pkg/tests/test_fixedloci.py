import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from marked_spheres.action import OmegaPoint, apply_theta, generator_a
from marked_spheres.fixedloci import (
    admissible_angles,
    anchor_value,
    branch_stratum_image_count,
    component_label,
    component_labels,
    component_witnesses,
    fixed_locus_report,
    normalizer_elements,
    totient,
    witness,
)
from marked_spheres.moebius import Mobius, order_of
from marked_spheres.perm import FixedClass, canonical_rep
from marked_spheres.scalars import GaussianRational

G = GaussianRational


def classes_up_to(nmax):
    for n in range(4, nmax + 1):
        for case, shift in (("A", -1), ("B", 0), ("C", 1)):
            total = n - shift
            for m in range(2, total + 1):
                if total % m == 0:
                    yield m, total // m - 1, case, n


@pytest.mark.parametrize(
    "m, r, case, n, count",
    [(5, 0, "A", 4, 2), (2, 1, "B", 4, 1), (5, 1, "B", 10, 4), (6, 0, "A", 5, 1), (3, 1, "B", 6, 2)],
)
def test_report_counts(m, r, case, n, count):
    rep = fixed_locus_report(m, r, case, n)
    assert rep.component_count == count
    assert rep.dimension == r


def test_report_rejects_wrong_n():
    with pytest.raises(ValueError):
        fixed_locus_report(5, 0, "A", 5)


def test_totient_and_angles():
    assert [totient(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert admissible_angles(12) == (1, 5)
    assert admissible_angles(7) == (1, 2, 3)


@pytest.mark.parametrize("m", range(3, 13))
def test_anchor_map_has_order_m(m):
    for alpha in admissible_angles(m) or (1,):
        c = complex(anchor_value(m, alpha))
        assert order_of(Mobius(0j, c, -1 + 0j, c)) == m


def test_anchor_specialisations_are_exact():
    assert anchor_value(3, 1) == G(1)
    assert anchor_value(4, 1) == G(2)
    assert anchor_value(6, 1) == G(3)


def test_witness_examples():
    assert witness(4, 0, "B", 4).point.coords[0] == G(2)
    assert witness(3, 1, "A", 5, free=[G(5)]).point == OmegaPoint.of(
        G(Fraction(-1, 4)), G(Fraction(4, 5)), G(5)
    )
    assert witness(2, 1, "B", 4, free=[G(4)]).point == OmegaPoint.of(G(4), G(2))
    assert witness(2, 1, "B", 4, free=[G(4)], sign=-1).point == OmegaPoint.of(G(4), G(-2))


def test_anchor_orbit_for_m4():
    # ∞ -> 0 -> 1 -> 2 -> ∞ under x -> 2/(2-x)
    cert = witness(4, 0, "B", 4)
    rep = canonical_rep(4, 0, "B", 4)
    assert apply_theta(rep, cert.point) == cert.point


def test_witness_errors():
    with pytest.raises(ValueError):
        witness(6, 0, "A", 5, alpha=2)
    with pytest.raises(ValueError):
        witness(3, 1, "A", 5, free=[])
    with pytest.raises(ValueError):
        witness(2, 1, "B", 4, free=[G(1)])


@pytest.mark.parametrize("m, r, case, n", list(classes_up_to(9)))
def test_every_witness_is_certified_and_labelled(m, r, case, n):
    witnesses = component_witnesses(m, r, case, n)
    assert set(witnesses) == set(component_labels(m, r, case, n))
    for label, cert in witnesses.items():
        assert cert.exact or cert.max_residual < 1e-9
        assert component_label(m, r, case, n, cert.point) == label


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(1, 30)), min_size=2, max_size=2, unique=True))
def test_witness_map_is_injective(vals):
    frees = [G(a, b) for a, b in vals]
    pts = [witness(3, 1, "A", 5, free=[f]).point for f in frees]
    assert pts[0] != pts[1]


def test_dimension_matches_free_parameters():
    for m, r, case, n in classes_up_to(10):
        assert fixed_locus_report(m, r, case, n).dimension == r


@pytest.mark.parametrize("m, r, case, n", [c for c in classes_up_to(8) if c[0] > 2])
def test_normalizer_is_transitive_on_components(m, r, case, n):
    assert branch_stratum_image_count(m, r, case, n) == 1


def test_normalizer_elements_conjugate_correctly():
    sigma = canonical_rep(3, 1, "C", 7)
    seen = 0
    for k, tau in normalizer_elements(sigma):
        assert tau * sigma * tau.inverse() == sigma**k
        seen += 1
    assert seen > 0


@pytest.mark.parametrize("m, r, case, n", [c for c in classes_up_to(8) if c[0] > 2 and c[2] != "A"])
def test_inverting_element_swaps_orientation(m, r, case, n):
    sigma = canonical_rep(m, r, case, n)
    for (alpha, s), cert in component_witnesses(m, r, case, n).items():
        images = {
            component_label(m, r, case, n, apply_theta(tau, cert.point))
            for _, tau in itertools_take(normalizer_elements(sigma, powers=[m - 1]), 400)
        }
        assert (alpha, -s) in images


def itertools_take(it, k):
    for i, x in enumerate(it):
        if i >= k:
            return
        yield x


def test_generator_a_exchanges_m3_constants():
    # A does not normalise (1,2,3)(4,5,6), but it carries the last mark (1 ± i√3)/2 to its conjugate
    cert = witness(3, 1, "B", 6, free=[G(5, 1)])
    image = generator_a(6)(cert.point.to_float())
    last = complex(cert.point.coords[-1])
    assert abs(image.coords[-1] - last.conjugate()) < 1e-12
    assert abs(last - complex(0.5, math.sqrt(3) / 2)) < 1e-12


# --- symbolic oracle for r = 0 ------------------------------------------------


def _normalizer(p, q, r, x):
    """Map p, q, r to ∞, 0, 1; None stands for ∞."""
    if x is None:
        # value at ∞; x cannot equal p since the marks are distinct
        if q is None:
            return sp.Integer(0)
        if r is None:
            return sp.Integer(1)
        return (r - p) / (r - q)
    if p is None:
        return (x - q) / (r - q)
    if q is None:
        return (r - p) / (x - p)
    if r is None:
        return (x - q) / (x - p)
    return (x - q) * (r - p) / ((x - p) * (r - q))


def _symbolic_fixed_points(sigma, n):
    lam = sp.symbols(f"l1:{n - 1}")
    marks = [None, sp.Integer(0), sp.Integer(1), *lam]
    img = [marks[sigma(k) - 1] for k in range(1, n + 2)]
    eqs = []
    for k in range(3, n + 1):
        val = _normalizer(img[0], img[1], img[2], img[k])
        eqs.append(sp.numer(sp.together(val - marks[k])))
    sols = sp.solve(eqs, lam, dict=True)
    good = []
    for s in sols:
        vals = [complex(sp.N(s[v])) for v in lam if v in s]
        if len(vals) != len(lam):
            continue
        pts = [0, 1, *vals]
        if all(abs(a - b) > 1e-9 for i, a in enumerate(pts) for b in pts[i + 1 :]):
            good.append(vals)
    return good


@pytest.mark.parametrize("m, case, n", [(5, "A", 4), (4, "B", 4), (3, "C", 4), (6, "A", 5), (5, "B", 5), (4, "C", 5)])
def test_r0_fixed_points_match_symbolic_solve(m, case, n):
    sigma = canonical_rep(m, 0, case, n)
    symbolic = _symbolic_fixed_points(sigma, n)
    rep = fixed_locus_report(m, 0, case, n)
    assert len(symbolic) == rep.component_count
    ours = [c.point for c in component_witnesses(m, 0, case, n).values()]
    for pt in ours:
        coords = [complex(z) for z in pt.coords]
        assert any(max(abs(a - b) for a, b in zip(coords, s)) < 1e-9 for s in symbolic)


def test_fixed_class_n_formula_covers_examples():
    assert FixedClass(5, 0, "A").n == 4
    assert FixedClass(3, 1, "B").n == 6
