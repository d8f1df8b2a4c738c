"""Fixed loci of finite-order automorphisms of Ω_n.

For the canonical permutation ``σ = (1..m)(m+1..2m)...`` of a class
``(m, r, case)`` every fixed point has the same normalising map ``M``
(up to the angle choice), and the marks split into ``M``-orbits:

* the first cycle is the orbit ``∞ -> 0 -> 1 -> ...`` of ``∞``;
* each further cycle is the orbit of one free value, its last mark;
* the trailing fixed marks (cases B and C) are fixed points of ``M``.

For ``m >= 4``, ``M(x) = c / (c - x)`` with ``c = 4 cos²(π α / m)``: the map
``[[0, c], [-1, c]]`` has ``trace² / det = c``, and an elliptic element
rotating by ``2πα/m`` has ``trace² / det = 4 cos²(πα/m)``.  For ``m = 3``
this gives ``c = 1`` and ``M(x) = 1 / (1 - x)``; for ``m = 2`` the map is
``w / x`` where ``w`` is the first free value.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .action import (
    Certificate,
    CrossCheckError,
    OmegaPoint,
    apply_theta,
    certify,
    mobius_for,
)
from .moebius import Mobius, fixed_points
from .perm import FixedClass, Permutation, canonical_rep
from .scalars import INF, GaussianRational, to_scalar, tolerance, try_sqrt

# c = 4cos²(πα/m) is rational only for these (m, α)
_RATIONAL_ANCHORS = {(3, 1): Fraction(1), (4, 1): Fraction(2), (6, 1): Fraction(3)}


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def admissible_angles(m: int) -> tuple[int, ...]:
    """Integers in ``1..⌊(m-1)/2⌋`` coprime to ``m``."""
    return tuple(a for a in range(1, (m - 1) // 2 + 1) if math.gcd(a, m) == 1)


@dataclass(frozen=True)
class FixedLocusReport:
    m: int
    r: int
    case: str
    n: int
    dimension: int
    component_count: int
    admissible_angles: tuple
    component_labels: tuple

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "case": self.case,
            "n": self.n,
            "dimension": self.dimension,
            "component_count": self.component_count,
            "admissible_angles": list(self.admissible_angles),
            "component_labels": [str(x) for x in self.component_labels],
        }


def _check_class(m: int, r: int, case: str, n: int) -> FixedClass:
    cls = FixedClass(m, r, case)
    if cls.n != n:
        raise ValueError(f"(m={m}, r={r}, case {case}) does not live at n={n}")
    if n < 4:
        raise ValueError("need n >= 4")
    return cls


def component_labels(m: int, r: int, case: str, n: int) -> tuple:
    """Labels of the components of Fix(T).

    ``m = 2``: one label.  ``m = 3``: the sign of Im of the last mark (cases B,
    C) or one label (case A).  ``m >= 4``: ``α``, paired with that sign in
    cases B and C.
    """
    _check_class(m, r, case, n)
    if m == 2:
        return ("connected",)
    angles = (1,) if m == 3 else admissible_angles(m)
    if case == "A":
        return tuple((a, 0) for a in angles)
    return tuple((a, s) for a in angles for s in (1, -1))


def fixed_locus_report(m: int, r: int, case: str, n: int) -> FixedLocusReport:
    _check_class(m, r, case, n)
    if m == 2:
        count = 1
    elif (n + 1) % m == 0:
        count = totient(m) // 2
    else:
        count = totient(m)
    labels = component_labels(m, r, case, n)
    if len(labels) != count:
        raise CrossCheckError(f"label enumeration gives {len(labels)} components, formula {count}")
    return FixedLocusReport(
        m=m,
        r=r,
        case=case,
        n=n,
        dimension=r,
        component_count=count,
        admissible_angles=admissible_angles(m) if m >= 4 else (),
        component_labels=labels,
    )


def anchor_value(m: int, alpha: int):
    """``c = 4cos²(πα/m)``: exact when rational, else a float."""
    if (m, alpha) in _RATIONAL_ANCHORS:
        return GaussianRational(_RATIONAL_ANCHORS[(m, alpha)])
    return complex(4 * math.cos(math.pi * alpha / m) ** 2, 0.0)


def _anchor_map(m: int, alpha: int, free: Sequence, exact: bool) -> Mobius:
    one = GaussianRational(1) if exact else 1 + 0j
    zero = one - one
    if m == 2:
        w = free[0]
        return Mobius(zero, w, one, zero)
    c = anchor_value(m, alpha)
    if not exact:
        c = complex(c)
    return Mobius(zero, c, -one, c)


def _ordered_fixed_points(mob: Mobius, m: int):
    """Fixed points as ``(first, second)``; for m >= 3 the first lies in the upper half-plane."""
    pts = fixed_points(mob)
    if m == 2:
        return pts[0], pts[1]
    upper = [z for z in pts if complex(z).imag > 0]
    lower = [z for z in pts if complex(z).imag < 0]
    if len(upper) != 1 or len(lower) != 1:
        raise CrossCheckError(f"expected a conjugate pair of fixed points, got {pts}")
    return upper[0], lower[0]


def _can_be_exact(m: int, alpha: int, case: str, free: Sequence) -> bool:
    if not all(isinstance(v, GaussianRational) for v in free):
        return False
    if m != 2 and (m, alpha) not in _RATIONAL_ANCHORS:
        return False
    if case == "A":
        return True
    mob = _anchor_map(m, alpha, free, exact=True)
    a, b, c, d = mob.coefficients()
    return try_sqrt((a - d) * (a - d) + 4 * b * c) is not None


def witness(
    m: int,
    r: int,
    case: str,
    n: int,
    alpha: int = 1,
    free: Sequence = (),
    sign: int = 1,
) -> Certificate:
    """A certified point of Fix(T) for the canonical representative of ``(m, r, case)``.

    ``free`` holds the ``r`` chart values: the last mark of cycles 2..r+1, i.e.
    ``λ_{2m-3}, λ_{3m-3}, ...``; for ``m = 2`` the first of them is ``λ_1``
    and fixes ``M(x) = λ_1 / x``.  ``alpha`` picks the angle (``m >= 4``);
    ``sign`` picks which fixed point of ``M`` sits at the last mark (cases B
    and C): ``+1`` for the upper one (the principal root for ``m = 2``).
    The point is exact whenever every quantity involved is rational.
    """
    _check_class(m, r, case, n)
    if m >= 4:
        if math.gcd(alpha, m) != 1:
            raise ValueError(f"alpha={alpha} is not coprime to m={m}")
        if alpha not in admissible_angles(m):
            raise ValueError(f"alpha={alpha} not in admissible angles {admissible_angles(m)}")
    else:
        alpha = 1
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if len(free) != r:
        raise ValueError(f"class needs {r} free values, got {len(free)}")
    free = [to_scalar(v) for v in free]
    exact = _can_be_exact(m, alpha, case, free)
    if not exact:
        free = [complex(v) for v in free]

    mob = _anchor_map(m, alpha, free, exact)
    marks = [INF]
    for _ in range(m - 1):
        marks.append(mob(marks[-1]))
    for v in free:
        orbit = [v]
        for _ in range(m - 1):
            orbit.append(mob(orbit[-1]))
        # cycle (lm+1, ..., (l+1)m) holds M(v), M²(v), ..., v
        marks.extend(orbit[1:] + orbit[:1])
    if case != "A":
        first, second = _ordered_fixed_points(mob, m)
        if sign == -1:
            first, second = second, first
        marks.extend([first] if case == "B" else [second, first])
    point = OmegaPoint(tuple(marks[3:]))
    if point.n != n:
        raise AssertionError(f"built a point of Ω_{point.n}, expected Ω_{n}")
    return certify(point, holomorphic=[canonical_rep(m, r, case, n)])


def component_label(m: int, r: int, case: str, n: int, point: OmegaPoint):
    """Recover the component label of a point of Fix(T) from the point itself."""
    sigma = canonical_rep(m, r, case, n)
    if not apply_theta(sigma, point).equals(point):
        raise ValueError("point is not fixed by the canonical representative")
    if m == 2:
        return "connected"
    mob = mobius_for(sigma, point).to_float()
    a, b, c, d = mob.coefficients()
    invariant = ((a + d) ** 2 / (a * d - b * c)).real
    if m == 3:
        alpha = 1
    else:
        alpha = min(
            admissible_angles(m),
            key=lambda k: abs(4 * math.cos(math.pi * k / m) ** 2 - invariant),
        )
        if abs(4 * math.cos(math.pi * alpha / m) ** 2 - invariant) > 1e3 * tolerance():
            raise CrossCheckError(f"trace invariant {invariant} matches no admissible angle")
    if case == "A":
        return (alpha, 0)
    last = complex(point.coords[-1])
    return (alpha, 1 if last.imag > 0 else -1) if m >= 3 else (alpha, 0)


def normalizer_elements(sigma: Permutation, powers: Sequence[int] | None = None):
    """Yield ``(k, τ)`` with ``τ σ τ^-1 = σ^k``; ``k`` ranges over units mod the order.

    Built cycle by cycle: ``τ`` must carry each cycle of ``σ`` onto a cycle of
    ``σ^k`` so that ``τ(σ(x)) = σ^k(τ(x))``.
    """
    m = sigma.order()
    cycles = sigma.cycles()
    if len({len(c) for c in cycles}) != 1:
        raise ValueError("normalizer enumeration expects equal-length cycles")
    fixed = sigma.fixed_symbols()
    if powers is None:
        powers = [k for k in range(1, m) if math.gcd(k, m) == 1] or [1]
    degree = sigma.degree
    for k in powers:
        target = sigma ** k
        target_cycles = target.cycles()
        for assignment in itertools.permutations(range(len(target_cycles))):
            for starts in itertools.product(range(m), repeat=len(cycles)):
                for fixed_images in itertools.permutations(fixed):
                    images = [0] * degree
                    for cyc, t_index, start in zip(cycles, assignment, starts):
                        b = target_cycles[t_index][start]
                        for a in cyc:
                            images[a - 1] = b
                            b = target(b)
                    for x, y in zip(fixed, fixed_images):
                        images[x - 1] = y
                    yield k, Permutation(images)


def default_free(m: int, r: int, seed: int = 0):
    # small, well separated Gaussian rationals away from the first orbit
    base = [GaussianRational(Fraction(7 + 5 * j + seed, 3), Fraction(2 + j, 5)) for j in range(r)]
    if m == 2 and r >= 1:
        base[0] = GaussianRational(Fraction(-9, 4), Fraction(5, 2) + seed)
    return base


def component_witnesses(m: int, r: int, case: str, n: int, seed: int = 0) -> dict:
    """One certified witness per component label."""
    out = {}
    free = default_free(m, r, seed)
    for label in component_labels(m, r, case, n):
        if label == "connected":
            out[label] = witness(m, r, case, n, free=free)
            continue
        alpha, s = label
        out[label] = witness(m, r, case, n, alpha=alpha, free=free, sign=s or 1)
    return out


def normalizer_orbit_of_components(m: int, r: int, case: str, n: int) -> dict:
    """Map each component label to the labels reached from it by the normalizer of ⟨σ⟩."""
    sigma = canonical_rep(m, r, case, n)
    witnesses = component_witnesses(m, r, case, n)
    reached = {}
    for label, cert in witnesses.items():
        seen = set()
        for _, tau in normalizer_elements(sigma):
            image = apply_theta(tau, cert.point)
            seen.add(component_label(m, r, case, n, image))
            if len(seen) == len(witnesses):
                break
        reached[label] = seen
    return reached


def branch_stratum_image_count(m: int, r: int, case: str, n: int, verify: bool = True) -> int:
    """Number of components of the image of Fix(T) in the moduli space: always 1.

    For ``n <= 8`` (and ``verify``) this is checked by showing the normalizer
    of ⟨σ⟩ acts transitively on the components of Fix(T).
    """
    _check_class(m, r, case, n)
    if verify and n <= 8 and m > 2:
        labels = set(component_labels(m, r, case, n))
        for label, seen in normalizer_orbit_of_components(m, r, case, n).items():
            if seen != labels:
                raise CrossCheckError(
                    f"components {labels - seen} not reached from {label} by the normalizer"
                )
    return 1
