"""Independent checks: the reflection-count integer system and explicit witness configurations.

Nothing here uses the closed intersection criterion from :mod:`reallocus`;
solvability is rederived from the point counts on the two reflection circles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .action import (
    Certificate,
    OmegaPoint,
    Symmetry,
    certify,
)
from .moebius import cross_ratio_normalizer
from .perm import FixedClass, Permutation, canonical_rep, classify_fixed_point_class
from .scalars import INF, GaussianRational, conj, is_inf, tolerance

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79)


@dataclass(frozen=True)
class DeltaSolution:
    """Counts for a pair of reflections generating a dihedral group of order ``4m``.

    ``gamma`` points sit at the two rotation poles, ``delta1`` / ``delta2``
    orbits of size ``2m`` on the axes of the first / second reflection class,
    and ``free`` orbits of size ``4m`` off every axis.
    """

    m: int
    gamma: int
    delta1: int
    delta2: int
    free: int = 0

    def as_tuple(self) -> tuple:
        base = (self.m, self.gamma, self.delta1, self.delta2)
        return base if self.free == 0 else base + (self.free,)

    def size(self) -> int:
        return self.gamma + 2 * self.m * (self.delta1 + self.delta2) + 4 * self.m * self.free


def _check_betas(n: int, b1: int, b2: int) -> None:
    top = (n + 1) // 2
    for b in (b1, b2):
        if not 0 <= b <= top:
            raise ValueError(f"beta={b} outside 0..{top} for n={n}")


def delta_system_solve(n: int, b1: int, b2: int, *, free_orbits: bool = False) -> list[DeltaSolution]:
    """All nonnegative solutions of the reflection-count system for ``(β₁, β₂)``.

    With ``free_orbits`` each orbit of size ``4m`` contributes ``2m``
    transpositions to both reflections; without it only pole and axis orbits
    are allowed.
    """
    _check_betas(n, b1, b2)
    out = []
    for gamma in (0, 1, 2):
        r1, r2 = n + 1 - 2 * b1 - gamma, n + 1 - 2 * b2 - gamma
        if r1 < 0 or r2 < 0 or r1 % 2 or r2 % 2:
            continue
        d1, d2 = r1 // 2, r2 // 2
        # 2β₁ + 2β₂ = (4m - 2)(δ₁ + δ₂) + 8mg, so m is bounded by β₁ + β₂ + 1
        for m in range(1, b1 + b2 + 2):
            extra1 = 2 * b1 - 2 * m * d2 - (2 * m - 2) * d1
            extra2 = 2 * b2 - 2 * m * d1 - (2 * m - 2) * d2
            if extra1 != extra2 or extra1 < 0 or extra1 % (4 * m):
                continue
            g = extra1 // (4 * m)
            if g and not free_orbits:
                continue
            out.append(DeltaSolution(m, gamma, d1, d2, g))
    return out


def _normalize(points: Sequence) -> OmegaPoint:
    n_map = cross_ratio_normalizer(points[0], points[1], points[2])
    return OmegaPoint(tuple(n_map(z) for z in points[3:]))


def _position(points: Sequence, z, exact: bool) -> int:
    for i, w in enumerate(points, start=1):
        if is_inf(z) or is_inf(w):
            if is_inf(z) and is_inf(w):
                return i
        elif (z == w) if exact else abs(complex(z) - complex(w)) <= tolerance():
            return i
    raise KeyError(f"{z} is not a marked point")


def _induced(points: Sequence, f, exact: bool) -> Permutation:
    """The permutation ``k -> index of f(P_k)``."""
    return Permutation(_position(points, f(z), exact) for z in points)


def _rotation(k: int, m: int):
    """``e^{iπk/(2m)}``, exact when it is a power of ``i``."""
    if k % m == 0:
        q = (k // m) % 4
        return GaussianRational(*((1, 0), (0, 1), (-1, 0), (0, -1))[q])
    return cmath.exp(1j * math.pi * k / (2 * m))


def _mul(a, b):
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        return a * b
    return complex(a) * complex(b)


@dataclass
class DihedralWitness:
    certificate: Certificate
    solution: DeltaSolution
    symmetries: tuple
    configuration: tuple

    @property
    def point(self) -> OmegaPoint:
        return self.certificate.point

    def to_dict(self) -> dict:
        d = self.certificate.to_dict()
        d["solution"] = list(self.solution.as_tuple())
        d["betas"] = [s.beta for s in self.symmetries]
        return d


def dihedral_configuration(solution: DeltaSolution, seed: int = 0) -> list:
    """Marked points invariant under ``z -> conj(z)`` and ``z -> e^{iπ/m} conj(z)``.

    Orbit radii are distinct primes starting at the ``seed``-th prime.
    """
    m = solution.m
    radii = iter(_PRIMES[seed:])
    pts: list = [GaussianRational(0), INF][: solution.gamma]
    for offset, count in ((0, solution.delta1), (1, solution.delta2)):
        for _ in range(count):
            rho = next(radii)
            pts.extend(_mul(GaussianRational(rho), _rotation(offset + 2 * j, m)) for j in range(2 * m))
    # a direction off every axis: exact for m <= 2, else the angle π/(3m)
    generic = GaussianRational(2, 1) if m <= 2 else cmath.exp(1j * math.pi / (3 * m))
    for _ in range(solution.free):
        z = _mul(GaussianRational(next(radii)), generic)
        for j in range(2 * m):
            rot = _rotation(2 * j, m)
            pts.append(_mul(rot, z))
            pts.append(_mul(rot, conj(z)))
    if any(isinstance(p, complex) for p in pts):
        pts = [p if is_inf(p) else complex(p) for p in pts]
    return pts


def dihedral_witness(
    n: int, b1: int, b2: int, solution=None, *, seed: int = 0, retries: int = 5
) -> DihedralWitness:
    """A point of Ω_n fixed by two symmetries with ``β₁`` and ``β₂`` transpositions."""
    if solution is None:
        sols = delta_system_solve(n, b1, b2, free_orbits=True)
        if not sols:
            raise ValueError(f"no reflection configuration for n={n}, betas ({b1}, {b2})")
        solution = sols[0]
    elif not isinstance(solution, DeltaSolution):
        solution = DeltaSolution(*solution)
    if solution not in delta_system_solve(n, b1, b2, free_orbits=True):
        raise ValueError(f"{solution.as_tuple()} does not solve the system for n={n}, ({b1}, {b2})")
    if solution.size() != n + 1:
        raise AssertionError("orbit sizes do not add up to n+1")
    last_error = None
    for attempt in range(retries):
        pts = dihedral_configuration(solution, seed + attempt)
        exact = all(is_inf(p) or isinstance(p, GaussianRational) for p in pts)
        rot = _rotation(2, solution.m)
        reflections = (
            lambda z: z if is_inf(z) else conj(z),
            lambda z: z if is_inf(z) else _mul(rot, conj(z)),
        )
        try:
            perms = [_induced(pts, f, exact) for f in reflections]
            point = _normalize(pts)
        except (KeyError, ValueError) as exc:
            last_error = exc
            continue
        syms = tuple(Symmetry(p) for p in perms)
        if (syms[0].beta, syms[1].beta) != (b1, b2):
            raise AssertionError(f"reflections give betas {(syms[0].beta, syms[1].beta)}")
        if (perms[1] * perms[0]).order() != 2 * solution.m:
            raise AssertionError("reflection product does not have order 2m")
        cert = certify(point, antiholomorphic=perms)
        return DihedralWitness(cert, solution, syms, tuple(pts))
    raise ValueError(f"collision in every placement tried: {last_error}")


@dataclass
class KleinWitness:
    certificate: Certificate
    classes: tuple

    @property
    def point(self) -> OmegaPoint:
        return self.certificate.point

    def to_dict(self) -> dict:
        d = self.certificate.to_dict()
        d["classes"] = [[c.m, c.r, c.case] for c in self.classes]
        return d


def klein_configuration(n: int) -> list[GaussianRational]:
    """Marked points invariant under ``z -> 1/z`` and ``z -> -z``; ``n >= 5`` odd."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"need odd n >= 5, got {n}")
    # n + 1 = 4 * quads + 2, plus the pair ±i when n = 3 (mod 4)
    quads = (n - 1) // 4 if n % 4 == 1 else (n - 3) // 4
    pts = []
    for k in range(quads):
        z = GaussianRational(k + 2, 1)
        pts.extend([z, 1 / z, -z, -1 / z])
    if n % 4 == 3:
        pts.extend([GaussianRational(0, 1), GaussianRational(0, -1)])
    pts.extend([GaussianRational(1), GaussianRational(-1)])
    assert len(pts) == n + 1
    return pts


def klein_witness(n: int) -> KleinWitness:
    """A point fixed by both involution classes at odd ``n``: the two involution strata meet."""
    pts = klein_configuration(n)
    one = GaussianRational(1)
    sigma1 = _induced(pts, lambda z: one / z, True)
    sigma2 = _induced(pts, lambda z: -z, True)
    point = _normalize(pts)
    expected = canonical_rep(2, (n - 3) // 2, "C", n)
    if sigma1 != expected:
        raise AssertionError(f"first involution {sigma1} is not the canonical {expected}")
    classes = (classify_fixed_point_class(sigma1), classify_fixed_point_class(sigma2))
    wanted = (FixedClass(2, (n - 3) // 2, "C"), FixedClass(2, (n - 1) // 2, "A"))
    if classes != wanted:
        raise AssertionError(f"involution classes {classes}, expected {wanted}")
    cert = certify(point, holomorphic=[sigma1, sigma2])
    return KleinWitness(cert, classes)


def involution_relations_hold(point: OmegaPoint) -> bool:
    """``λ_{2j} λ_{2j+1} = λ_1`` for every pair the canonical case-C involution swaps."""
    lam = point.coords
    n = point.n
    lam1 = lam[0]
    for j in range(1, (n - 3) // 2):
        if lam[2 * j - 1] * lam[2 * j] != lam1:
            return False
    return True
