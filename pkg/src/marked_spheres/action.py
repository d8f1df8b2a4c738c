"""The action of S_{n+1} on Ω_n and the symmetries ``T ∘ J``.

A point ``λ = (λ_1, ..., λ_{n-2})`` of Ω_n stands for the ordered marked
sphere ``(p_1, ..., p_{n+1}) = (∞, 0, 1, λ_1, ..., λ_{n-2})``.  The
automorphism attached to ``σ`` reorders the marks to ``p_{σ^{-1}(i)}`` and
renormalises the first three back to ``(∞, 0, 1)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .moebius import Mobius, cross_ratio_normalizer
from .perm import Permutation
from .scalars import (
    INF,
    GaussianRational,
    MixedBackendError,
    conj,
    distance,
    format_scalar,
    parse_scalar,
    to_scalar,
    tolerance,
)

DEFAULT_STABILIZER_CAP = 8


class DegenerateConfigurationError(ValueError):
    """Coordinates collide (with each other or with 0, 1) exactly or within tolerance."""


@dataclass(frozen=True)
class OmegaPoint:
    """A point of Ω_n: ``n - 2`` distinct values avoiding 0 and 1."""

    coords: tuple
    tol: float = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        coords = tuple(to_scalar(x) for x in self.coords)
        if any(z is INF for z in coords):
            raise DegenerateConfigurationError("a coordinate collides with p_1 = ∞")
        if len(coords) < 1:
            raise ValueError("Ω_n needs n >= 3")
        if len({isinstance(z, GaussianRational) for z in coords}) > 1:
            raise MixedBackendError("coordinates mix exact and floating values")
        object.__setattr__(self, "coords", coords)
        if self.tol is None:
            object.__setattr__(self, "tol", tolerance())
        self._check_separation()

    @classmethod
    def of(cls, *values, tol: float | None = None) -> "OmegaPoint":
        return cls(tuple(values), tol)

    @property
    def n(self) -> int:
        return len(self.coords) + 2

    @property
    def is_exact(self) -> bool:
        return isinstance(self.coords[0], GaussianRational)

    def marks(self) -> tuple:
        """The configuration ``(p_1, ..., p_{n+1}) = (∞, 0, 1, λ_1, ...)``."""
        zero, one = (GaussianRational(0), GaussianRational(1)) if self.is_exact else (0j, 1 + 0j)
        return (INF, zero, one) + self.coords

    def _check_separation(self):
        vals = self.marks()[1:]
        if self.is_exact:
            if len(set(vals)) != len(vals):
                raise DegenerateConfigurationError(f"coordinates collide: {self}")
            return
        for (i, z), (j, w) in itertools.combinations(enumerate(vals), 2):
            if abs(z - w) <= self.tol:
                raise DegenerateConfigurationError(
                    f"marks p_{i + 2} and p_{j + 2} are within tolerance {self.tol}"
                )

    def to_float(self) -> "OmegaPoint":
        return OmegaPoint(tuple(complex(z) for z in self.coords), self.tol)

    def conjugate(self) -> "OmegaPoint":
        return OmegaPoint(tuple(conj(z) for z in self.coords), self.tol)

    def residual(self, other: "OmegaPoint") -> float:
        """Largest coordinate difference, as a float."""
        if self.n != other.n:
            raise ValueError("points live in different Ω_n")
        return max(distance(z, w) for z, w in zip(self.coords, other.coords))

    def equals(self, other: "OmegaPoint", tol: float | None = None) -> bool:
        """Exact equality when both are exact, else coordinatewise within tolerance."""
        if self.is_exact and other.is_exact:
            return self.coords == other.coords
        if self.is_exact != other.is_exact:
            raise MixedBackendError("cannot compare exact and floating points")
        return self.residual(other) <= (self.tol if tol is None else tol)

    def to_json(self) -> list[str]:
        return [format_scalar(z) for z in self.coords]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "OmegaPoint":
        return cls(tuple(parse_scalar(s) for s in items))

    def __str__(self):
        return "(" + ", ".join(format_scalar(z) for z in self.coords) + ")"


def mobius_for(sigma: Permutation, point: OmegaPoint) -> Mobius:
    """The normalising map ``M_{σ,λ}``: sends ``p_{σ^-1(1)}, p_{σ^-1(2)}, p_{σ^-1(3)}`` to ``∞, 0, 1``."""
    marks = point.marks()
    inv = sigma.inverse()
    return cross_ratio_normalizer(marks[inv(1) - 1], marks[inv(2) - 1], marks[inv(3) - 1])


def _check_degree(sigma: Permutation, point: OmegaPoint):
    if sigma.degree != point.n + 1:
        raise ValueError(f"permutation of degree {sigma.degree} cannot act on Ω_{point.n}")


def apply_theta(sigma: Permutation, point: OmegaPoint) -> OmegaPoint:
    """Image of ``point`` under the holomorphic automorphism attached to ``sigma``."""
    _check_degree(sigma, point)
    marks = point.marks()
    inv = sigma.inverse().images
    m = mobius_for(sigma, point)
    return OmegaPoint(tuple(m(marks[inv[i] - 1]) for i in range(3, point.n + 1)), point.tol)


def generator_a(n: int) -> Callable[[OmegaPoint], OmegaPoint]:
    """Closed form of the automorphism of ``(1,2)``: ``z_j -> 1/z_j``."""

    def a(point: OmegaPoint) -> OmegaPoint:
        if point.n != n:
            raise ValueError(f"expected a point of Ω_{n}")
        return OmegaPoint(tuple(1 / z for z in point.coords), point.tol)

    return a


def generator_b(n: int) -> Callable[[OmegaPoint], OmegaPoint]:
    """Closed form of the automorphism of ``(1,2,...,n+1)``."""

    def b(point: OmegaPoint) -> OmegaPoint:
        if point.n != n:
            raise ValueError(f"expected a point of Ω_{n}")
        z = point.coords
        last = z[-1]
        out = [last / (last - 1)] + [last / (last - w) for w in z[:-1]]
        return OmegaPoint(tuple(out), point.tol)

    return b


@dataclass(frozen=True)
class Symmetry:
    """The antiholomorphic involution ``Θ(σ) ∘ J`` for an involution (or identity) ``σ``."""

    twist: Permutation

    def __post_init__(self):
        if not (self.twist * self.twist).is_identity():
            raise ValueError(f"{self.twist} is not an involution")

    @property
    def beta(self) -> int:
        """Number of transpositions in the twist."""
        return len(self.twist.cycles())


def apply_symmetry(sym: Symmetry, point: OmegaPoint) -> OmegaPoint:
    return apply_theta(sym.twist, point.conjugate())


def apply_antiholomorphic(sigma: Permutation, point: OmegaPoint) -> OmegaPoint:
    """``Θ(σ) ∘ J`` for an arbitrary ``σ`` (not necessarily an involution)."""
    return apply_theta(sigma, point.conjugate())


@dataclass
class Certificate:
    """A point together with the maps that fix it and the observed residuals."""

    point: OmegaPoint
    permutations: list
    residuals: list
    kinds: list

    @property
    def exact(self) -> bool:
        return self.point.is_exact

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_json(),
            "exact": self.exact,
            "permutations": [str(p) for p in self.permutations],
            "kinds": list(self.kinds),
            "residuals": [float(x) for x in self.residuals],
        }


class CrossCheckError(AssertionError):
    """A closed-form count disagrees with an independent computation."""


class CertificationError(AssertionError):
    """A constructed witness is not fixed by the map it was built for."""


def certify(point: OmegaPoint, holomorphic=(), antiholomorphic=()) -> Certificate:
    """Check that ``point`` is fixed by each listed automorphism; raise otherwise.

    Exact points must be fixed exactly; floating points within ``point.tol``.
    """
    perms, residuals, kinds = [], [], []
    for kind, group, apply in (
        ("holomorphic", holomorphic, apply_theta),
        ("antiholomorphic", antiholomorphic, apply_antiholomorphic),
    ):
        for sigma in group:
            image = apply(sigma, point)
            res = point.residual(image)
            if not image.equals(point):
                raise CertificationError(
                    f"{kind} map of {sigma} moves {point} (residual {res:.3g})"
                )
            perms.append(sigma)
            residuals.append(res)
            kinds.append(kind)
    return Certificate(point, perms, residuals, kinds)


@dataclass
class StabilizerResult:
    holomorphic: list
    antiholomorphic: list | None = None

    @property
    def order(self) -> int:
        return len(self.holomorphic)

    @property
    def has_antiholomorphic(self) -> bool | None:
        if self.antiholomorphic is None:
            return None
        return bool(self.antiholomorphic)

    @property
    def has_symmetry(self) -> bool | None:
        if self.antiholomorphic is None:
            return None
        return any((s * s).is_identity() for s in self.antiholomorphic)


def _index_lookup(marks: tuple, exact: bool, tol: float):
    if exact:
        table = {z: i for i, z in enumerate(marks, start=1)}
        return lambda z: table.get(z)

    def find(z):
        if z is INF:
            return 1
        for i, w in enumerate(marks[1:], start=2):
            if abs(z - w) <= tol:
                return i
        return None

    return find


def _stabilizer_by_triples(point: OmegaPoint, antiholomorphic: bool) -> list[Permutation]:
    """All σ fixing ``point``: a fixing σ is pinned down by where it sends marks 1, 2, 3."""
    source = point.conjugate().marks() if antiholomorphic else point.marks()
    target = point.marks()
    find = _index_lookup(target, point.is_exact, point.tol)
    size = len(target)
    found = []
    for a, b, c in itertools.permutations(range(1, size + 1), 3):
        # M(source[a]) = ∞, M(source[b]) = 0, M(source[c]) = 1, i.e. σ(a)=1, σ(b)=2, σ(c)=3
        m = cross_ratio_normalizer(source[a - 1], source[b - 1], source[c - 1])
        images = []
        for k in range(1, size + 1):
            j = find(m(source[k - 1]))
            if j is None:
                break
            images.append(j)
        else:
            if len(set(images)) == size:
                found.append(Permutation(images))
    return sorted(found, key=lambda p: p.images)


def _stabilizer_brute(point: OmegaPoint, antiholomorphic: bool) -> list[Permutation]:
    size = point.n + 1
    source = point.conjugate() if antiholomorphic else point
    found = []
    for images in itertools.permutations(range(1, size + 1)):
        sigma = Permutation(images)
        try:
            image = apply_theta(sigma, source)
        except DegenerateConfigurationError:
            continue
        if image.equals(point):
            found.append(sigma)
    return found


def stabilizer(
    point: OmegaPoint,
    *,
    antiholomorphic: bool = False,
    method: str = "triples",
    cap: int = DEFAULT_STABILIZER_CAP,
) -> StabilizerResult:
    """Permutations whose automorphism fixes ``point``.

    ``method="brute"`` runs apply_theta over all of S_{n+1}; ``"triples"``
    enumerates the ordered triples that can be sent to ``(∞, 0, 1)``.  Both are
    exhaustive.  With ``antiholomorphic=True`` the σ with ``Θ(σ)∘J`` fixing
    the point are reported as well.
    """
    if point.n > cap:
        raise ValueError(f"stabilizer search capped at n={cap}, got n={point.n}")
    search = {"triples": _stabilizer_by_triples, "brute": _stabilizer_brute}.get(method)
    if search is None:
        raise ValueError(f"unknown method {method!r}")
    holo = search(point, False)
    anti = search(point, True) if antiholomorphic else None
    return StabilizerResult(holo, anti)


def random_point(n: int, rng: random.Random, *, exact: bool = True, spread: int = 50) -> OmegaPoint:
    """A random point of Ω_n (Gaussian rationals with small numerators, or floats)."""
    while True:
        if exact:
            coords = tuple(
                GaussianRational(_rand_frac(rng, spread), _rand_frac(rng, spread))
                for _ in range(n - 2)
            )
        else:
            coords = tuple(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(n - 2))
        try:
            return OmegaPoint(coords)
        except DegenerateConfigurationError:
            continue


def _rand_frac(rng: random.Random, spread: int) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 9))
