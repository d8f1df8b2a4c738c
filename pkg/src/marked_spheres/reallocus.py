"""Symmetry classes, the intersection criterion and the intersection graphs of the real locus.

Vertices of the intersection graph are ``β = 0..⌊(n+1)/2⌋`` (the irreducible
component F_β fixed by a symmetry whose twist has ``β`` transpositions),
plus the hub ``A1`` for odd ``n``, which meets every F_β.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .action import Certificate, CrossCheckError, OmegaPoint, certify
from .graph import ComponentGraph
from .perm import involution
from .scalars import GaussianRational, conj, to_scalar, tolerance, try_sqrt

A1 = "A1"


def _require_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")


def symmetry_class_count(n: int) -> int:
    _require_n(n)
    return (n + 3) // 2


def max_beta(n: int) -> int:
    return (n + 1) // 2


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def intersection_solutions(n: int, b1: int, b2: int) -> list[tuple[int, int]]:
    """All ``(m, γ)`` with ``2m(β₁+β₂) = (2m-1)(n+1-γ)``.

    ``2m`` must divide ``n+1-γ`` (it is coprime to ``2m-1``), which fixes the
    parity of ``γ`` and bounds ``m``.
    """
    _require_n(n)
    top = max_beta(n)
    for b in (b1, b2):
        if not 0 <= b <= top:
            raise ValueError(f"beta={b} outside 0..{top} for n={n}")
    if b1 == b2:
        raise ValueError("betas must differ")
    out = []
    for gamma in (0, 1, 2):
        k = n + 1 - gamma
        if k % 2:
            continue
        for m in _divisors(k // 2):
            if 2 * m * (b1 + b2) == (2 * m - 1) * k:
                out.append((m, gamma))
    return out


def intersects(n: int, b1: int, b2: int) -> bool:
    return bool(intersection_solutions(n, b1, b2))


def intersection_graph(n: int) -> ComponentGraph:
    _require_n(n)
    betas = list(range(max_beta(n) + 1))
    vertices = [str(b) for b in betas] + ([A1] if n % 2 else [])
    graph = ComponentGraph(vertices, name=f"G_{n}")
    for i, b1 in enumerate(betas):
        for b2 in betas[i + 1 :]:
            if intersects(n, b1, b2):
                graph.add_edge(str(b1), str(b2))
    if n % 2:
        for b in betas:
            graph.add_edge(A1, str(b))
    return graph


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def expected_real_count(n: int) -> int | None:
    """Closed-form component counts where one is known, else ``None``.

    Odd n: 1.  ``n = 2p``, p >= 5 prime: ``(p-1)/2``.  ``n = 4p``, p prime:
    connected iff ``p`` is 2, 3 or 5 (returned as 1, or ``-1`` for "more than one").
    ``n = 2r`` with odd ``r >= 5``: more than one (``-1``).
    """
    if n % 2:
        return 1
    half = n // 2
    if half % 2 and _is_prime(half) and half >= 5:
        return (half - 1) // 2
    if n % 4 == 0 and _is_prime(n // 4):
        return 1 if n // 4 in (2, 3, 5) else -1
    if half % 2 and half >= 5:
        return -1
    return None


def real_component_count(n: int) -> int:
    """Components of the real locus, checked against the closed forms that apply."""
    count = intersection_graph(n).component_count
    expected = expected_real_count(n)
    if expected is not None:
        ok = count > 1 if expected == -1 else count == expected
        if not ok:
            raise CrossCheckError(f"n={n}: graph gives {count} components, closed form {expected}")
    return count


def connectivity_operators(p: int) -> dict[int, list[tuple[int, int]]]:
    """For ``n = 4p``: ``m -> [(β, E_m(β))]`` with ``E_m(β) = (2m-1)2p/m - β`` on its domain."""
    out = {}
    for m in (1, 2, p, 2 * p):
        total = (2 * m - 1) * 2 * p // m
        pairs = []
        for b in range(2 * p + 1):
            image = total - b
            if 0 <= image <= 2 * p and image != b:
                pairs.append((b, image))
        out[m] = pairs
    return out


# --- witnesses ---------------------------------------------------------------


@dataclass
class RealWitness:
    label: object
    certificate: Certificate

    @property
    def point(self) -> OmegaPoint:
        return self.certificate.point

    def to_dict(self) -> dict:
        d = self.certificate.to_dict()
        d["label"] = str(self.label)
        return d


# Gaussian rationals on the unit circle, (a + bi)/c with a² + b² = c²
_UNIT_POINTS = [
    GaussianRational(Fraction(a, c), Fraction(b, c))
    for a, b, c in ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37),
                    (9, 40, 41), (28, 45, 53), (11, 60, 61), (33, 56, 65), (16, 63, 65), (48, 55, 73))
]


def _unit_defaults(count: int) -> list:
    pts = []
    for i in range(count):
        base = _UNIT_POINTS[(i // 4) % len(_UNIT_POINTS)]
        # rotate by powers of i to spread over quadrants
        rot = (GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1))[i % 4]
        if i >= 4 * len(_UNIT_POINTS):
            raise ValueError("too many unit-circle defaults; pass seeds")
        pts.append(base * rot)
    return pts


def _circle_point(seed, radius):
    """A real ``seed`` is an angle; a Gaussian rational is the point itself (checked to lie on the circle)."""
    if isinstance(seed, GaussianRational):
        if isinstance(radius, GaussianRational):
            if seed.norm() != (radius * radius).re:
                raise ValueError(f"{seed} is not on the circle of radius {radius}")
            return seed
        return complex(seed)
    if isinstance(seed, complex):
        if abs(abs(seed) - abs(complex(radius))) > tolerance():
            raise ValueError(f"{seed} is not on the circle of radius {radius}")
        return seed
    return complex(radius) * cmath.exp(1j * float(seed))


def _parse_label(n: int, label):
    """``(β, piece)`` where piece is ``"A1"``, ``"A2"``, ``"A3"``, ``"A2|A3"`` or ``None``."""
    if label in ("A1", "A2", "A3"):
        if n % 2 == 0:
            raise ValueError(f"{label} exists only for odd n")
        return max_beta(n), label
    beta = int(label)
    if not 0 <= beta <= max_beta(n):
        raise ValueError(f"beta={beta} outside 0..{max_beta(n)}")
    if 2 * beta == n + 1:
        return beta, "A2|A3"
    return beta, None


def real_witness(n: int, label, seeds: Sequence | None = None) -> RealWitness:
    """A certified fixed point of the standard symmetry for ``label`` (β or ``"A1"``).

    Seeds by label:
      * β = 0: the ``n-2`` real coordinates;
      * β = 1: ``n-2`` circle seeds (angles, or unit Gaussian rationals);
      * β >= 2: ``λ₁`` (real; negative for A1, and ``λ₁ > 0`` unless
        ``2β = n+1``), then one value per swapped pair ``(λ_{2k}, λ_{2k+1})``,
        then circle seeds for the remaining coordinates, which lie on
        ``|z| = √λ₁``.
    Without seeds, exact defaults are used.
    """
    _require_n(n)
    beta, kind = _parse_label(n, label)
    k = n - 2
    twist = involution(beta, n + 1)
    if beta == 0:
        vals = seeds if seeds is not None else [Fraction(j + 2) for j in range(k)]
        coords = [to_scalar(v) for v in vals]
        for v in coords:
            if complex(v).imag != 0:
                raise ValueError("β = 0 coordinates must be real")
    elif beta == 1:
        raw = list(seeds) if seeds is not None else _unit_defaults(k)
        coords = [_circle_point(s, GaussianRational(1)) for s in raw]
    else:
        pairs = beta - 2
        rest = k - 1 - 2 * pairs
        if seeds is None:
            lam1 = {"A1": Fraction(-4), "A2": Fraction(1, 4)}.get(kind, Fraction(4))
            raw = [lam1] + [GaussianRational(j + 3, j + 1) for j in range(pairs)] + _unit_defaults(rest)
            if kind is None:
                raw[1 + pairs :] = [u * 2 for u in raw[1 + pairs :]]
        else:
            raw = list(seeds)
        if len(raw) != 1 + pairs + rest:
            raise ValueError(f"expected {1 + pairs + rest} seeds, got {len(raw)}")
        lam1 = to_scalar(raw[0])
        if complex(lam1).imag != 0:
            raise ValueError("λ₁ must be real")
        lam1_re = complex(lam1).real
        if kind == "A1" and lam1_re >= 0:
            raise ValueError("A1 needs λ₁ < 0")
        if kind != "A1" and lam1_re <= 0:
            raise ValueError("λ₁ must be positive for this component")
        coords = [lam1]
        for s in raw[1 : 1 + pairs]:
            s = to_scalar(s)
            coords.extend([s, lam1 / conj(s)])
        radius = try_sqrt(lam1) if isinstance(lam1, GaussianRational) else None
        if radius is None:
            radius = complex(math.sqrt(lam1_re))
        coords.extend(_circle_point(s, radius) for s in raw[1 + pairs :])
    if any(isinstance(c, complex) for c in coords):
        coords = [complex(c) for c in coords]
    point = OmegaPoint(tuple(coords))
    cert = certify(point, antiholomorphic=[twist])
    if kind is not None and a_component(point) not in kind.split("|"):
        raise ValueError(f"λ₁ puts the point in {a_component(point)}, not {kind}")
    return RealWitness(label, cert)


def a_component(point: OmegaPoint) -> str:
    """Which of the three pieces A1, A2, A3 (by the sign and size of ``λ₁``)."""
    lam1 = complex(point.coords[0]).real
    if lam1 < 0:
        return "A1"
    return "A2" if lam1 < 1 else "A3"

