"""Möbius and anti-Möbius transformations of the Riemann sphere.

A :class:`Mobius` stores ``x -> (a x + b) / (c x + d)``; with
``antiholomorphic=True`` the argument is conjugated first, i.e. the map is
``x -> (a conj(x) + b) / (c conj(x) + d)``.  Coefficients are projective:
equality ignores a common nonzero factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import (
    INF,
    GaussianRational,
    MixedBackendError,
    conj,
    format_scalar,
    is_zero,
    same_point,
    sqrt,
    to_float,
    to_scalar,
    tolerance,
)

DEFAULT_ORDER_BOUND = 120


@dataclass(frozen=True)
class Mobius:
    a: object
    b: object
    c: object
    d: object
    antiholomorphic: bool = False

    def __post_init__(self):
        coeffs = [to_scalar(x) for x in (self.a, self.b, self.c, self.d)]
        kinds = {isinstance(x, GaussianRational) for x in coeffs}
        if len(kinds) > 1:
            raise MixedBackendError("Möbius coefficients mix exact and floating values")
        for name, value in zip("abcd", coeffs):
            object.__setattr__(self, name, value)
        if is_zero(self.determinant(), _scaled_tol(coeffs)):
            raise ValueError("degenerate Möbius map: ad - bc = 0")

    @classmethod
    def identity(cls, exact: bool = True) -> "Mobius":
        one, zero = (GaussianRational(1), GaussianRational(0)) if exact else (1 + 0j, 0j)
        return cls(one, zero, zero, one)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.a, GaussianRational)

    def determinant(self):
        return self.a * self.d - self.b * self.c

    def coefficients(self):
        return (self.a, self.b, self.c, self.d)

    def __call__(self, z):
        if self.antiholomorphic:
            z = conj(z)
        a, b, c, d = self.a, self.b, self.c, self.d
        tol = None if self.is_exact else tolerance()
        if z is INF:
            return INF if is_zero(c, tol) else a / c
        den = c * z + d
        if is_zero(den, tol):
            return INF
        return (a * z + b) / den

    def __mul__(self, other: "Mobius") -> "Mobius":
        """Composition ``self ∘ other``."""
        if not isinstance(other, Mobius):
            return NotImplemented
        oa, ob, oc, od = other.coefficients()
        if self.antiholomorphic:
            oa, ob, oc, od = conj(oa), conj(ob), conj(oc), conj(od)
        a, b, c, d = self.coefficients()
        return Mobius(
            a * oa + b * oc,
            a * ob + b * od,
            c * oa + d * oc,
            c * ob + d * od,
            self.antiholomorphic != other.antiholomorphic,
        )

    def inverse(self) -> "Mobius":
        a, b, c, d = self.coefficients()
        if not self.antiholomorphic:
            return Mobius(d, -b, -c, a)
        # x = M(conj y)  =>  y = conj(M^{-1}(x))
        return Mobius(conj(d), conj(-b), conj(-c), conj(a), True)

    def __pow__(self, k: int) -> "Mobius":
        base = self if k >= 0 else self.inverse()
        result = Mobius.identity(self.is_exact)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate_coefficients(self) -> "Mobius":
        return Mobius(conj(self.a), conj(self.b), conj(self.c), conj(self.d), self.antiholomorphic)

    def to_float(self) -> "Mobius":
        return Mobius(*(to_float(x) for x in self.coefficients()), self.antiholomorphic)

    def projectively_equal(self, other: "Mobius", tol: float | None = None) -> bool:
        """Equality up to a common scale, via vanishing 2x2 minors."""
        if self.antiholomorphic != other.antiholomorphic:
            return False
        u, v = self.coefficients(), other.coefficients()
        if self.is_exact and other.is_exact:
            return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(i + 1, 4))
        if self.is_exact != other.is_exact:
            raise MixedBackendError("cannot compare exact and floating maps")
        su = max(abs(x) for x in u)
        sv = max(abs(x) for x in v)
        tol = tolerance() if tol is None else tol
        return all(
            abs(u[i] * v[j] - u[j] * v[i]) <= tol * su * sv
            for i in range(4)
            for j in range(i + 1, 4)
        )

    def is_identity(self, tol: float | None = None) -> bool:
        return self.projectively_equal(Mobius.identity(self.is_exact), tol)

    def to_dict(self) -> dict:
        """JSON-ready form: rows ``[[a, b], [c, d]]`` of ``"re,im"`` strings."""
        a, b, c, d = (format_scalar(x) for x in self.coefficients())
        return {
            "coefficients": [[a, b], [c, d]],
            "orientation": "antiholomorphic" if self.antiholomorphic else "holomorphic",
        }


def _scaled_tol(coeffs):
    if isinstance(coeffs[0], GaussianRational):
        return None
    scale = max(abs(x) for x in coeffs) or 1.0
    return tolerance() * scale * scale


def cross_ratio_normalizer(p, q, r) -> Mobius:
    """The holomorphic map sending ``p, q, r`` to ``INF, 0, 1``.

    ``M(x) = (x - q)(r - p) / ((x - p)(r - q))`` with the usual limits when one
    of the three points is infinite.
    """
    p, q, r = (to_scalar(x) for x in (p, q, r))
    finite = [x for x in (p, q, r) if x is not INF]
    if len(finite) < 2:
        raise ValueError("points must be pairwise distinct")
    if len({isinstance(x, GaussianRational) for x in finite}) > 1:
        raise MixedBackendError("points mix exact and floating values")
    for x, y in ((p, q), (p, r), (q, r)):
        if same_point(x, y):
            raise ValueError("points must be pairwise distinct")
    one = GaussianRational(1) if isinstance(finite[0], GaussianRational) else 1 + 0j
    zero = one - one
    if p is INF:
        return Mobius(one, -q, zero, r - q)
    if q is INF:
        return Mobius(zero, r - p, one, -p)
    if r is INF:
        return Mobius(one, -q, one, -p)
    return Mobius(r - p, -q * (r - p), r - q, -p * (r - q))


def order_of(m: Mobius, bound: int = DEFAULT_ORDER_BOUND):
    """Smallest ``k >= 1`` with ``m**k`` the identity, or ``math.inf`` past ``bound``."""
    if m.antiholomorphic:
        raise ValueError("order_of expects a holomorphic map")
    power = m
    for k in range(1, bound + 1):
        if power.is_identity():
            return k
        power = power * m
    return math.inf


def fixed_points(m: Mobius) -> list:
    """Fixed points on the sphere: two for loxodromic/elliptic maps, one if parabolic.

    For exact maps the roots must be Gaussian rational; otherwise
    :class:`~marked_spheres.scalars.NotExactError` is raised and the caller
    should pass ``m.to_float()``.
    """
    if m.antiholomorphic:
        raise ValueError("fixed_points expects a holomorphic map")
    if m.is_identity():
        raise ValueError("the identity fixes every point")
    a, b, c, d = m.coefficients()
    tol = None if m.is_exact else tolerance()
    if is_zero(c, tol):
        if is_zero(a - d, tol):
            return [INF]
        return [b / (d - a), INF]
    # c x^2 + (d - a) x - b = 0
    disc = (a - d) * (a - d) + 4 * b * c
    root = sqrt(disc)
    two_c = 2 * c
    if is_zero(root, tol):
        return [(a - d) / two_c]
    return [(a - d + root) / two_c, (a - d - root) / two_c]
