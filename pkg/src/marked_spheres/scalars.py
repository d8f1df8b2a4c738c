"""Scalar backends for points on the Riemann sphere.

Two backends are supported and never mixed:

* exact Gaussian rationals (:class:`GaussianRational`), built on
  :class:`fractions.Fraction`;
* double precision ``complex`` numbers, compared with an absolute tolerance.

The point at infinity is the singleton :data:`INF`.
"""

from __future__ import annotations

import cmath
import math
import os
from fractions import Fraction
from numbers import Rational
from typing import Union

DEFAULT_TOLERANCE = 1e-9


def tolerance() -> float:
    """Absolute tolerance for the floating backend (``MODULI_TOLERANCE`` overrides)."""
    raw = os.environ.get("MODULI_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"MODULI_TOLERANCE must be positive, got {raw!r}")
    return value


class MixedBackendError(TypeError):
    """Raised when exact and floating values meet in one operation."""


class NotExactError(ValueError):
    """Raised when an exact operation has no exact answer (e.g. an irrational root)."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise MixedBackendError(f"cannot use {type(x).__name__} as an exact rational")


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (float, complex)):
            raise MixedBackendError("exact and floating values cannot be mixed")
        return cls(_as_fraction(x), 0)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by exact zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus."""
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _coerce_or_none(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (float, complex)):
        raise MixedBackendError("exact and floating values cannot be mixed")
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussianRational(x, 0)
    return None


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def conjugate(self):
        return self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Scalar = Union[GaussianRational, complex]
Extended = Union[GaussianRational, complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def is_exact(z) -> bool:
    return isinstance(z, GaussianRational)


def exact(re, im=0) -> GaussianRational:
    return GaussianRational(re, im)


def to_scalar(x, *, exact_backend: bool | None = None):
    """Normalise a user value to a backend scalar.

    ints, Fractions and GaussianRationals become exact; floats and complex
    numbers become ``complex``.  With ``exact_backend=False`` exact input is
    converted to ``complex`` explicitly.
    """
    if x is INF:
        return INF
    if isinstance(x, GaussianRational):
        s = x
    elif isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    elif isinstance(x, (int, Fraction)):
        s = GaussianRational(x, 0)
    elif isinstance(x, (float, complex)):
        s = complex(x)
    else:
        raise TypeError(f"unsupported scalar {x!r}")
    if exact_backend is False and isinstance(s, GaussianRational):
        return complex(s)
    if exact_backend is True and not isinstance(s, GaussianRational):
        raise MixedBackendError(f"floating value {x!r} where an exact value is required")
    return s


def to_float(z):
    """Explicit exact-to-floating conversion (identity on floats and INF)."""
    if z is INF:
        return INF
    return complex(z)


def conj(z):
    if z is INF:
        return INF
    return z.conjugate()


def is_zero(z, tol: float | None = None) -> bool:
    if isinstance(z, GaussianRational):
        return not z
    return abs(z) <= (tolerance() if tol is None else tol)


def same_point(z, w, tol: float | None = None) -> bool:
    """Equality on the extended plane, exact or within tolerance."""
    if z is INF or w is INF:
        return z is w
    if isinstance(z, GaussianRational) and isinstance(w, GaussianRational):
        return z == w
    if isinstance(z, GaussianRational) != isinstance(w, GaussianRational):
        raise MixedBackendError("cannot compare exact and floating points")
    return abs(z - w) <= (tolerance() if tol is None else tol)


def distance(z, w) -> float:
    """Absolute difference as a float; infinite if exactly one argument is INF."""
    if z is INF or w is INF:
        return 0.0 if z is w else math.inf
    return abs(complex(z) - complex(w))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def sqrt(z):
    """Principal square root.

    Exact input yields an exact root or raises :class:`NotExactError`.
    """
    if isinstance(z, GaussianRational):
        if not z:
            return GaussianRational(0, 0)
        modulus = _rational_sqrt(z.norm())
        if modulus is None:
            raise NotExactError(f"sqrt({z}) is not a Gaussian rational")
        re = _rational_sqrt((modulus + z.re) / 2)
        im = _rational_sqrt((modulus - z.re) / 2)
        if re is None or im is None:
            raise NotExactError(f"sqrt({z}) is not a Gaussian rational")
        if z.im < 0:
            im = -im
        return GaussianRational(re, im)
    return cmath.sqrt(z)


def try_sqrt(z):
    """Exact root when one exists, else None (floating input always succeeds)."""
    try:
        return sqrt(z)
    except NotExactError:
        return None


def format_scalar(z) -> str:
    """Serialise as ``"re,im"`` (rational strings for exact values)."""
    if z is INF:
        return "inf"
    if isinstance(z, GaussianRational):
        return f"{z.re},{z.im}"
    z = complex(z)
    return f"{z.real!r},{z.imag!r}"


def parse_scalar(text: str, *, allow_inf: bool = False):
    """Inverse of :func:`format_scalar`.

    ``"1/2,3"`` is exact; any part written with a decimal point or exponent
    makes the value floating.  A single number means a real value.
    """
    s = text.strip()
    if s.lower() in ("inf", "infinity", "oo"):
        if allow_inf:
            return INF
        raise ValueError("'inf' is not allowed here")
    parts = [p.strip() for p in s.split(",")]
    if len(parts) == 1:
        parts.append("0")
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"malformed scalar {text!r}; expected 're,im'")
    if any(ch in p for p in parts for ch in ".eEjn"):
        try:
            value = complex(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise ValueError(f"malformed scalar {text!r}") from exc
        if not cmath.isfinite(value):
            raise ValueError(f"non-finite scalar {text!r}")
        return value
    try:
        return GaussianRational(Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed scalar {text!r}") from exc
