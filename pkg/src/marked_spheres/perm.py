"""Permutations of ``{1, ..., N}`` and the classes whose action on Ω_n has fixed points.

Composition convention: ``p * q`` is ``p ∘ q``, the permutation that applies
``q`` first and then ``p``.  With this product the action on Ω_n is a
homomorphism, ``theta(p * q) == theta(p) ∘ theta(q)``.
"""

from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

CASES = ("A", "B", "C")
# case -> (number of fixed symbols, n - (r+1)m)
_CASE_SHIFT = {"A": (0, -1), "B": (1, 0), "C": (2, 1)}


class Permutation:
    """A bijection of ``{1, ..., degree}`` stored as its image sequence."""

    __slots__ = ("images", "_inverse")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._inverse = None

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= degree:
                    raise ValueError(f"symbol {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"symbol {x} repeated")
                seen.add(x)
            for x, y in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[x - 1] = y
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1,2)(3,4)"``; omitted symbols are fixed."""
        text = text.strip()
        if text in ("", "()", "e", "id"):
            if degree is None:
                raise ValueError("degree required for the identity")
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+", text):
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = [
            [int(x) for x in body.split(",")] for body in re.findall(r"\(([^)]*)\)", text)
        ]
        largest = max(max(c) for c in cycles)
        if degree is None:
            degree = largest
        elif largest > degree:
            raise ValueError(f"symbol {largest} exceeds degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    n_plus_one = degree

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        img = self.images
        return Permutation(img[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        if self._inverse is None:
            inv = [0] * self.degree
            for i, j in enumerate(self.images, start=1):
                inv[j - 1] = i
            self._inverse = Permutation(inv)
        return self._inverse

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate_by(self, q: "Permutation") -> "Permutation":
        """``q * self * q^-1``."""
        return q * self * q.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def fixed_symbols(self) -> list[int]:
        return [i for i in range(1, self.degree + 1) if self(i) == i]

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={self.degree})"

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths (fixed symbols included), in non-increasing order."""
    return tuple(sorted((len(c) for c in p.cycles(include_fixed=True)), reverse=True))


@dataclass(frozen=True, order=True)
class FixedClass:
    """Conjugacy class ``m^(r+1) 1^f`` with ``f = 0, 1, 2`` for cases A, B, C."""

    m: int
    r: int
    case: str

    def __post_init__(self):
        if self.case not in _CASE_SHIFT:
            raise ValueError(f"case must be one of {CASES}, got {self.case!r}")
        if self.m < 2 or self.r < 0:
            raise ValueError("need m >= 2 and r >= 0")

    @property
    def fixed_count(self) -> int:
        return _CASE_SHIFT[self.case][0]

    @property
    def n(self) -> int:
        """The unique n for which this class lives in S_{n+1}."""
        return (self.r + 1) * self.m + _CASE_SHIFT[self.case][1]

    @property
    def label(self) -> str:
        return f"B_{{{self.m},{self.r}}}"


def classify_fixed_point_class(p: Permutation) -> FixedClass | None:
    """The class (m, r, case) of ``p``, or ``None`` if its automorphism of Ω_n has no fixed points.

    ``n = p.degree - 1`` must be at least 4.
    """
    n = p.degree - 1
    if n < 4:
        raise ValueError(f"classification needs n >= 4, got n={n}")
    if p.is_identity():
        raise ValueError("the identity permutation has no class")
    counts = Counter(cycle_type(p))
    fixed = counts.pop(1, 0)
    if len(counts) != 1 or fixed > 2:
        return None
    (m, copies), = counts.items()
    return FixedClass(m, copies - 1, CASES[fixed])


def canonical_rep(m: int, r: int, case: str, n: int) -> Permutation:
    """``(1,...,m)(m+1,...,2m)...(rm+1,...,(r+1)m)`` padded with fixed symbols."""
    cls = FixedClass(m, r, case)
    if cls.n != n:
        raise ValueError(f"(m={m}, r={r}, case {case}) lives at n={cls.n}, not n={n}")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    cycles = [range(k * m + 1, (k + 1) * m + 1) for k in range(r + 1)]
    return Permutation.from_cycles([tuple(c) for c in cycles], n + 1)


def random_permutation(degree: int, rng: random.Random) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(images)


def involution(beta: int, degree: int) -> Permutation:
    """``(1,2)(3,4)...(2β-1,2β)``, the identity when β = 0."""
    if not 0 <= 2 * beta <= degree:
        raise ValueError(f"beta={beta} out of range for degree {degree}")
    return Permutation.from_cycles([(2 * k + 1, 2 * k + 2) for k in range(beta)], degree)
