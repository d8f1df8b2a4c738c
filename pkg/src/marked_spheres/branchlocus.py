"""Strata of the branch locus, realizability arithmetic and the stratum graph."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .action import CrossCheckError
from .graph import ComponentGraph
from .perm import FixedClass, canonical_rep, classify_fixed_point_class

# case -> δ with (r+1)m = n + 1 - δ
_CASE_DELTA = {"A": 0, "B": 1, "C": 2}


@dataclass(frozen=True, order=True)
class Stratum:
    m: int
    r: int
    case: str

    @property
    def fixed_class(self) -> FixedClass:
        return FixedClass(self.m, self.r, self.case)

    @property
    def n(self) -> int:
        return self.fixed_class.n

    @property
    def label(self) -> str:
        return f"B_{{{self.m},{self.r}}}"

    @property
    def is_involution(self) -> bool:
        return self.m == 2


def _require_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")


def enumerate_strata(n: int) -> list[Stratum]:
    """All strata of the branch locus at ``n``, sorted by (m, r)."""
    _require_n(n)
    out = []
    for case, delta in _CASE_DELTA.items():
        total = n + 1 - delta
        for m in range(2, total + 1):
            if total % m == 0:
                out.append(Stratum(m, total // m - 1, case))
    return sorted(out, key=lambda s: (s.m, s.r))


def cyclic_realizable(n: int, m: int) -> bool:
    _require_n(n)
    return m >= 2 and any(n + 1 - d >= m and (n + 1 - d) % m == 0 for d in (0, 1, 2))


def _has_solution(total: int, weights: list[int], ranges: list[tuple[int, ...]]) -> bool:
    # total = weights[0] * r + sum(weights[i] * δ_i), r >= 0 unbounded
    lead = weights[0]
    for deltas in itertools.product(*ranges):
        rest = total - sum(w * d for w, d in zip(weights[1:], deltas))
        if rest >= 0 and rest % lead == 0:
            return True
    return False


def dihedral_realizable(n: int, m: int) -> bool:
    _require_n(n)
    if m < 2:
        return False
    return _has_solution(n + 1, [2 * m, m, 1], [(0, 1, 2), (0, 2)])


def a4_realizable(n: int) -> bool:
    _require_n(n)
    return _has_solution(n + 1, [12, 6, 4], [(0, 1), (0, 1, 2)])


def s4_realizable(n: int) -> bool:
    _require_n(n)
    return _has_solution(n + 1, [24, 12, 8, 6], [(0, 1)] * 3)


def a5_realizable(n: int) -> bool:
    _require_n(n)
    return _has_solution(n + 1, [60, 30, 20, 12], [(0, 1)] * 3)


def involution_vertices(n: int) -> list[Stratum]:
    """The involution strata: one for even n (case B), two for odd n (cases C and A)."""
    return [s for s in enumerate_strata(n) if s.is_involution]


def _involution_for_case(n: int, case: str) -> Stratum:
    invs = involution_vertices(n)
    if len(invs) == 1:
        return invs[0]
    # odd n: same fixed symbols when possible, else the case-C involution
    return next((s for s in invs if s.case == case), next(s for s in invs if s.case == "C"))


def stratum_graph(n: int, certify_klein: bool = True) -> ComponentGraph:
    """Adjacency of strata whose closures meet.

    Edges:
      * power: an even-order stratum meets the involution stratum of its
        ``m/2``-th power (same fixed symbols);
      * cyclic extension: ``B_{m,r}`` with odd ``m``, ``r >= 1`` meets
        ``B_{(r+1)m,0}``;
      * dihedral extension: for odd ``m`` in case A or C, ``B_{(r+1)m,0}``
        meets an involution stratum;
      * tetrahedral: for odd ``n`` divisible by 3, ``B_{3,n/3-1}`` meets the
        case-C involution stratum;
      * for odd ``n`` the two involution strata meet at a point with Klein
        four-group stabilizer (built and certified when ``certify_klein``).
    """
    strata = enumerate_strata(n)
    graph = ComponentGraph([s.label for s in strata], name=f"branch_{n}")
    invs = involution_vertices(n)
    graph.clusters = {"B_2": [s.label for s in invs]}

    for s in strata:
        if s.m % 2 == 0 and not s.is_involution:
            beta = (s.r + 1) * s.m // 2
            target = Stratum(2, beta - 1, s.case)
            graph.add_edge(s.label, target.label)
        if s.m % 2 == 1:
            top = Stratum((s.r + 1) * s.m, 0, s.case)
            if s.r >= 1:
                graph.add_edge(s.label, top.label)
            if s.case in ("A", "C"):
                graph.add_edge(top.label, _involution_for_case(n, s.case).label)
    if n % 2 == 1 and n % 3 == 0:
        three = Stratum(3, n // 3 - 1, "B")
        graph.add_edge(three.label, _involution_for_case(n, "C").label)
    if n % 2 == 1:
        if certify_klein:
            from .oracle import klein_witness

            klein_witness(n)
        graph.add_edge(invs[0].label, invs[1].label)
    return graph


def closed_form_branch_count(n: int) -> int:
    _require_n(n)
    return 1 if n % 2 == 0 or n % 3 == 0 else 2


def branch_component_count(n: int, certify_klein: bool = True) -> int:
    """Connected components of the branch locus, checked against the stratum graph."""
    expected = closed_form_branch_count(n)
    got = stratum_graph(n, certify_klein).component_count
    if got != expected:
        raise CrossCheckError(f"n={n}: stratum graph has {got} components, closed form {expected}")
    return expected


def check_round_trip(n: int) -> None:
    """Every stratum's canonical representative classifies back to the stratum."""
    for s in enumerate_strata(n):
        rep = canonical_rep(s.m, s.r, s.case, n)
        if classify_fixed_point_class(rep) != s.fixed_class:
            raise AssertionError(f"{s} does not round-trip through its representative")
