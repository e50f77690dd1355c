"""Deciding whether a collusion pattern is equivalent to full t-collusion.

For a code of dimension k = t-1, a pattern inside the (k+1)-collusion is
equivalent to t-collusion when the lift returns the code itself. Beyond the
direct check, two certificates establish equivalence for every
representation of the matroid: a triangular ordering of n-k observed
circuits, and coverage of all fundamental circuits of some basis. The
compromised-coordinate criterion (all circuits through one element observed,
connected matroid) is guaranteed to succeed, so a failure there is raised as
an invariant violation rather than reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .codes import LinearCode, code_equal
from .errors import InvariantViolation, StandingAssumptionError, ValidationError
from .lifting import lift, observed_circuits
from .matroids import RepresentedMatroid, circuit_sort_key
from .patterns import (
    CollusionPattern,
    compromised_pattern,
    make_pattern,
    pattern_is_connected,
    pattern_vertices,
)

FUNDAMENTAL_BASIS_SEARCH_LIMIT = 20000


@dataclass(frozen=True)
class TriangularCertificate:
    """An ordering of circuits with witnesses private to each suffix.

    Witness i belongs to circuit i and to none of the later circuits, so the
    stacked circuit vectors form a staircase and are independent in every
    representation.
    """

    ordering: tuple[frozenset[int], ...]
    witnesses: tuple[int, ...]

    def __post_init__(self):
        if len(self.ordering) != len(self.witnesses):
            raise ValidationError("one witness per circuit required")
        for i, (c, e) in enumerate(zip(self.ordering, self.witnesses)):
            if e not in c:
                raise ValidationError(f"witness {e} is not in its circuit {sorted(c)}")
            for later in self.ordering[i + 1 :]:
                if e in later:
                    raise ValidationError(
                        f"witness {e} reappears in a later circuit {sorted(later)}"
                    )


@dataclass(frozen=True)
class EquivalenceReport:
    is_equivalent: bool
    method: str  # direct | triangular | fundamental-basis | compromised
    certificate: TriangularCertificate | None = None

    def __post_init__(self):
        if self.certificate is not None and not self.is_equivalent:
            raise ValidationError("a certificate implies equivalence")


@dataclass(frozen=True)
class AssumptionsReport:
    """Which of the three standing assumptions a (code, pattern) pair meets:
    connected pattern, no isolated coordinates, facet sizes at most k+1."""

    pattern_connected: bool
    no_isolated_elements: bool
    facet_sizes_bounded: bool
    isolated: tuple[int, ...]
    oversized: tuple[tuple[int, ...], ...]

    def all_hold(self) -> bool:
        return self.pattern_connected and self.no_isolated_elements and self.facet_sizes_bounded


def has_private_elements(circuit_sets: Sequence[Iterable[int]]) -> bool:
    """True iff every member keeps an element outside the union of the others.

    Such a family is independent in the derived matroid of every
    representation: each private coordinate is touched by exactly one
    circuit vector.
    """
    sets = [frozenset(c) for c in circuit_sets]
    if not sets:
        raise ValidationError("empty circuit family")
    for i, c in enumerate(sets):
        others = frozenset().union(*(s for j, s in enumerate(sets) if j != i)) if len(sets) > 1 else frozenset()
        if not (c - others):
            return False
    return True


def triangular_ordering(
    circuit_sets: Sequence[Iterable[int]],
) -> TriangularCertificate | None:
    """Greedy search for a triangular ordering of the given sets.

    Repeatedly pull out a set not covered by the union of the remaining
    ones, recording its smallest private element as witness. Removing any
    such set preserves orderability, so the greedy choice is safe; ties are
    broken toward the lexicographically smallest set for determinism.
    """
    remaining = sorted((frozenset(c) for c in circuit_sets), key=circuit_sort_key)
    if not remaining:
        raise ValidationError("empty circuit family")
    ordering: list[frozenset[int]] = []
    witnesses: list[int] = []
    while remaining:
        pick = None
        private: frozenset[int] = frozenset()
        for i, c in enumerate(remaining):
            others = frozenset().union(*(s for j, s in enumerate(remaining) if j != i)) if len(remaining) > 1 else frozenset()
            free = c - others
            if free:
                pick, private = i, free
                break
        if pick is None:
            return None
        ordering.append(remaining[pick])
        witnesses.append(min(private))
        del remaining[pick]
    return TriangularCertificate(tuple(ordering), tuple(witnesses))


def fundamental_basis_pattern(q: LinearCode, b: Iterable[int]) -> CollusionPattern:
    """Pattern generated by the fundamental circuits of the basis b.

    Lifting over it returns q for every representation of M(q).
    """
    m = RepresentedMatroid.from_code(q)
    basis = frozenset(b)
    if not m.is_basis(basis):
        raise ValidationError(f"{sorted(basis)} is not a basis of the matroid")
    fundamentals = [m.fundamental_circuit(basis, e) for e in m.ground if e not in basis]
    return make_pattern(q.n, fundamentals)


def _covers_some_fundamental_basis(q: LinearCode, observed: set[frozenset[int]]) -> bool:
    m = RepresentedMatroid.from_code(q)
    if m.rank < len(m.ground) and comb(len(m.ground), m.rank) > FUNDAMENTAL_BASIS_SEARCH_LIMIT:
        return False  # search too large; fall through to the direct method
    for cand in combinations(m.ground, m.rank):
        if m.rank_of(cand) != m.rank:
            continue
        basis = frozenset(cand)
        if all(
            m.fundamental_circuit(basis, e) in observed for e in m.ground if e not in basis
        ):
            return True
    return False


def standing_assumptions(q: LinearCode, tau: CollusionPattern) -> AssumptionsReport:
    """Evaluate the standing assumptions without failing on violations."""
    if tau.n != q.n:
        raise ValidationError(f"pattern ground size {tau.n} does not match code length {q.n}")
    connected = bool(tau.facets) and pattern_is_connected(tau)
    in_big_facet = {i for f in tau.facets if len(f) >= 2 for i in f}
    isolated = tuple(i for i in range(1, q.n + 1) if i not in in_big_facet)
    bound = q.k + 1
    oversized = tuple(
        tuple(sorted(f)) for f in tau.facets if len(f) > bound
    )
    return AssumptionsReport(
        pattern_connected=connected,
        no_isolated_elements=not isolated,
        facet_sizes_bounded=not oversized,
        isolated=isolated,
        oversized=oversized,
    )


def is_t_equivalent(q: LinearCode, tau: CollusionPattern) -> EquivalenceReport:
    """Decide whether lifting q over tau gives back q, with the cheapest
    applicable certificate recorded as the method.

    The standing assumptions (connected pattern, no isolated coordinates,
    facets no larger than k+1) are enforced up front and violations raise
    StandingAssumptionError.
    """
    assumptions = standing_assumptions(q, tau)
    if not assumptions.all_hold():
        failures = []
        if not assumptions.pattern_connected:
            failures.append("pattern is not connected")
        if not assumptions.no_isolated_elements:
            failures.append(f"isolated coordinates {list(assumptions.isolated)}")
        if not assumptions.facet_sizes_bounded:
            failures.append(
                f"facets larger than k+1={q.k + 1}: {[list(f) for f in assumptions.oversized]}"
            )
        raise StandingAssumptionError("; ".join(failures))

    observed = observed_circuits(q, tau)
    result = lift(q, tau)
    equal = code_equal(result.lifted, q)

    certificate = None
    method = "direct"
    needed = q.n - q.k
    if observed:
        cert = triangular_ordering(observed)
        if cert is not None and len(observed) == needed:
            certificate = cert
            method = "triangular"
        elif _covers_some_fundamental_basis(q, set(observed)):
            method = "fundamental-basis"
    if method != "direct" and not equal:
        raise InvariantViolation(
            f"certificate method '{method}' fired but the lift is strictly larger"
        )
    return EquivalenceReport(equal, method, certificate)


def check_compromised(q: LinearCode, e: int) -> EquivalenceReport:
    """Lift over the pattern of all circuits through e and confirm it is q.

    Requires a connected matroid. The criterion is guaranteed, so a strict
    containment here raises InvariantViolation: either a bug or a genuine
    counterexample worth investigating.
    """
    m = RepresentedMatroid.from_code(q)
    if not m.is_connected():
        raise ValidationError("the compromised-coordinate criterion needs a connected matroid")
    tau = compromised_pattern(q, e)
    result = lift(q, tau)
    if not code_equal(result.lifted, q):
        raise InvariantViolation(
            f"lift over all circuits through {e} is strictly larger than the code"
        )
    return EquivalenceReport(True, "compromised")
