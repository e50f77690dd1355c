"""Construction of the lift of a code over a collusion pattern.

The algebraic route stacks the observed circuit vectors (those supported
inside some facet) into a constraint matrix and takes its kernel as the
lifted code. The brute-force oracle instead enumerates the whole ambient
space and keeps every vector whose projection onto each facet is a
projection of some codeword; both routes must produce the same row space.

Every call of the algebraic route re-derives the observed circuits facet by
facet for facets of size at most k+1 and compares with the global filter,
and verifies that lifting over the pattern generated by the observed
circuits observes the same set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from operator import itemgetter
from typing import Iterable, Sequence

from .codes import (
    LinearCode,
    code_contains,
    code_equal,
    code_intersection,
    from_matrix,
    iter_codewords,
    make_code,
    restrict,
)
from .derived import circuit_vector
from .errors import GuardExceeded, InvariantViolation, ValidationError
from .fields import FieldMatrix, in_row_space, kernel_basis
from .matroids import RepresentedMatroid
from .patterns import (
    CollusionPattern,
    make_pattern,
    pattern_components,
    pattern_contains,
    pattern_intersection,
    pattern_union,
    pattern_vertices,
)

ORACLE_SPACE_LIMIT = 2**21


@dataclass(frozen=True)
class LiftResult:
    base: LinearCode
    lifted: LinearCode
    observed: tuple[frozenset[int], ...]
    secrecy_rate: Fraction


def _check_compatible(q: LinearCode, tau: CollusionPattern):
    if q.labels != tuple(range(1, q.n + 1)):
        raise ValidationError("lifts require a code on the standard coordinates 1..n")
    if tau.n != q.n:
        raise ValidationError(f"pattern ground size {tau.n} does not match code length {q.n}")


def observed_circuits(q: LinearCode, tau: CollusionPattern) -> list[frozenset[int]]:
    """Circuits of M(q) contained in some facet of tau, lexicographically."""
    _check_compatible(q, tau)
    m = RepresentedMatroid.from_code(q)
    return [c for c in m.circuits if pattern_contains(tau, c)]


def projection_agrees(q: LinearCode, x: Sequence[int], t: Iterable[int]) -> bool:
    """True iff some codeword matches x on the coordinates t."""
    if len(x) != q.n:
        raise ValidationError(f"vector length {len(x)} does not match code length {q.n}")
    members = sorted(set(t))
    if not members:
        return True
    positions = {label: i for i, label in enumerate(q.labels)}
    sub = q.generator.restrict_columns(members)
    return in_row_space(sub, [x[positions[c]] for c in members])


def _observed_within_facet(q: LinearCode, facet: frozenset[int]) -> set[frozenset[int]]:
    sub = q.generator.restrict_columns(sorted(facet))
    return set(RepresentedMatroid(sub).circuits)


def lift(q: LinearCode, tau: CollusionPattern) -> LiftResult:
    """The largest code agreeing with q on every facet of tau.

    Constructed as the kernel of the stacked observed circuit vectors; the
    column order of the ambient space is preserved throughout.
    """
    _check_compatible(q, tau)
    matroid = RepresentedMatroid.from_code(q)
    observed = [c for c in matroid.circuits if pattern_contains(tau, c)]

    bound = q.k + 1
    for facet in tau.facets:
        if len(facet) <= bound:
            local = _observed_within_facet(q, facet)
            global_within = {c for c in observed if c <= facet}
            if local != global_within:
                raise InvariantViolation(
                    f"facet-local circuit extraction disagrees on facet {sorted(facet)}"
                )

    rows = tuple(circuit_vector(q, c).vector for c in observed)
    constraints = FieldMatrix(q.field, rows, q.labels)
    lifted = from_matrix(kernel_basis(constraints))

    if observed:
        filtered = make_pattern(q.n, observed)
        again = [c for c in matroid.circuits if pattern_contains(filtered, c)]
        if set(again) != set(observed):
            raise InvariantViolation("lift over the observed-circuit pattern observes differently")
    if not code_contains(lifted, q):
        raise InvariantViolation("lifted code does not contain the base code")

    rate = Fraction(lifted.k - q.k, q.n)
    return LiftResult(q, lifted, tuple(observed), rate)


def lift_oracle(q: LinearCode, tau: CollusionPattern) -> LiftResult:
    """Brute-force lift straight from the definition.

    Enumerates the ambient space; a vector passes when its projection onto
    every facet appears among the projections of the codewords. Passing
    vectors are closed under linear combinations, so vectors already in the
    span of accepted ones are skipped, and enumeration stops early once the
    span is the whole space.
    """
    _check_compatible(q, tau)
    p, n = q.field.p, q.n
    if p**n > ORACLE_SPACE_LIMIT:
        raise GuardExceeded("oracle enumeration space", str(ORACLE_SPACE_LIMIT), f"{p}^{n}")

    checks = []
    for facet in tau.facets:
        members = sorted(facet)
        sub = restrict(q, members)
        if sub.k == len(members):
            continue  # the facet projection is the full space
        words = set(iter_codewords(sub))
        if len(members) == 1:
            getter = itemgetter(members[0] - 1)
            checks.append((getter, {w[0] for w in words}))
        else:
            checks.append((itemgetter(*(c - 1 for c in members)), words))

    zero = tuple([0] * n)
    span = {zero}
    basis: list[tuple[int, ...]] = []
    for x in product(range(p), repeat=n):
        if x in span:
            continue
        if all(getter(x) in allowed for getter, allowed in checks):
            basis.append(x)
            if len(basis) == n:
                span = None  # full space; no need to keep closing
                break
            multiples = []
            scaled = x
            for _ in range(p - 1):
                multiples.append(scaled)
                scaled = tuple((a + b) % p for a, b in zip(scaled, x))
            span |= {
                tuple((a + b) % p for a, b in zip(s, m)) for s in span for m in multiples
            }
    if span is not None and len(span) != p ** len(basis):
        raise InvariantViolation("oracle span is not a linear space of the expected dimension")

    lifted = make_code(p, n, basis)
    if lifted.k != len(basis):
        raise InvariantViolation("oracle basis vectors are not independent")
    observed = observed_circuits(q, tau)
    return LiftResult(q, lifted, tuple(observed), Fraction(lifted.k - q.k, n))


@dataclass(frozen=True)
class IdentityCheckReport:
    """Outcome of the lift identity checks for a pair of patterns."""

    union_holds: bool
    intersection_holds: bool
    decomposition_a: bool | None  # None when pattern a is connected or empty
    decomposition_b: bool | None

    def all_hold(self) -> bool:
        return (
            self.union_holds
            and self.intersection_holds
            and self.decomposition_a is not False
            and self.decomposition_b is not False
        )


def _decomposes_over_components(q: LinearCode, tau: CollusionPattern) -> bool | None:
    """Check that the lift of a disconnected pattern is the product of the
    component lifts with full freedom on untouched coordinates."""
    comps = pattern_components(tau)
    if len(comps) < 2:
        return None
    total = lift(q, tau).lifted
    n = q.n
    expected_dim = n - len(pattern_vertices(tau))  # free coordinates
    meet = None
    for facets in comps:
        part = lift(q, make_pattern(n, facets)).lifted
        vertices = set().union(*facets)
        complement = sorted(set(range(1, n + 1)) - vertices)
        if complement and restrict(part, complement).k != len(complement):
            return False
        expected_dim += part.k - (n - len(vertices))
        meet = part if meet is None else code_intersection(meet, part)
    return code_equal(total, meet) and total.k == expected_dim


def lift_identities_check(
    q: LinearCode, a: CollusionPattern, b: CollusionPattern
) -> IdentityCheckReport:
    """Exact checks of the lift identities for union, intersection, and
    component decomposition of collusion patterns."""
    union_lift = lift(q, pattern_union(a, b)).lifted
    meet_both = code_intersection(lift(q, a).lifted, lift(q, b).lifted)
    union_holds = code_equal(union_lift, meet_both)

    inter_lift = lift(q, pattern_intersection(a, b)).lifted
    sequential = lift(lift(q, a).lifted, b).lifted
    intersection_holds = code_equal(inter_lift, sequential)

    return IdentityCheckReport(
        union_holds,
        intersection_holds,
        _decomposes_over_components(q, a),
        _decomposes_over_components(q, b),
    )
