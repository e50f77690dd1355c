"""Circuit vectors and the derived matroid of a represented matroid.

Each circuit C of the column matroid supports a dual codeword that is unique
up to scale; normalizing its first nonzero entry to 1 makes it canonical.
Stacking these circuit vectors represents a matroid on the set of circuits:
its independent sets are the linearly independent stacks, its circuits the
minimal dependencies. The ground ordering is the lexicographic circuit
order, so derived circuit lists are directly comparable between codes with
equal matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .codes import LinearCode
from .errors import GuardExceeded, InvariantViolation, ValidationError
from .fields import FieldMatrix, kernel_basis, rank_of_vectors
from .matroids import RepresentedMatroid, circuit_sort_key, minimal_dependent_sets
from .patterns import CollusionPattern, make_pattern

DERIVED_GROUND_LIMIT = 24


@dataclass(frozen=True)
class CircuitVector:
    circuit: frozenset[int]
    vector: tuple[int, ...]


def circuit_vector(q: LinearCode, c: Iterable[int]) -> CircuitVector:
    """The canonical dual codeword supported exactly on the circuit c."""
    members = sorted(set(c))
    if not members:
        raise ValidationError("a circuit is nonempty")
    for x in members:
        if x not in q.labels:
            raise ValidationError(f"element {x} is not a coordinate of the code")
    sub = q.generator.restrict_columns(members)
    ker = kernel_basis(sub)
    if ker.n_rows != 1:
        raise ValidationError(
            f"{members} is not a circuit: its dependency space has dimension {ker.n_rows}"
        )
    v = ker.rows[0]
    if not all(v):
        raise ValidationError(f"{members} is not a circuit: support is strictly smaller")
    p = q.field.p
    inv = pow(v[0], p - 2, p)
    v = tuple((x * inv) % p for x in v)
    full = [0] * q.n
    positions = {label: i for i, label in enumerate(q.labels)}
    for label, value in zip(members, v):
        full[positions[label]] = value
    return CircuitVector(frozenset(members), tuple(full))


@dataclass(frozen=True)
class DerivedRep:
    """Stacked circuit vectors of a code: a representation of its derived
    matroid on the ground set of circuits."""

    source: LinearCode
    ground: tuple[frozenset[int], ...]
    rep: FieldMatrix

    def index_of(self, circuit: Iterable[int]) -> int:
        c = frozenset(circuit)
        try:
            return self.ground.index(c)
        except ValueError:
            raise ValidationError(f"{sorted(c)} is not a circuit of the source code") from None

    def rows_for(self, s: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
        return [self.rep.rows[self.index_of(c)] for c in s]

    @property
    def rank(self) -> int:
        return rank_of_vectors(self.rep.rows, self.rep.field.p)


def derived_rep(q: LinearCode) -> DerivedRep:
    matroid = RepresentedMatroid.from_code(q)
    ground = matroid.circuits
    rows = [circuit_vector(q, c).vector for c in ground]
    rep = FieldMatrix(q.field, tuple(rows), q.labels)
    d = DerivedRep(q, ground, rep)
    if d.rank != q.n - q.k:
        raise InvariantViolation(
            f"derived representation has rank {d.rank}, expected {q.n - q.k}"
        )
    return d


def derived_is_independent(d: DerivedRep, s: Iterable[Iterable[int]]) -> bool:
    rows = d.rows_for(s)
    return rank_of_vectors(rows, d.rep.field.p) == len(rows)


def derived_circuits(d: DerivedRep) -> list[frozenset[frozenset[int]]]:
    """Minimal dependent sets of circuit vectors, canonically ordered."""
    m = len(d.ground)
    if m > DERIVED_GROUND_LIMIT:
        raise GuardExceeded("derived ground size", str(DERIVED_GROUND_LIMIT), str(m))
    index_sets = minimal_dependent_sets(d.rep.rows, d.rep.field.p)
    out = [frozenset(d.ground[i] for i in s) for s in index_sets]
    return sorted(out, key=lambda fam: sorted(circuit_sort_key(c) for c in fam))


def derived_flat(d: DerivedRep, s: Iterable[Iterable[int]]) -> frozenset[frozenset[int]]:
    """Closure of s in the derived matroid: every circuit whose vector lies
    in the span of the vectors of s."""
    p = d.rep.field.p
    rows = d.rows_for(s)
    echelon: list[tuple[int, list[int]]] = []
    for v in rows:
        w = list(v)
        for pos, row in echelon:
            f = w[pos]
            if f:
                w = [(a - f * b) % p for a, b in zip(w, row)]
        pos = next((i for i, x in enumerate(w) if x), None)
        if pos is not None:
            inv = pow(w[pos], p - 2, p)
            echelon.append((pos, [(x * inv) % p for x in w]))
    flat = set()
    for circuit, v in zip(d.ground, d.rep.rows):
        w = list(v)
        for pos, row in echelon:
            f = w[pos]
            if f:
                w = [(a - f * b) % p for a, b in zip(w, row)]
        if not any(w):
            flat.add(circuit)
    return frozenset(flat)


def _check_same_matroid(q1: LinearCode, q2: LinearCode) -> tuple[DerivedRep, DerivedRep]:
    if q1.field.p != q2.field.p or q1.n != q2.n:
        raise ValidationError("codes must share a field and a length")
    d1, d2 = derived_rep(q1), derived_rep(q2)
    if d1.ground != d2.ground:
        raise ValidationError("codes have different matroids (circuit lists differ)")
    return d1, d2


def derived_equal(q1: LinearCode, q2: LinearCode) -> bool:
    """Whether two representations of one matroid have equal derived matroids,
    decided by comparing full derived circuit lists."""
    d1, d2 = _check_same_matroid(q1, q2)
    return derived_circuits(d1) == derived_circuits(d2)


def separating_pattern(q1: LinearCode, q2: LinearCode) -> CollusionPattern | None:
    """A minimum-cardinality set of common circuits that is independent in one
    derived matroid and dependent in the other, as a collusion pattern.

    Returns None when the derived matroids agree. Subsets are searched in
    increasing cardinality and lexicographic order, so the result is
    deterministic.
    """
    d1, d2 = _check_same_matroid(q1, q2)
    if derived_circuits(d1) == derived_circuits(d2):
        return None
    m = len(d1.ground)
    p = q1.field.p
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            r1 = rank_of_vectors([d1.rep.rows[i] for i in combo], p)
            r2 = rank_of_vectors([d2.rep.rows[i] for i in combo], p)
            if (r1 == size) != (r2 == size):
                return make_pattern(q1.n, [d1.ground[i] for i in combo])
    raise InvariantViolation("derived circuit lists differ but no separating set found")
