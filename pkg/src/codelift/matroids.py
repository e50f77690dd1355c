"""Column matroids of linear codes: circuits, rank, closure, minors, duality.

The circuit list is enumerated once, at construction, by walking subsets in
size order (never larger than rank+1) and discarding supersets of circuits
already found; an unpruned dependent set is then automatically minimal.
Ground subsets are frozensets of 1-based column labels.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .codes import LinearCode
from .errors import GuardExceeded, ValidationError
from .fields import FieldMatrix, _rref_core, kernel_basis, rank_of_vectors

CIRCUIT_GROUND_LIMIT = 24
GROUND_HARD_CAP = 64


def circuit_sort_key(c: Iterable[int]):
    return tuple(sorted(c))


def _is_dependent(vectors: Sequence[Sequence[int]], p: int) -> bool:
    """True iff some vector reduces to zero against the preceding ones."""
    echelon: list[tuple[int, list[int]]] = []
    for v in vectors:
        w = list(v)
        for pos, row in echelon:
            f = w[pos]
            if f:
                w = [(a - f * b) % p for a, b in zip(w, row)]
        pos = next((i for i, x in enumerate(w) if x), None)
        if pos is None:
            return True
        inv = pow(w[pos], p - 2, p)
        if inv != 1:
            w = [(x * inv) % p for x in w]
        echelon.append((pos, w))
    return False


def minimal_dependent_sets(
    vectors: Sequence[Sequence[int]], p: int, max_size: int | None = None
) -> list[frozenset[int]]:
    """Inclusion-minimal index sets whose vectors are linearly dependent.

    Returned lexicographically sorted (by sorted index tuple).
    """
    m = len(vectors)
    if max_size is None:
        max_size = min(m, rank_of_vectors(vectors, p) + 1)
    found: list[frozenset[int]] = []
    for size in range(1, max_size + 1):
        for combo in combinations(range(m), size):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if _is_dependent([vectors[i] for i in combo], p):
                found.append(s)
    return sorted(found, key=circuit_sort_key)


class RepresentedMatroid:
    """The matroid of the columns of a labeled generator matrix.

    Immutable once built; the circuit list is cached at construction, so
    instances are safe to share across threads.
    """

    def __init__(self, generator: FieldMatrix):
        n = generator.n_cols
        if n > GROUND_HARD_CAP:
            raise GuardExceeded("ground size", str(GROUND_HARD_CAP), str(n))
        if n > CIRCUIT_GROUND_LIMIT:
            raise GuardExceeded("circuit enumeration ground size", str(CIRCUIT_GROUND_LIMIT), str(n))
        self.generator = generator
        self.ground: tuple[int, ...] = generator.col_labels
        self._p = generator.field.p
        self._columns = {c: generator.column(c) for c in self.ground}
        self.rank: int = rank_of_vectors(list(self._columns.values()), self._p)
        cols = [self._columns[c] for c in self.ground]
        idx_circuits = minimal_dependent_sets(cols, self._p, max_size=min(n, self.rank + 1))
        self.circuits: tuple[frozenset[int], ...] = tuple(
            frozenset(self.ground[i] for i in s) for s in idx_circuits
        )

    @classmethod
    def from_code(cls, q: LinearCode) -> "RepresentedMatroid":
        return cls(q.generator)

    def _check_subset(self, x: Iterable[int]) -> frozenset[int]:
        s = frozenset(x)
        bad = s - set(self.ground)
        if bad:
            raise ValidationError(f"elements {sorted(bad)} are not in the ground set")
        return s

    def rank_of(self, x: Iterable[int]) -> int:
        s = self._check_subset(x)
        return rank_of_vectors([self._columns[c] for c in sorted(s)], self._p)

    def closure_of(self, x: Iterable[int]) -> frozenset[int]:
        """All elements whose addition does not raise the rank of x."""
        s = self._check_subset(x)
        echelon: list[tuple[int, list[int]]] = []
        for c in sorted(s):
            w = list(self._columns[c])
            for pos, row in echelon:
                f = w[pos]
                if f:
                    w = [(a - f * b) % self._p for a, b in zip(w, row)]
            pos = next((i for i, v in enumerate(w) if v), None)
            if pos is not None:
                inv = pow(w[pos], self._p - 2, self._p)
                echelon.append((pos, [(v * inv) % self._p for v in w]))
        closed = set(s)
        for e in self.ground:
            if e in closed:
                continue
            w = list(self._columns[e])
            for pos, row in echelon:
                f = w[pos]
                if f:
                    w = [(a - f * b) % self._p for a, b in zip(w, row)]
            if not any(w):
                closed.add(e)
        return frozenset(closed)

    def loops_and_coloops(self) -> tuple[frozenset[int], frozenset[int]]:
        loops = frozenset(c for c in self.ground if not any(self._columns[c]))
        covered = set().union(*self.circuits) if self.circuits else set()
        coloops = frozenset(c for c in self.ground if c not in covered)
        return loops, coloops

    def is_connected(self) -> bool:
        """Single elements count as connected; otherwise every pair of
        elements must lie in a common circuit."""
        n = len(self.ground)
        if n == 0:
            raise ValidationError("connectivity is undefined for an empty ground set")
        if n == 1:
            return True
        pairs = set()
        for c in self.circuits:
            members = sorted(c)
            for a, b in combinations(members, 2):
                pairs.add((a, b))
        need = sum(1 for _ in combinations(range(n), 2))
        return len(pairs) == need

    def is_basis(self, b: Iterable[int]) -> bool:
        s = self._check_subset(b)
        return len(s) == self.rank and self.rank_of(s) == self.rank

    def fundamental_circuit(self, b: Iterable[int], e: int) -> frozenset[int]:
        """The unique circuit inside basis ∪ {e}, read off the 1-dim kernel
        of the corresponding column submatrix."""
        s = self._check_subset(b)
        if not self.is_basis(s):
            raise ValidationError(f"{sorted(s)} is not a basis")
        self._check_subset([e])
        if e in s:
            raise ValidationError(f"element {e} already belongs to the basis")
        labels = sorted(s | {e})
        sub = self.generator.restrict_columns(labels)
        ker = kernel_basis(sub)
        if ker.n_rows != 1:
            raise ValidationError(f"no unique dependency in {labels}")
        support = frozenset(c for c, v in zip(labels, ker.rows[0]) if v)
        return support

    def minor(self, delete: Iterable[int], contract: Iterable[int]) -> "RepresentedMatroid":
        """Matroid of the code punctured on `delete` and shortened on `contract`."""
        d = self._check_subset(delete)
        c = self._check_subset(contract)
        if d & c:
            raise ValidationError(f"delete and contract overlap on {sorted(d & c)}")
        gen = self.generator
        if c:
            order = sorted(c) + sorted(set(self.ground) - c)
            permuted = gen.restrict_columns(order)
            red, piv = _rref_core(permuted.rows, self._p)
            # rows whose pivot lies beyond the contracted block have zeros
            # throughout that block, so trimming it is exact
            keep_rows = [red[i] for i, pos in enumerate(piv) if pos >= len(c)]
            rest = order[len(c):]
            gen = FieldMatrix(
                gen.field,
                tuple(tuple(r[len(c):]) for r in keep_rows),
                tuple(rest),
            )
        if d:
            kept = [x for x in gen.col_labels if x not in d]
            if not kept:
                raise ValidationError("minor would have an empty ground set")
            gen = gen.restrict_columns(kept)
        return RepresentedMatroid(gen)

    def dual_circuits(self) -> tuple[frozenset[int], ...]:
        """Circuits of the dual code's matroid (cocircuits of this one)."""
        return RepresentedMatroid(kernel_basis(self.generator)).circuits


def circuits(q: LinearCode) -> list[frozenset[int]]:
    """Circuits of the column matroid of q, lexicographically sorted."""
    return list(RepresentedMatroid.from_code(q).circuits)


def dual_circuits(q: LinearCode) -> list[frozenset[int]]:
    return list(RepresentedMatroid.from_code(q).dual_circuits())
