"""Linear codes over prime fields.

A code is stored by a canonical generator: the RREF of whatever spanning set
it was built from, with zero rows dropped. Equality of codes is therefore
syntactic equality of generators. External indexing of coordinates is
1-based; restrictions keep the original labels of the surviving columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError
from .fields import FieldMatrix, PrimeField, in_row_space, kernel_basis, rref


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by its canonical (RREF, full-row-rank) generator."""

    generator: FieldMatrix

    @property
    def field(self) -> PrimeField:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.n_cols

    @property
    def k(self) -> int:
        return self.generator.n_rows

    @property
    def labels(self) -> tuple[int, ...]:
        return self.generator.col_labels

    def contains_word(self, v: Sequence[int]) -> bool:
        return in_row_space(self.generator, v)

    def __repr__(self):
        return f"LinearCode(p={self.field.p}, n={self.n}, k={self.k})"


def _canonical(m: FieldMatrix) -> LinearCode:
    """Code spanned by the rows of m: RREF, zero rows dropped."""
    red, _, rank = rref(m)
    return LinearCode(FieldMatrix(m.field, red.rows[:rank], m.col_labels))


def make_code(p: int, n: int, rows: Iterable[Sequence[int]]) -> LinearCode:
    """Code spanned by `rows` in F_p^n. Dependent or repeated rows are fine."""
    if n < 1:
        raise ValidationError(f"code length must be >= 1, got {n}")
    fld = PrimeField(p)
    rows = list(rows)
    for r in rows:
        if len(r) != n:
            raise ValidationError(f"generator row of length {len(r)}, expected {n}")
    m = FieldMatrix.make(fld, rows, range(1, n + 1))
    return _canonical(m)


def from_matrix(m: FieldMatrix) -> LinearCode:
    """Code spanned by the rows of an arbitrary labeled matrix."""
    return _canonical(m)


def zero_code(p: int, n: int) -> LinearCode:
    return make_code(p, n, [])


def full_code(p: int, n: int) -> LinearCode:
    return make_code(p, n, [[1 if j == i else 0 for j in range(n)] for i in range(n)])


def dual(q: LinearCode) -> LinearCode:
    """The dual code {v : x·v = 0 for all x in q}, on the same labels."""
    return _canonical(kernel_basis(q.generator))


def restrict(q: LinearCode, t: Iterable[int]) -> LinearCode:
    """Projection of q onto the coordinates t, kept under their own labels."""
    members = sorted(set(t))
    if not members:
        raise ValidationError("cannot restrict a code to the empty coordinate set")
    for c in members:
        if c not in q.labels:
            raise ValidationError(f"coordinate {c} is not a label of this code")
    return _canonical(q.generator.restrict_columns(members))


def reed_solomon(p: int, n: int, k: int, points: Sequence[int]) -> LinearCode:
    """Evaluation code of polynomials of degree < k at n distinct points.

    Generator row i (0-based) holds the i-th powers of the points.
    """
    fld = PrimeField(p)
    if n > p:
        raise ValidationError(f"length {n} exceeds field size {p}")
    if not (0 < k <= n):
        raise ValidationError(f"dimension {k} out of range for length {n}")
    pts = [x % p for x in points]
    if len(pts) != n:
        raise ValidationError(f"expected {n} evaluation points, got {len(pts)}")
    if len(set(pts)) != n:
        raise ValidationError("evaluation points must be distinct")
    rows = [[pow(x, i, p) for x in pts] for i in range(k)]
    return make_code(p, n, rows)


def is_mds(q: LinearCode) -> bool:
    """True iff every k-subset of generator columns has full rank k."""
    if q.k == 0 or q.k == q.n:
        raise ValidationError(f"MDS test undefined for degenerate dimension k={q.k}, n={q.n}")
    cols = {c: q.generator.column(c) for c in q.labels}
    from .fields import rank_of_vectors

    for sub in combinations(q.labels, q.k):
        if rank_of_vectors([cols[c] for c in sub], q.field.p) != q.k:
            return False
    return True


def _check_comparable(q1: LinearCode, q2: LinearCode):
    if q1.field.p != q2.field.p:
        raise ValidationError(f"field mismatch: F_{q1.field.p} vs F_{q2.field.p}")
    if q1.n != q2.n:
        raise ValidationError(f"length mismatch: {q1.n} vs {q2.n}")


def code_equal(q1: LinearCode, q2: LinearCode) -> bool:
    """True iff the two codes have the same row space (identical canonical forms)."""
    _check_comparable(q1, q2)
    return q1.generator.rows == q2.generator.rows


def code_contains(outer: LinearCode, inner: LinearCode) -> bool:
    """True iff inner is a subspace of outer."""
    _check_comparable(outer, inner)
    return all(in_row_space(outer.generator, row) for row in inner.generator.rows)


def code_intersection(q1: LinearCode, q2: LinearCode) -> LinearCode:
    """Intersection of two codes, via the union of their parity constraints."""
    _check_comparable(q1, q2)
    h = dual(q1).generator.stack(dual(q2).generator.rows)
    return _canonical(kernel_basis(h))


def iter_codewords(q: LinearCode) -> Iterator[tuple[int, ...]]:
    """All p^k codewords, deterministically ordered by generator-row spans."""
    p = q.field.p
    words = [tuple([0] * q.n)]
    yield words[0]
    for row in q.generator.rows:
        multiples = []
        scaled = row
        for _ in range(p - 1):
            multiples.append(scaled)
            scaled = tuple((a + b) % p for a, b in zip(scaled, row))
        new = []
        for m in multiples:
            for w in words:
                nw = tuple((a + b) % p for a, b in zip(w, m))
                new.append(nw)
                yield nw
        words.extend(new)


def single_circuit_code(p: int, n: int, t: Iterable[int]) -> LinearCode:
    """A code of length n whose column matroid has t as its unique circuit.

    The generator is the identity on [n]-{max t}, with column max(t) chosen
    so that t is the one minimal dependency; every element outside t is a
    coloop.
    """
    members = sorted(set(t))
    if not members:
        raise ValidationError("target circuit must be nonempty")
    if members[0] < 1 or members[-1] > n:
        raise ValidationError(f"target circuit {members} out of range 1..{n}")
    m = members[-1]
    rest = members[:-1]
    rows = []
    for j in range(1, n + 1):
        if j == m:
            continue
        row = [0] * n
        row[j - 1] = 1
        if j in rest:
            row[m - 1] = p - 1
        rows.append(row)
    return make_code(p, n, rows)
