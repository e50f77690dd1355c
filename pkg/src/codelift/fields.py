"""Exact arithmetic over prime fields and labeled-column matrix algebra.

Everything downstream (codes, matroids, lifts) reduces to three operations
defined here: reduced row echelon form, kernel bases, and row-space
membership. Matrices carry explicit 1-based column labels so that ground-set
bookkeeping survives restriction and shortening; column order is never
physically permuted in returned values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ValidationError

MAX_MODULUS = 2**16


def is_prime(p: int) -> bool:
    """Trial-division primality test (moduli here are tiny)."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p with elements canonically represented in 0..p-1."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p <= MAX_MODULUS):
            raise ValidationError(f"modulus must be an integer in 2..{MAX_MODULUS}, got {self.p!r}")
        if not is_prime(self.p):
            raise ValidationError(f"modulus {self.p} is not prime")

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


@dataclass(frozen=True)
class FieldMatrix:
    """Immutable row-major matrix over a prime field with labeled columns.

    A matrix with zero rows is valid; it represents an empty constraint set
    (its kernel is the full space). Column labels are distinct positive
    integers identifying ground-set elements.
    """

    field: PrimeField
    rows: tuple[tuple[int, ...], ...]
    col_labels: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValidationError(f"column labels must be distinct, got {self.col_labels}")
        if any(not isinstance(c, int) or c < 1 for c in self.col_labels):
            raise ValidationError("column labels must be positive integers")
        for r in self.rows:
            if len(r) != len(self.col_labels):
                raise ValidationError(
                    f"row width {len(r)} does not match {len(self.col_labels)} columns"
                )
            if any(not (0 <= x < self.field.p) for x in r):
                raise ValidationError("matrix entries must be reduced mod p")

    @classmethod
    def make(
        cls,
        p: int | PrimeField,
        rows: Iterable[Sequence[int]],
        col_labels: Sequence[int] | None = None,
    ) -> "FieldMatrix":
        """Build a matrix, reducing entries mod p. Labels default to 1..n."""
        fld = p if isinstance(p, PrimeField) else PrimeField(p)
        reduced = tuple(tuple(int(x) % fld.p for x in r) for r in rows)
        if col_labels is None:
            if not reduced:
                raise ValidationError("col_labels required for a matrix with no rows")
            col_labels = range(1, len(reduced[0]) + 1)
        return cls(fld, reduced, tuple(int(c) for c in col_labels))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    def label_index(self, label: int) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown column label {label}") from None

    def column(self, label: int) -> tuple[int, ...]:
        j = self.label_index(label)
        return tuple(r[j] for r in self.rows)

    def restrict_columns(self, labels: Sequence[int]) -> "FieldMatrix":
        """Column submatrix, columns ordered as given in `labels`."""
        idx = [self.label_index(c) for c in labels]
        rows = tuple(tuple(r[j] for j in idx) for r in self.rows)
        return FieldMatrix(self.field, rows, tuple(labels))

    def stack(self, extra_rows: Iterable[Sequence[int]]) -> "FieldMatrix":
        more = tuple(tuple(int(x) % self.field.p for x in r) for r in extra_rows)
        return FieldMatrix(self.field, self.rows + more, self.col_labels)


class RrefResult(NamedTuple):
    matrix: FieldMatrix
    pivots: tuple[int, ...]  # labels of pivot columns, in row order
    rank: int


def _rref_core(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """RREF over F_p. Returns (rows, pivot column positions).

    Row count is preserved; zero rows end up at the bottom.
    """
    out = [list(r) for r in rows]
    if not out:
        return out, []
    ncols = len(out[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(out)) if out[i][c]), None)
        if pr is None:
            continue
        out[r], out[pr] = out[pr], out[r]
        inv = pow(out[r][c], p - 2, p)
        if inv != 1:
            out[r] = [(x * inv) % p for x in out[r]]
        lead = out[r]
        for i in range(len(out)):
            f = out[i][c]
            if i != r and f:
                row = out[i]
                out[i] = [(a - f * b) % p for a, b in zip(row, lead)]
        pivots.append(c)
        r += 1
        if r == len(out):
            break
    return out, pivots


def rref(m: FieldMatrix) -> RrefResult:
    """Unique reduced row echelon form; column order and labels unchanged."""
    reduced, piv = _rref_core(m.rows, m.field.p)
    mat = FieldMatrix(m.field, tuple(tuple(r) for r in reduced), m.col_labels)
    return RrefResult(mat, tuple(m.col_labels[c] for c in piv), len(piv))


def kernel_basis(m: FieldMatrix) -> FieldMatrix:
    """Basis of {x : m·x = 0} as rows, over the same labeled columns.

    One basis row per non-pivot column, in ascending column position; the
    row has a 1 in its free column and lives in the original column order.
    """
    p = m.field.p
    reduced, piv = _rref_core(m.rows, p)
    piv_set = set(piv)
    basis = []
    for f in range(m.n_cols):
        if f in piv_set:
            continue
        v = [0] * m.n_cols
        v[f] = 1
        for row_idx, pc in enumerate(piv):
            v[pc] = (-reduced[row_idx][f]) % p
        basis.append(tuple(v))
    return FieldMatrix(m.field, tuple(basis), m.col_labels)


def reduce_against(v: Sequence[int], rows: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> list[int]:
    """Reduce v by RREF rows with known pivot positions."""
    w = [x % p for x in v]
    for row, c in zip(rows, pivots):
        f = w[c]
        if f:
            w = [(a - f * b) % p for a, b in zip(w, row)]
    return w


def in_row_space(m: FieldMatrix, v: Sequence[int]) -> bool:
    """True iff v lies in the row space of m (rank is unchanged by stacking v)."""
    if len(v) != m.n_cols:
        raise ValidationError(f"vector length {len(v)} does not match {m.n_cols} columns")
    reduced, piv = _rref_core(m.rows, m.field.p)
    w = reduce_against(v, reduced, piv, m.field.p)
    return not any(w)


def dot(u: Sequence[int], v: Sequence[int], p: int) -> int:
    if len(u) != len(v):
        raise ValidationError("dot product length mismatch")
    return sum(a * b for a, b in zip(u, v)) % p


def rank_of_vectors(vectors: Iterable[Sequence[int]], p: int) -> int:
    """Rank of a list of equal-length vectors, by incremental elimination."""
    echelon: list[tuple[int, list[int]]] = []  # (pivot position, normalized row)
    rank = 0
    for v in vectors:
        w = [x % p for x in v]
        for pos, row in echelon:
            f = w[pos]
            if f:
                w = [(a - f * b) % p for a, b in zip(w, row)]
        pos = next((i for i, x in enumerate(w) if x), None)
        if pos is not None:
            inv = pow(w[pos], p - 2, p)
            if inv != 1:
                w = [(x * inv) % p for x in w]
            echelon.append((pos, w))
            rank += 1
    return rank
