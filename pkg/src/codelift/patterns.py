"""Collusion patterns: abstract simplicial complexes stored by maximal facets.

Membership of a set means containment in some facet, so the downward closure
is virtual. Connectivity means graph connectivity of the facet-intersection
graph (facets adjacent when they share an element), which is what the lift
decomposition over components relies on; a single facet is connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from .errors import ValidationError
from .matroids import GROUND_HARD_CAP, RepresentedMatroid, circuit_sort_key

if TYPE_CHECKING:
    from .codes import LinearCode


@dataclass(frozen=True)
class CollusionPattern:
    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for f in self.facets:
            if not f:
                raise ValidationError("facets must be nonempty")
            if min(f) < 1 or max(f) > self.n:
                raise ValidationError(f"facet {sorted(f)} out of range 1..{self.n}")
        for a, b in combinations(self.facets, 2):
            if a <= b or b <= a:
                raise ValidationError("facets must be inclusion-maximal and distinct")

    def __repr__(self):
        shown = [sorted(f) for f in self.facets]
        return f"CollusionPattern(n={self.n}, facets={shown})"


def make_pattern(n: int, sets: Iterable[Iterable[int]]) -> CollusionPattern:
    """Pattern generated by `sets`: its inclusion-maximal nonempty members."""
    if not (1 <= n <= GROUND_HARD_CAP):
        raise ValidationError(f"ground size must be in 1..{GROUND_HARD_CAP}, got {n}")
    candidates = {frozenset(int(x) for x in s) for s in sets}
    candidates.discard(frozenset())
    for s in candidates:
        if min(s) < 1 or max(s) > n:
            raise ValidationError(f"set {sorted(s)} out of range 1..{n}")
    maximal = [s for s in candidates if not any(s < other for other in candidates)]
    return CollusionPattern(n, tuple(sorted(maximal, key=circuit_sort_key)))


def pattern_contains(tau: CollusionPattern, t: Iterable[int]) -> bool:
    """True iff t is a face, i.e. a subset of some facet. The empty set is
    a face of every pattern."""
    s = frozenset(t)
    if not s:
        return True
    if min(s) < 1 or max(s) > tau.n:
        raise ValidationError(f"set {sorted(s)} out of range 1..{tau.n}")
    return any(s <= f for f in tau.facets)


def _check_same_ground(a: CollusionPattern, b: CollusionPattern):
    if a.n != b.n:
        raise ValidationError(f"ground size mismatch: {a.n} vs {b.n}")


def pattern_union(a: CollusionPattern, b: CollusionPattern) -> CollusionPattern:
    _check_same_ground(a, b)
    return make_pattern(a.n, list(a.facets) + list(b.facets))


def pattern_intersection(a: CollusionPattern, b: CollusionPattern) -> CollusionPattern:
    _check_same_ground(a, b)
    meets = [fa & fb for fa in a.facets for fb in b.facets if fa & fb]
    return make_pattern(a.n, meets)


def is_subpattern(a: CollusionPattern, b: CollusionPattern) -> bool:
    """True iff every face of a is a face of b."""
    _check_same_ground(a, b)
    return all(pattern_contains(b, f) for f in a.facets)


def t_collusion(n: int, t: int) -> CollusionPattern:
    """The pattern generated by all t-subsets of [n]."""
    if not (1 <= t <= n):
        raise ValidationError(f"collusion size {t} out of range 1..{n}")
    return make_pattern(n, combinations(range(1, n + 1), t))


def cyclic_pattern(n: int, t: int) -> CollusionPattern:
    """n cyclic windows of t consecutive coordinates (mod n)."""
    if not (1 <= t <= n):
        raise ValidationError(f"window size {t} out of range 1..{n}")
    windows = [{(i + j) % n + 1 for j in range(t)} for i in range(n)]
    return make_pattern(n, windows)


def compromised_pattern(q: "LinearCode", e: int) -> CollusionPattern:
    """Pattern generated by all circuits of M(q) through the coordinate e.

    A coordinate contained in no circuit (a coloop) yields the empty pattern.
    """
    if not (1 <= e <= q.n):
        raise ValidationError(f"coordinate {e} out of range 1..{q.n}")
    m = RepresentedMatroid.from_code(q)
    return make_pattern(q.n, [c for c in m.circuits if e in c])


def pattern_vertices(tau: CollusionPattern) -> frozenset[int]:
    return frozenset().union(*tau.facets) if tau.facets else frozenset()


def pattern_components(tau: CollusionPattern) -> list[list[frozenset[int]]]:
    """Facet groups of the facet-intersection graph's connected components."""
    unseen = set(range(len(tau.facets)))
    comps = []
    while unseen:
        stack = [unseen.pop()]
        comp = [stack[0]]
        while stack:
            i = stack.pop()
            hits = [j for j in unseen if tau.facets[i] & tau.facets[j]]
            for j in hits:
                unseen.remove(j)
                stack.append(j)
            comp.extend(hits)
        comps.append(sorted(comp))
    return [[tau.facets[i] for i in comp] for comp in comps]


def pattern_is_connected(tau: CollusionPattern) -> bool:
    if not tau.facets:
        raise ValidationError("connectivity is undefined for an empty pattern")
    return len(pattern_components(tau)) == 1
