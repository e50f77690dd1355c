"""Exact-arithmetic toolkit for lifts of linear codes over collusion patterns.

The package answers one family of questions: given a linear code over a
prime field and a family of coordinate sets an observer may watch, how much
larger a code can agree with it on every watched set, and when is the answer
"not at all"? The machinery runs through the matroid of the code, its
circuit vectors, and the derived matroid they represent.
"""

from .codes import (
    LinearCode,
    code_contains,
    code_equal,
    code_intersection,
    dual,
    full_code,
    is_mds,
    iter_codewords,
    make_code,
    reed_solomon,
    restrict,
    single_circuit_code,
    zero_code,
)
from .derived import (
    CircuitVector,
    DerivedRep,
    circuit_vector,
    derived_circuits,
    derived_equal,
    derived_flat,
    derived_is_independent,
    derived_rep,
    separating_pattern,
)
from .equivalence import (
    AssumptionsReport,
    EquivalenceReport,
    TriangularCertificate,
    check_compromised,
    fundamental_basis_pattern,
    has_private_elements,
    is_t_equivalent,
    standing_assumptions,
    triangular_ordering,
)
from .errors import (
    CodeliftError,
    GuardExceeded,
    InvariantViolation,
    StandingAssumptionError,
    ValidationError,
)
from .fields import FieldMatrix, PrimeField, in_row_space, kernel_basis, rref
from .lifting import (
    IdentityCheckReport,
    LiftResult,
    lift,
    lift_identities_check,
    lift_oracle,
    observed_circuits,
    projection_agrees,
)
from .matroids import RepresentedMatroid, circuits, dual_circuits
from .patterns import (
    CollusionPattern,
    compromised_pattern,
    cyclic_pattern,
    is_subpattern,
    make_pattern,
    pattern_contains,
    pattern_intersection,
    pattern_is_connected,
    pattern_union,
    t_collusion,
)

__version__ = "0.1.0"
