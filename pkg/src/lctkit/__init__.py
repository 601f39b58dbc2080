"""Exact-arithmetic invariants of monomial singularities.

Log canonical thresholds and multiplier ideals of monomial ideals through
their Newton polyhedra, staircase colengths, initial-ideal degenerations,
lattice-point bounds, and the degree arithmetic of the superrigidity
contradiction.  Every scalar is an exact rational; nothing is approximated.
"""

from .errors import (
    DimensionMismatchError,
    DomainError,
    GuardExceededError,
    LctkitError,
    ParseError,
    TruncationCapError,
    UnknownVariableError,
)
from .rationals import INFINITY, Rational, format_rational, parse_rational
from .poly import (
    MonomialIdeal,
    Polynomial,
    divides,
    minimalize,
    order_at_origin,
    unit_ideal,
    weight_of,
)
from .parsing import (
    monomial_ideal_to_string,
    parse_monomial_ideal,
    parse_polynomial,
    polynomial_to_string,
)
from .newton import (
    DiagonalCrossing,
    NewtonPolyhedron,
    contains,
    diagonal_crossing,
    is_log_canonical,
    lct,
    multiplier_ideal_plus,
    multiplier_ideal_strict,
    newton_polyhedron,
    primitive_integer_normal,
)
from .singularity import (
    ThresholdVerdict,
    blowup_margin,
    canonical_necessary,
    classify,
    colength,
    corti_intersection_bound,
    is_zero_dimensional,
    kawakita_witness,
    log_canonical_necessary,
    surface_monomial_witness,
    weight_criterion,
    weighted_lct,
)
from .registry import RegistryEntry, registry_entries, registry_lookup
from .initial import (
    LocalDimResult,
    SemidecideResult,
    TermOrder,
    TruncationCertificate,
    initial_ideal,
    lc_semidecide,
    local_dim,
    truncated_image,
    weight_initial_forms,
)
from .lattice import (
    SimplexSpec,
    combined_bound,
    crossover_table,
    cyclic_bound,
    pairing_bound,
    pairing_bound_attained,
    simplex_count,
    simplex_lattice_points,
)
from .degrees import bezout_degree, intersection_number, mult_bound, residual_degree
from .rigidity import RigidityReport, rigidity_check
from .verify import (
    VerificationReport,
    enumerate_staircase_ideals,
    verify_colength_theorem,
    verify_multiplier_lemmas,
)

__version__ = "0.1.0"
