"""strat-euler: equivariant moduli analysis with exact arithmetic.

Orbit-type stratifications of representation spheres, fixed/obstruction
bundle partitions and coindex feasibility, minimal generators of equivariant
polynomial maps, and fixed-point localization of equivariant integrals over
exact rational Laurent polynomials.
"""

from .covariants import (
    MonomialMap,
    UniversalVarietyInfo,
    covariant_generators,
    invariant_generators,
    universal_variety_info,
)
from .equivariant_classes import (
    EquivariantClass,
    FiniteBasisRing,
    LineSummand,
    RationalLaurent,
    builtin_ring,
    euler_class,
    integrate_over_component,
    invert_euler,
    point_ring,
    projective_space_ring,
    ring_mul,
    sphere_ring,
    tensor_ring,
)
from .errors import (
    AmbientMismatchError,
    ConsistencyViolationError,
    EmptySpaceError,
    NonInvertibleError,
    PoleCancellationError,
    ProblemParseError,
    RingMismatchError,
    SplitValidationError,
    StratEulerError,
    UnknownStratumError,
    ValidationError,
)
from .group_lattice import AmbientGroup, Subgroup, join, meet, subgroup_leq
from .localization import (
    BundleRestriction,
    ComponentSplit,
    FixedComponent,
    LocalizationProblem,
    abbv_integral,
    canonical_split,
    intersection_number,
    fixed_locus_pairing,
    product_formula_check,
)
from .moduli_partition import (
    EquivariantBundle,
    FeasibilityReport,
    PartitionReport,
    PartitionRow,
    coindex,
    feasibility_json,
    feasibility_report,
    partition,
    trivial_bundle,
    validate_consistency,
)
from .models import cp2_model, s2_rotation_model, s2xs2_model, s4_semifree_model
from .representations import (
    Representation,
    circle_representation,
    cyclic_representation,
    fixed_part,
    moving_part,
    restrict,
)
from .stratification import (
    CycleReport,
    StratifiedSpace,
    Stratum,
    check_cycle_condition,
    skeleton_filtration,
    sphere_stratification,
    stratification_records,
    stratum_length,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientGroup",
    "AmbientMismatchError",
    "BundleRestriction",
    "ComponentSplit",
    "ConsistencyViolationError",
    "CycleReport",
    "EmptySpaceError",
    "EquivariantBundle",
    "EquivariantClass",
    "FeasibilityReport",
    "FiniteBasisRing",
    "FixedComponent",
    "LineSummand",
    "LocalizationProblem",
    "MonomialMap",
    "NonInvertibleError",
    "PartitionReport",
    "PartitionRow",
    "PoleCancellationError",
    "ProblemParseError",
    "RationalLaurent",
    "Representation",
    "RingMismatchError",
    "SplitValidationError",
    "StratEulerError",
    "StratifiedSpace",
    "Stratum",
    "Subgroup",
    "UniversalVarietyInfo",
    "UnknownStratumError",
    "ValidationError",
    "abbv_integral",
    "builtin_ring",
    "canonical_split",
    "check_cycle_condition",
    "circle_representation",
    "coindex",
    "covariant_generators",
    "cp2_model",
    "cyclic_representation",
    "euler_class",
    "feasibility_json",
    "feasibility_report",
    "fixed_part",
    "integrate_over_component",
    "intersection_number",
    "invariant_generators",
    "invert_euler",
    "join",
    "fixed_locus_pairing",
    "meet",
    "moving_part",
    "partition",
    "point_ring",
    "product_formula_check",
    "projective_space_ring",
    "restrict",
    "ring_mul",
    "s2_rotation_model",
    "s2xs2_model",
    "s4_semifree_model",
    "skeleton_filtration",
    "sphere_ring",
    "sphere_stratification",
    "stratification_records",
    "stratum_length",
    "subgroup_leq",
    "tensor_ring",
    "trivial_bundle",
    "universal_variety_info",
    "validate_consistency",
]
