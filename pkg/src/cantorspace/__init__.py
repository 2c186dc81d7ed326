"""Exact computation on symbolic sequence spaces: Cantor coding, ultrametrics,
shifts, termwise algebra, cylinder measures and step-function integrals."""

from .coding import (
    Interval,
    StageInterval,
    beta,
    beta_decode,
    beta_expansions,
    cylinder_interval,
    dyadic_interval,
    stage_intervals,
    tau,
    tau_decode,
)
from .core import (
    BINARY,
    Alphabet,
    BiSequenceDescriptor,
    BudgetExceeded,
    CantorSpaceError,
    Cylinder,
    LevelError,
    LevelSystem,
    SequenceDescriptor,
    SymbolError,
    cylinder_children,
    cylinder_contains,
    descriptor_equal,
    disjointify,
    nested_clusters,
    pigeonhole_cluster,
    symbol_at,
)
from .dynamics import (
    OpTable,
    TermwiseStructure,
    bi_termwise_op,
    identity_sequence,
    in_e_star,
    locality_check,
    orbit,
    shift_one_sided,
    shift_preimages,
    shift_two_sided,
    termwise_inverse,
    termwise_op,
    unshift_two_sided,
    validate_op_table,
)
from .integration import (
    ModulusFunction,
    StepFunction,
    approximate_integral,
    indicator,
    integrate_step,
    measure_from_functional,
    refine_step,
    zero_extension,
)
from .measure import (
    CodingMap,
    FinitePointMeasure,
    ProductMeasure,
    TreeMeasure,
    check_consistency,
    clopen_mass,
    cylinder_mass,
    product_to_tree,
    pushforward_intervals,
)
from .metric import EQUAL, UltrametricParams, agreement_depth, ball_to_cylinder, distance, in_ball, two_sided_distance

__all__ = [
    "Alphabet",
    "BINARY",
    "BiSequenceDescriptor",
    "BudgetExceeded",
    "CantorSpaceError",
    "CodingMap",
    "Cylinder",
    "EQUAL",
    "FinitePointMeasure",
    "Interval",
    "LevelError",
    "LevelSystem",
    "ModulusFunction",
    "OpTable",
    "ProductMeasure",
    "SequenceDescriptor",
    "StageInterval",
    "StepFunction",
    "SymbolError",
    "TermwiseStructure",
    "TreeMeasure",
    "UltrametricParams",
    "agreement_depth",
    "approximate_integral",
    "ball_to_cylinder",
    "beta",
    "beta_decode",
    "beta_expansions",
    "bi_termwise_op",
    "check_consistency",
    "clopen_mass",
    "cylinder_children",
    "cylinder_contains",
    "cylinder_interval",
    "cylinder_mass",
    "descriptor_equal",
    "disjointify",
    "distance",
    "in_ball",
    "dyadic_interval",
    "identity_sequence",
    "in_e_star",
    "indicator",
    "integrate_step",
    "locality_check",
    "measure_from_functional",
    "nested_clusters",
    "orbit",
    "pigeonhole_cluster",
    "product_to_tree",
    "pushforward_intervals",
    "refine_step",
    "shift_one_sided",
    "shift_preimages",
    "shift_two_sided",
    "stage_intervals",
    "symbol_at",
    "tau",
    "tau_decode",
    "termwise_inverse",
    "termwise_op",
    "two_sided_distance",
    "unshift_two_sided",
    "validate_op_table",
    "zero_extension",
]

__version__ = "0.1.0"
