"""Exact arithmetic for the natural class of intervals.

Intervals here are ordered pairs [a, b] over an exact scalar domain —
no ordering constraint between the endpoints, and every operation acts
componentwise, so the interval algebra is two independent copies of the
scalar algebra.  On top of that sit finite-structure analyzers
(semigroups, groups, rings, ideals, Rees-style quotients), interval
matrices and polynomials, fuzzy grids, neutrosophic scalars, and a
claim-replay suite exposed through the `natint` CLI.
"""

__version__ = "1.0.0"

from .errors import (
    DivisorComponentZero,
    DomainMismatch,
    FlavorMismatch,
    FuzzyRangeOverflow,
    InfiniteDomain,
    MissingTable,
    ModulusMismatch,
    NatIntError,
    NotAField,
    NotAnIdeal,
    NotARing,
    NotIntervalCarrier,
    ParseError,
    ShapeMismatch,
    TooLarge,
    UnorderedDomain,
)
from .scalars import (
    F01,
    FuzzyUnitDomain,
    IntDomain,
    MixedNeutroDomain,
    Mod,
    ModDomain,
    NONNEG,
    NonnegIntDomain,
    PureNeutroDomain,
    Q,
    RatDomain,
    Z,
    mixed_neutro,
    parse_domain,
    pure_neutro,
)
from .intervals import (
    Flavor,
    NaturalInterval,
    Trend,
    degenerate,
    interval,
    iv_max,
    iv_min,
    iv_scalar_mul,
    one_interval,
    parse_interval,
    zero_interval,
)
from .structures import (
    FiniteStructure,
    analyze_structure,
    axiom_report,
    check_subset_field,
    check_subset_group,
    classify,
    find_special_elements,
    inherited_substructure,
    is_group,
    is_s_ring,
    is_s_semigroup,
    is_strict_semiring,
    maximal_subgroups,
    thm_unit_square_witness,
)
from .quotients import (
    Ideal,
    enumerate_ideals,
    generate_ideal,
    ideal_summary,
    is_ideal,
    maximal_minimal_ideals,
    parse_ideal_spec,
    quotient_analysis,
    QuotientStructure,
    rees_quotient,
    semifield_verdict,
    standard_quotient,
)
from .matrices import (
    IntervalMatrix,
    decomposed_coordinates,
    mat_decompose,
    mat_recompose,
    matrix_from_csv,
    matrix_to_csv,
    parse_matrix,
    span_dimension,
)
from .polys import (
    IntervalPoly,
    parse_poly,
    poly_decompose,
    poly_recompose,
)
from .carriers import (
    build_carrier,
    corner_s_ring_witness,
    interval_elements,
    interval_structure,
    matrix_structure,
    poly_structure,
)
from .fuzzy import fuzzy_grid, fuzzy_semigroup_report, grid_structure
from .suites import (
    decomposition_suite,
    matmul_decompose_suite,
    modmap_suite,
    poly_decompose_suite,
    strictness_suite,
)
from .verify import claim_ids, run_verification
from .cli import eval_expression

__all__ = [
    "__version__",
    # errors
    "NatIntError", "DomainMismatch", "FlavorMismatch", "NotARing",
    "FuzzyRangeOverflow", "DivisorComponentZero", "UnorderedDomain",
    "InfiniteDomain", "TooLarge", "MissingTable", "NotIntervalCarrier",
    "NotAnIdeal", "NotAField", "ShapeMismatch", "ModulusMismatch",
    "ParseError",
    # scalar domains
    "Z", "Q", "NONNEG", "F01", "Mod", "parse_domain", "IntDomain",
    "NonnegIntDomain", "RatDomain", "ModDomain", "FuzzyUnitDomain",
    "PureNeutroDomain", "MixedNeutroDomain", "pure_neutro", "mixed_neutro",
    # intervals
    "Flavor", "Trend", "NaturalInterval", "interval", "degenerate",
    "zero_interval", "one_interval", "parse_interval", "iv_scalar_mul",
    "iv_min", "iv_max",
    # finite structures
    "FiniteStructure", "is_group", "axiom_report", "classify",
    "find_special_elements", "check_subset_group", "check_subset_field",
    "is_s_semigroup", "is_s_ring", "is_strict_semiring",
    "inherited_substructure", "maximal_subgroups",
    "thm_unit_square_witness", "analyze_structure",
    # ideals and quotients
    "Ideal", "is_ideal", "generate_ideal", "parse_ideal_spec",
    "enumerate_ideals", "maximal_minimal_ideals", "ideal_summary",
    "QuotientStructure", "standard_quotient", "rees_quotient",
    "semifield_verdict", "quotient_analysis",
    # matrices and polynomials
    "IntervalMatrix", "parse_matrix", "matrix_to_csv", "matrix_from_csv",
    "mat_decompose", "mat_recompose", "decomposed_coordinates",
    "span_dimension", "IntervalPoly", "parse_poly", "poly_decompose",
    "poly_recompose",
    # carriers
    "build_carrier", "interval_structure", "matrix_structure",
    "poly_structure", "interval_elements", "corner_s_ring_witness",
    # fuzzy grids
    "fuzzy_grid", "grid_structure", "fuzzy_semigroup_report",
    # randomized suites
    "decomposition_suite", "modmap_suite", "matmul_decompose_suite",
    "poly_decompose_suite", "strictness_suite",
    # claim replay and expressions
    "run_verification", "claim_ids", "eval_expression",
]
