"""Minimal-envy matching for hospitals/residents instances with quota intervals.

The package has four layers: `core` (instance model, envy/feasibility
predicates), `algorithms` (deferred acceptance, the envy-free decision
procedure, the exact minimum-envy-pair solver, brute-force oracles),
`reductions` (vertex-cover and clique hardness-reduction generators with
certificate matchings), and `formats`/`cli` (file grammars and the command
line).
"""

from .algorithms import (
    BudgetExceeded,
    Infeasible,
    LevelCapExceeded,
    ObjectiveKind,
    SolveResult,
    SolveStats,
    brute_min_ep,
    brute_min_er,
    deferred_acceptance,
    enumerate_feasible,
    exists_feasible,
    min_ep_exact,
    reduced_capacity_instance,
    yokoi_envy_free,
)
from .core import (
    EMPTY_MATCHING,
    EnvyReport,
    Instance,
    InvalidInstanceError,
    InvalidMatchingError,
    Matching,
    analyze,
    blocking_pairs,
    envy_pairs,
    envy_residents,
    is_envy_free,
    is_feasible,
    make_matching,
    validate_instance,
    without_edges,
)
from .formats import (
    ParseError,
    parse_graph,
    parse_instance,
    parse_matching,
    serialize_graph,
    serialize_instance,
    serialize_matching,
)
from .reductions import (
    CliqueReductionParams,
    NotAClique,
    NotACover,
    ReductionError,
    SeparationBoundWarning,
    SourceGraph,
    VCReductionParams,
    WrongSize,
    clique_to_min_er,
    gadget_instance,
    gadget_matchings,
    matching_from_clique,
    matching_from_cover,
    vc_to_min_ep,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CliqueReductionParams",
    "EMPTY_MATCHING",
    "EnvyReport",
    "Infeasible",
    "Instance",
    "InvalidInstanceError",
    "InvalidMatchingError",
    "LevelCapExceeded",
    "Matching",
    "NotAClique",
    "NotACover",
    "ObjectiveKind",
    "ParseError",
    "ReductionError",
    "SeparationBoundWarning",
    "SolveResult",
    "SolveStats",
    "SourceGraph",
    "VCReductionParams",
    "WrongSize",
    "analyze",
    "blocking_pairs",
    "brute_min_ep",
    "brute_min_er",
    "clique_to_min_er",
    "deferred_acceptance",
    "enumerate_feasible",
    "envy_pairs",
    "envy_residents",
    "exists_feasible",
    "gadget_instance",
    "gadget_matchings",
    "is_envy_free",
    "is_feasible",
    "make_matching",
    "matching_from_clique",
    "matching_from_cover",
    "min_ep_exact",
    "parse_graph",
    "parse_instance",
    "parse_matching",
    "reduced_capacity_instance",
    "serialize_graph",
    "serialize_instance",
    "serialize_matching",
    "validate_instance",
    "vc_to_min_ep",
    "without_edges",
    "yokoi_envy_free",
]
