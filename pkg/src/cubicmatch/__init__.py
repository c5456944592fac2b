"""Matching analysis on subcubic graphs: exact solvers for the plain,
induced, and uniquely restricted matching numbers, ladder-family
generators and recognizers, and a polynomial-time procedure deciding
whether the induced and uniquely restricted numbers coincide.
"""

from .graph import (
    FormatError,
    Graph,
    closed_neighborhood,
    connected_components,
    cut_vertices,
    delete_vertices,
    induced_subgraph,
    is_connected,
    is_subcubic,
    is_two_connected,
    max_degree,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .matching import (
    AlternatingCycleWitness,
    Matching,
    find_alternating_cycle,
    is_induced_matching,
    is_matching,
    is_uniquely_restricted,
    matched_subgraph,
    matching_from,
    validate_alternating_cycle,
)
from .exact import (
    BudgetError,
    SolveBudget,
    count_perfect_matchings,
    max_induced_matching,
    max_matching,
    max_uniquely_restricted_matching,
    oracle_equality,
)
from .family import (
    EndType,
    FamilySpec,
    canonical_induced_matching,
    closed_ladder,
    end_variant_ladder,
    equality_certified,
    find_isomorphism,
    is_isomorphic,
    ladder,
    members_of_order,
    recognize,
    recognize_with_mapping,
)
from .decide import (
    DecisionReport,
    FailingComponent,
    PeelOutcome,
    SizeMismatch,
    Violation,
    decide_equality,
    local_pair_violations,
    peel_induced,
    peel_ur,
)
from .harness import (
    VerifyRecord,
    VerifySummary,
    exhaustive_connected_subcubic,
    random_subcubic,
    verify_lines,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
