"""specmatch: signless Laplacian spectral radii, fractional matching
numbers, and machine-checked bounds relating them.

The library keeps two independent routes to every headline quantity
(double cover + bipartite matching vs. exhaustive deficiency; power
iteration vs. Jacobi vs. exact rational quotients) and ships checkers that
report HOLDS / FAILS / BOUNDARY with signed margins for each bound.
"""

from .errors import (
    ConstructionFailed,
    HypothesisUnmet,
    IndexOutOfRange,
    InvalidEdge,
    InvalidInput,
    InvalidMatrix,
    InvalidParameter,
    InvalidPartition,
    InvalidSpec,
    InvalidWeight,
    NoConvergence,
    NotBipartite,
    ParseError,
    TooLarge,
    UnknownEdge,
)
from .graph_core import (
    Graph,
    BiregularFamilySpec,
    bipartition,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    construct_biregular_family,
    construct_clique_apex,
    construct_join_exception,
    cycle_graph,
    degree_stats,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    is_connected,
    isolated_count,
    join,
    make_family,
    parse_edge_list_text,
    parse_graph6,
    path_graph,
    to_edge_list_text,
    to_graph6,
)
from .spectral import (
    Partition,
    QuotientMatrix,
    SpectrumResult,
    adjacency_matrix,
    check_interlacing,
    eigenvalues_all,
    graph_eigenvalues,
    graph_radius,
    is_equitable,
    quotient_matrix,
    signless_laplacian,
    spectral_radius,
)
from .matching import (
    DeficiencyWitness,
    FractionalMatching,
    MatchingResult,
    brute_force_deficiency,
    brute_force_matching_number,
    double_cover,
    extract_fractional_matching,
    fractional_matching_number,
    has_fractional_perfect_matching,
    max_matching_bipartite,
    verify_fractional_matching,
)
from .theorems import (
    BiregularMembership,
    ConditionStatus,
    HuntConfig,
    HuntResult,
    Status,
    TheoremReport,
    Verdict,
    check_degree_bounds,
    check_fm_lower,
    check_fpm_complement,
    check_fpm_complement_refined,
    check_fpm_radius,
    check_ratio_bound,
    check_subgraph_monotonicity,
    checker_names,
    hunt,
    recognize_biregular_family,
    recognize_join_exception,
    run_all_checks,
    run_named_check,
)

__version__ = "0.1.0"
