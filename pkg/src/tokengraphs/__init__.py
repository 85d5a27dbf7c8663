"""Token graphs: construction, exact matching and independence numbers,
constructive witnesses, and closed-form verification at desk scale."""

from .constructions import (
    InjectionPhi,
    LayerSet,
    cycle_independent_set,
    cycle_layer,
    expected_matching_size,
    f2_matching_construction,
    isolated_tokens,
    layers_linked,
    lemma_times_combine,
    theorem1_matching,
    witness_graph_large_s,
    witness_graph_small_s,
)
from .formulas import (
    ConjectureRow,
    FormulaValue,
    OeisCheck,
    ScanHit,
    beta_balanced_family,
    beta_cycle_f2,
    beta_kmn_f2,
    beta_star,
    class_order_predicate,
    conjecture_scan,
    counterexample_scan_2x5,
    nu_token_formula,
    oeis_check,
    r_value,
    s_threshold,
)
from .graphs import (
    Bipartition,
    Graph,
    GraphError,
    bipartition_of,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    erdos_renyi,
    family,
    make_graph,
    matching_graph,
    parse_edge_list_text,
    path_graph,
    star_graph,
    to_dot,
    to_edge_list_text,
)
from .independence import (
    BoundsPair,
    Budget,
    BudgetExceededError,
    IndependentSet,
    beta_via_saturation,
    brute_force_mis,
    independence_number,
    max_independent_set,
    recursive_bounds,
    token_independence_number,
    vertex_transitive_bound,
)
from .matching import (
    FractionBound,
    Matching,
    MatchingError,
    brute_force_nu,
    hall_witness,
    is_almost_perfect,
    is_perfect,
    matching_fraction_bound,
    max_matching,
    saturates,
)
from .reports import VerificationReport, reports_to_csv, reports_to_json
from .tokens import (
    ComplementMap,
    SubsetCodec,
    TokenGraph,
    complement_map,
    subset_label,
    token_bipartition,
    token_graph,
    token_graph_to_dot,
    token_graph_to_json,
    validate_token_matching,
)
from .verify import CHECKS, run_check

__version__ = "0.1.0"
