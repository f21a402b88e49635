"""Recognition of (k,l)-sparse graphs with violating-set certificates."""

from .graph import (
    Certificate,
    ContractError,
    Graph,
    InputError,
    ParameterError,
    SparsityParams,
    format_edge_list,
    induced_edge_count,
    make_certificate,
    parse_edge_list,
    sparsity_bound,
    validate_input,
    verify_certificate,
)
from .flow import CirculationNetwork, FlowNetwork, feasible_circulation, max_flow
from .orient import Orientation, bounded_orientation, orient_from_forests, reorient_to_source
from .rooted import RootedDigraph, rooted_violation
from .forests import ForestDecomposition, forest_decomposition, violating_set_from_failed_decomposition
from .recognize import (
    RecognitionResult,
    certificate_json,
    check_sparsity,
    check_sparsity_high,
    check_sparsity_low,
    check_sparsity_mid,
    check_superset_sparsity,
    saturated_violation,
)
from .oracles import GenSpec, brute_force_check, generate, pebble_game_check

__all__ = [
    "Certificate",
    "CirculationNetwork",
    "ContractError",
    "FlowNetwork",
    "ForestDecomposition",
    "GenSpec",
    "Graph",
    "InputError",
    "Orientation",
    "ParameterError",
    "RecognitionResult",
    "RootedDigraph",
    "SparsityParams",
    "bounded_orientation",
    "brute_force_check",
    "certificate_json",
    "check_sparsity",
    "check_sparsity_high",
    "check_sparsity_low",
    "check_sparsity_mid",
    "check_superset_sparsity",
    "feasible_circulation",
    "forest_decomposition",
    "format_edge_list",
    "generate",
    "induced_edge_count",
    "make_certificate",
    "max_flow",
    "orient_from_forests",
    "parse_edge_list",
    "pebble_game_check",
    "reorient_to_source",
    "rooted_violation",
    "saturated_violation",
    "sparsity_bound",
    "validate_input",
    "verify_certificate",
    "violating_set_from_failed_decomposition",
]
