"""Colorings whose class-pair unions avoid a fixed bipartite pattern.

A proper coloring of a graph is pattern-avoiding when the union of any two
color classes induces no copy of the pattern.  The package computes and
certifies the least class count, ships the polynomial special cases, closed
forms and bounds for standard families, hardness gadget constructions, a
bipartite nestedness solver, and a random-graph experiment harness.
"""

from ._kernels import backend_name
from .bounds import (
    BoundReport,
    chi_2k2_matching,
    chi_2k2_path,
    chi_2k2_subdivided_star,
    cube_graph,
    cube_lower_bound,
    edge_bound_lower,
    eulerian_path_coloring,
    matching_coloring,
    projective_graph,
    projective_lower_bound,
    prop5_upper,
    subdivided_star_graph,
)
from .graph import (
    CapExceeded,
    Graph,
    GraphError,
    chromatic_number,
    complement,
    complete_bipartite,
    complete_graph,
    contains_induced,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    graph_to_edgelist,
    independence_number,
    induced_subgraph,
    matching_graph,
    maximal_independent_sets,
    parse_graph,
    path_graph,
    proper_coloring,
)
from .nestedness import (
    BipartiteInstance,
    NestednessResult,
    bipartite_from_matrix,
    conflict_graph,
    is_fully_nested,
    nestedness_number,
)
from .pattern import (
    PATTERN_TOKENS,
    PatternGraph,
    compute_k1_k2,
    make_pattern,
    pair_is_H_free,
    pattern_from_token,
)
from .polyalgs import (
    chi_p3_via_closure,
    decide_2k2_at_most_3,
    decide_p3_at_most_3,
    k2k1_coloring,
    p3_closure,
)
from .randexp import (
    ExperimentRow,
    SplitMix64,
    complex_count_lower_bound_check,
    complex_probability_bound,
    q_two_k2,
    random_report,
    report_to_csv,
    sample_gnp,
)
from .reductions import (
    Hypergraph3,
    hypergraph3,
    hypergraph_2colorable,
    lift_coloring_p4,
    parse_hypergraph,
    reduce_to_p3,
    reduce_to_p4,
)
from .solver import (
    Coloring,
    NoAvoidingColoring,
    SolveResult,
    brute_force_chi_H,
    brute_force_optimal_partitions,
    chi_H,
    decide_chi_H,
    is_avoiding_coloring,
    make_coloring,
)

__version__ = "1.0.0"

__all__ = [
    "BipartiteInstance",
    "BoundReport",
    "CapExceeded",
    "Coloring",
    "ExperimentRow",
    "Graph",
    "GraphError",
    "Hypergraph3",
    "NestednessResult",
    "NoAvoidingColoring",
    "PATTERN_TOKENS",
    "PatternGraph",
    "SolveResult",
    "SplitMix64",
    "backend_name",
    "bipartite_from_matrix",
    "brute_force_chi_H",
    "brute_force_optimal_partitions",
    "chi_2k2_matching",
    "chi_2k2_path",
    "chi_2k2_subdivided_star",
    "chi_H",
    "chi_p3_via_closure",
    "chromatic_number",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "complex_count_lower_bound_check",
    "complex_probability_bound",
    "compute_k1_k2",
    "conflict_graph",
    "contains_induced",
    "cube_graph",
    "cube_lower_bound",
    "cycle_graph",
    "decide_2k2_at_most_3",
    "decide_chi_H",
    "decide_p3_at_most_3",
    "edge_bound_lower",
    "empty_graph",
    "eulerian_path_coloring",
    "graph_from_edges",
    "graph_to_edgelist",
    "hypergraph3",
    "hypergraph_2colorable",
    "independence_number",
    "induced_subgraph",
    "is_avoiding_coloring",
    "is_fully_nested",
    "k2k1_coloring",
    "lift_coloring_p4",
    "make_coloring",
    "make_pattern",
    "matching_coloring",
    "matching_graph",
    "maximal_independent_sets",
    "nestedness_number",
    "p3_closure",
    "pair_is_H_free",
    "parse_graph",
    "parse_hypergraph",
    "path_graph",
    "pattern_from_token",
    "projective_graph",
    "projective_lower_bound",
    "prop5_upper",
    "proper_coloring",
    "q_two_k2",
    "random_report",
    "reduce_to_p3",
    "reduce_to_p4",
    "report_to_csv",
    "sample_gnp",
    "subdivided_star_graph",
]
