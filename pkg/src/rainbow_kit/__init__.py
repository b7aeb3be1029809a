"""Rainbow cycles in edge-colored graphs: exact search, a constructive finder,
separation statistics, generators and an annealing probe."""
from .constructions import (balanced_rainbow_bipartite, boost_min_color_degree, random_colored_graph,
                            rainbow_complete_bipartite)
from .ecgio import EcgFormatError, dumps, loads, read_ecg, write_ecg
from .finder import FinderTrace, find_rainbow_cycle
from .graph import (EdgeColoredGraph, GraphError, RainbowWitness, WitnessError, build_graph, color_degree,
                    color_stats, induced_subgraph, min_color_degree, replication, unique_neighborhood)
from .minimality import check_no_mono_3path, edge_minimal_reduce, is_edge_minimal
from .probe import ProbeConfig, ProbeState, probe_counterexample, run_chain
from .search import (LayeredReach, close_cycle_from_reach, count_rainbow_cycles, find_rainbow_cycle_exact,
                     layered_reach)
from .separation import (PreconditionError, SeparationReport, build_digraph_D, build_digraph_F,
                         check_averaging_bound, check_maxdeg_bound, check_sigma_cap,
                         check_triangle_reach_bound, rho, separating_colors, separation_report, sigma)
from .verify import run_property_suite, verify_delta_bound, verify_theorem_small

__version__ = "0.1.0"

__all__ = [
    "EcgFormatError", "EdgeColoredGraph", "FinderTrace", "GraphError", "LayeredReach",
    "PreconditionError", "ProbeConfig", "ProbeState", "RainbowWitness", "SeparationReport",
    "WitnessError", "balanced_rainbow_bipartite", "boost_min_color_degree", "build_digraph_D",
    "build_digraph_F", "build_graph", "check_averaging_bound", "check_maxdeg_bound",
    "check_no_mono_3path", "check_sigma_cap", "check_triangle_reach_bound",
    "close_cycle_from_reach", "color_degree", "color_stats", "count_rainbow_cycles", "dumps",
    "edge_minimal_reduce", "find_rainbow_cycle", "find_rainbow_cycle_exact", "induced_subgraph",
    "is_edge_minimal", "layered_reach", "loads", "min_color_degree", "probe_counterexample",
    "rainbow_complete_bipartite", "random_colored_graph", "read_ecg", "replication", "rho",
    "run_chain", "run_property_suite", "separating_colors", "separation_report", "sigma",
    "unique_neighborhood", "verify_delta_bound", "verify_theorem_small", "write_ecg",
]
