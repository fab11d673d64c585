"""Lights Out solvability on uniform random unlabeled graphs.

GF(2) linear algebra decides universal solvability; Dixon-Wilf sampling
draws unlabeled graphs uniformly; exact Burnside censuses cover small n and
reproducible Monte Carlo covers the rest.
"""

from .counts import GraphCountTable, compute_gn, embedded_table, graph_count
from .errors import (Graph6ParseError, InternalInvariantError, LightsOutError,
                     UnsupportedSizeError)
from .exact import (ExactCountRow, brute_force_universally_solvable,
                    enumerate_fixed_graphs, exact_counts)
from .gf2 import Gf2Matrix, Gf2Vector, is_invertible, rank, solve
from .graph6 import parse_graph6, write_graph6
from .graphs import (Configuration, Graph, Permutation, apply_permutation,
                     canonical_form, is_connected, is_universally_solvable,
                     neighborhood_matrix, solve_configuration)
from .montecarlo import (EstimateRequest, EstimateResult, margin_of_error,
                         run_estimate)
from .partitions import (ClassWeight, Partition, class_weight, euler_phi,
                         partition_stream, partitions_no_ones,
                         representative_permutation)
from .rng import TrialStream, uniform_below
from .sampling import (PairOrbits, pair_orbits, sample_fixed_graph,
                       sample_uniform_connected_graph, sample_uniform_graph,
                       select_partition)

__version__ = "0.1.0"

__all__ = [
    "Configuration", "ClassWeight", "EstimateRequest", "EstimateResult",
    "ExactCountRow", "Gf2Matrix", "Gf2Vector", "Graph", "Graph6ParseError",
    "GraphCountTable", "InternalInvariantError", "LightsOutError",
    "PairOrbits", "Partition", "Permutation", "TrialStream",
    "UnsupportedSizeError", "apply_permutation",
    "brute_force_universally_solvable", "canonical_form", "class_weight",
    "compute_gn", "embedded_table", "enumerate_fixed_graphs", "euler_phi",
    "exact_counts", "graph_count", "is_connected", "is_invertible",
    "is_universally_solvable", "margin_of_error", "neighborhood_matrix",
    "pair_orbits", "parse_graph6", "partition_stream", "partitions_no_ones",
    "rank", "representative_permutation", "run_estimate",
    "sample_fixed_graph", "sample_uniform_connected_graph",
    "sample_uniform_graph", "select_partition", "solve",
    "solve_configuration", "uniform_below", "write_graph6",
]
