"""Short-and-wide path analytics.

Graph distances that are simultaneously short (few hops) and wide
(small maximum edge weight), plus the statistical and
information-theoretic tooling built on top of them.
"""

from ._core import (
    Graph,
    bottleneck_distances,
    bottleneck_labels,
    bottleneck_path,
    consensus_time_bound,
    distance_matrices,
    effective_diameter,
    fit_gamma,
    gap_junction_capacity,
    load_edge_list,
    mixture_entropy_bits,
    oracle_distances,
    parse_edge_list,
    quantile,
    sample_degree_matched,
    sample_er,
    serialize_edge_list,
    survival,
    thermal_noise_rms,
    verify_hub_and_spoke,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "bottleneck_distances",
    "bottleneck_labels",
    "bottleneck_path",
    "consensus_time_bound",
    "distance_matrices",
    "effective_diameter",
    "fit_gamma",
    "gap_junction_capacity",
    "load_edge_list",
    "mixture_entropy_bits",
    "oracle_distances",
    "parse_edge_list",
    "quantile",
    "sample_degree_matched",
    "sample_er",
    "serialize_edge_list",
    "survival",
    "thermal_noise_rms",
    "verify_hub_and_spoke",
]
