#pragma once

#include <cstddef>
#include <vector>

#include "swpaths/graph.hpp"

namespace swp {

// Ground truth by exhaustive enumeration of simple paths; factorial in the
// worst case, so guarded to small graphs. Test oracle, not a fast path.

inline constexpr std::size_t kDefaultOracleNodeGuard = 14;

// Every simple source-to-target path, each as a node sequence. For
// source == target the single zero-length path {source} is returned.
std::vector<std::vector<NodeId>> enumerate_simple_paths(
    const WeightedGraph& g, NodeId source, NodeId target,
    std::size_t max_nodes = kDefaultOracleNodeGuard);

struct OracleResult {
    NodeId s = -1;
    NodeId t = -1;
    double geodesic = 0.0;
    double weighted = 0.0;
    double bottleneck = 0.0;
    double minimax_width = 0.0;
    std::vector<std::vector<NodeId>> geodesic_paths;
    std::vector<std::vector<NodeId>> weighted_paths;
    std::vector<std::vector<NodeId>> bottleneck_paths;
    std::vector<std::vector<NodeId>> minimax_width_paths;
    std::size_t simple_path_count = 0;
};

// All four distance notions evaluated literally over the enumerated
// paths; +inf everywhere when no path exists.
OracleResult oracle_distances(const WeightedGraph& g, NodeId source, NodeId target,
                              std::size_t max_nodes = kDefaultOracleNodeGuard);

} // namespace swp
