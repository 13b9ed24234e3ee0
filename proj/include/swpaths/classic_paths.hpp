#pragma once

#include <vector>

#include "swpaths/graph.hpp"

namespace swp {

// Classical single-source distances used as comparison baselines. All
// return one value per node, +inf for unreachable nodes.

// Hop counts, ignoring weights.
std::vector<double> geodesic_all(const WeightedGraph& g, NodeId source);

// Minimum total edge weight.
std::vector<double> weighted_all(const WeightedGraph& g, NodeId source);

// Minimum over paths of the maximum edge weight (widest-path value,
// ignoring path length).
std::vector<double> minimax_width_all(const WeightedGraph& g, NodeId source);

struct DistanceRecord {
    NodeId s = -1;
    NodeId t = -1;
    double geodesic = 0.0;
    double weighted = 0.0;
    double bottleneck = 0.0;
    double minimax_width = 0.0;
};

} // namespace swp
