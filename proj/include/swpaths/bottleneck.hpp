#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swpaths/graph.hpp"
#include "swpaths/labels.hpp"

namespace swp {

// Result of one label-correcting run from a single source. Each node keeps
// its full non-dominated frontier; pred/pred_label fields of the labels
// index into the *final* frontiers, so paths can be walked back after the
// run completes.
struct OneToAllResult {
    NodeId source = -1;
    std::vector<LabelSet> frontiers;
    std::vector<double> distance; // min product per node, +inf if unreachable

    bool reachable(NodeId t) const {
        return !frontiers.at(static_cast<std::size_t>(t)).empty();
    }
};

OneToAllResult one_to_all_bottleneck(const WeightedGraph& g, NodeId source);

// Simple source-to-target path attaining distance[t]; throws if t is
// unreachable or invalid.
std::vector<NodeId> reconstruct_path(const OneToAllResult& r, NodeId target);

enum class AllPairsStrategy { labelset_fw, parallel_sssp };

struct PairLabel {
    std::int32_t hops;
    double width;

    double product() const { return static_cast<double>(hops) * width; }
    friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

struct AllPairsResult {
    std::size_t n = 0;
    std::vector<double> dist; // n*n row-major, zero diagonal, +inf unreachable
    std::vector<std::vector<PairLabel>> tri_labels; // upper triangle, i<j

    double at(NodeId i, NodeId j) const {
        return dist[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
    }
    const std::vector<PairLabel>& labels_at(NodeId i, NodeId j) const;

    static std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j);
};

// Both strategies compute identical results; parallel_sssp is the fast
// path (independent sources), labelset_fw is the label-set dynamic
// program over pivots, kept for cross-validation.
AllPairsResult all_pairs_bottleneck(const WeightedGraph& g,
                                    AllPairsStrategy strategy = AllPairsStrategy::parallel_sssp,
                                    int workers = 1);

// Label-set pieces of the pivot recurrence, exposed for direct testing.
// Inputs must be frontier-sorted (width ascending).
std::vector<PairLabel> node_insertion(std::span<const PairLabel> via_left,
                                      std::span<const PairLabel> via_right);
std::vector<PairLabel> maximize_labels(std::span<const PairLabel> current,
                                       std::span<const PairLabel> candidates);

} // namespace swp
