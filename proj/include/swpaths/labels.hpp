#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "swpaths/graph.hpp"

namespace swp {

// One Pareto label: a path class reaching some node in `hops` edges whose
// largest edge weight is `max_width`. The bottleneck cost of the class is
// the product of the two.
struct Label {
    std::int32_t hops = 0;
    double max_width = 0.0;
    double product = 0.0;            // hops * max_width
    NodeId pred = -1;                // predecessor node, -1 for a source label
    std::int32_t pred_label = -1;    // index into the predecessor's label set

    static Label source() { return Label{}; }

    static Label make(std::int32_t hops, double max_width, NodeId pred = -1,
                      std::int32_t pred_label = -1) {
        return Label{hops, max_width, static_cast<double>(hops) * max_width, pred, pred_label};
    }
};

enum class Domination {
    strict, // better in both criteria
    weak,   // better in one, equal in the other
    none,   // incomparable or equal
};

// Does `a` dominate `b`?
Domination dominates(const Label& a, const Label& b);

// Pareto frontier of labels at one node: sorted ascending by max_width,
// hops strictly decreasing, no duplicate (hops, max_width) pairs.
struct LabelSet {
    std::vector<Label> labels;

    std::size_t count() const { return labels.size(); }
    bool empty() const { return labels.empty(); }

    // Min product over the set; the bottleneck distance this set encodes.
    double best_product() const {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& l : labels) best = std::min(best, l.product);
        return best;
    }
};

// Drop every dominated candidate and merge exact (hops, max_width)
// duplicates keeping the first-seen predecessor.
LabelSet consolidate(std::span<const Label> candidates);

// Frontier well-formedness, used by tests and internal assertions.
bool is_frontier(const LabelSet& set);

} // namespace swp
