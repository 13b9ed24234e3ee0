#include "swpaths/labels.hpp"

#include <algorithm>

namespace swp {

Domination dominates(const Label& a, const Label& b) {
    if (a.hops < b.hops && a.max_width < b.max_width) return Domination::strict;
    if (a.hops < b.hops && a.max_width == b.max_width) return Domination::weak;
    if (a.hops == b.hops && a.max_width < b.max_width) return Domination::weak;
    return Domination::none;
}

LabelSet consolidate(std::span<const Label> candidates) {
    std::vector<Label> sorted(candidates.begin(), candidates.end());
    // Stable on (max_width, hops) so the first-seen predecessor survives a
    // duplicate merge.
    std::stable_sort(sorted.begin(), sorted.end(), [](const Label& a, const Label& b) {
        if (a.max_width != b.max_width) return a.max_width < b.max_width;
        return a.hops < b.hops;
    });
    LabelSet out;
    std::int32_t best_hops = std::numeric_limits<std::int32_t>::max();
    for (const auto& l : sorted) {
        // Ascending width scan: a label survives only if it strictly
        // improves on the fewest hops seen so far.
        if (l.hops < best_hops) {
            out.labels.push_back(l);
            best_hops = l.hops;
        }
    }
    return out;
}

bool is_frontier(const LabelSet& set) {
    for (std::size_t i = 0; i + 1 < set.labels.size(); ++i) {
        const Label& a = set.labels[i];
        const Label& b = set.labels[i + 1];
        if (!(a.max_width < b.max_width)) return false;
        if (!(a.hops > b.hops)) return false;
    }
    for (const auto& l : set.labels) {
        if (l.product != static_cast<double>(l.hops) * l.max_width) return false;
    }
    return true;
}

} // namespace swp
