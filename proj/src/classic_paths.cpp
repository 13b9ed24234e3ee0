#include "swpaths/classic_paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace swp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(const WeightedGraph& g, NodeId s, const char* op) {
    if (!g.has_node(s)) {
        throw std::invalid_argument(std::string(op) + ": invalid source id " + std::to_string(s));
    }
}

} // namespace

std::vector<double> geodesic_all(const WeightedGraph& g, NodeId source) {
    check_source(g, source, "geodesic_all");
    std::vector<double> dist(g.node_count(), kInf);
    std::deque<NodeId> queue;
    dist[static_cast<std::size_t>(source)] = 0.0;
    queue.push_back(source);
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        const double d = dist[static_cast<std::size_t>(v)];
        for (const auto& nb : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(nb.node)] == kInf) {
                dist[static_cast<std::size_t>(nb.node)] = d + 1.0;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

std::vector<double> weighted_all(const WeightedGraph& g, NodeId source) {
    check_source(g, source, "weighted_all");
    std::vector<double> dist(g.node_count(), kInf);
    std::vector<char> settled(g.node_count(), 0);
    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    dist[static_cast<std::size_t>(source)] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (settled[static_cast<std::size_t>(v)]) continue;
        settled[static_cast<std::size_t>(v)] = 1;
        for (const auto& nb : g.neighbors(v)) {
            const double cand = d + nb.weight;
            if (cand < dist[static_cast<std::size_t>(nb.node)]) {
                dist[static_cast<std::size_t>(nb.node)] = cand;
                queue.emplace(cand, nb.node);
            }
        }
    }
    return dist;
}

std::vector<double> minimax_width_all(const WeightedGraph& g, NodeId source) {
    check_source(g, source, "minimax_width_all");
    const std::size_t n = g.node_count();
    std::vector<double> width(n, kInf);
    std::vector<std::int64_t> hops(n, std::numeric_limits<std::int64_t>::max());
    std::vector<char> settled(n, 0);
    // Relaxation takes the max along the path; pops ordered by (width,
    // hops) so ties resolve toward fewer hops deterministically.
    using Entry = std::tuple<double, std::int64_t, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    width[static_cast<std::size_t>(source)] = 0.0;
    hops[static_cast<std::size_t>(source)] = 0;
    queue.emplace(0.0, 0, source);
    while (!queue.empty()) {
        const auto [w, h, v] = queue.top();
        queue.pop();
        if (settled[static_cast<std::size_t>(v)]) continue;
        settled[static_cast<std::size_t>(v)] = 1;
        for (const auto& nb : g.neighbors(v)) {
            const std::size_t u = static_cast<std::size_t>(nb.node);
            const double cand = std::max(w, nb.weight);
            if (cand < width[u] || (cand == width[u] && h + 1 < hops[u])) {
                width[u] = cand;
                hops[u] = h + 1;
                queue.emplace(cand, h + 1, nb.node);
            }
        }
    }
    // The source's own minimax width is 0 by the empty-path convention.
    return width;
}

} // namespace swp
