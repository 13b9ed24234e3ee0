#include "swpaths/synthetic.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "swpaths/bottleneck.hpp"

namespace swp {
namespace {

double draw_weight(WeightStyle style, CounterRng& rng) {
    if (style == WeightStyle::discrete) {
        static constexpr double kChoices[3] = {0.25, 0.5, 1.0};
        return kChoices[rng.next_below(3)];
    }
    return rng.next_unit_open_low();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

WeightedGraph random_connected_graph(std::size_t n, std::size_t extra_edges, WeightStyle style,
                                     CounterRng& rng) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    GraphBuilder builder(n);
    std::unordered_set<std::uint64_t> present;
    auto key = [n](std::size_t u, std::size_t v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * n + v;
    };
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t parent = rng.next_below(i);
        builder.add_edge(static_cast<NodeId>(parent), static_cast<NodeId>(i),
                         draw_weight(style, rng));
        present.insert(key(parent, i));
    }
    std::size_t added = 0;
    std::size_t attempts = 0;
    const std::size_t attempt_cap = 20 * extra_edges + 100;
    const std::size_t max_edges = n * (n - 1) / 2;
    while (added < extra_edges && present.size() < max_edges && attempts < attempt_cap) {
        ++attempts;
        std::size_t u = rng.next_below(n);
        std::size_t v = rng.next_below(n);
        if (u == v || present.count(key(u, v))) continue;
        builder.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), draw_weight(style, rng));
        present.insert(key(u, v));
        ++added;
    }
    return builder.build();
}

std::vector<BenchRow> complexity_probe(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                       std::size_t workers) {
    std::vector<BenchRow> rows;
    rows.reserve(sizes.size());
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        std::size_t n = sizes[idx];
        CounterRng rng(seed, idx);
        WeightedGraph g = random_connected_graph(n, 2 * n, WeightStyle::continuous, rng);
        BenchRow row;
        row.nodes = g.node_count();
        row.edges = g.edge_count();
        row.distinct_weights = distinct_weight_count(g);

        const std::size_t probes = std::min<std::size_t>(n, 8);
        auto t0 = std::chrono::steady_clock::now();
        for (std::size_t s = 0; s < probes; ++s) {
            auto r = one_to_all_bottleneck(g, static_cast<NodeId>(s));
            for (const auto& fs : r.frontiers)
                row.max_frontier = std::max(row.max_frontier, fs.count());
        }
        row.seconds_one_to_all = seconds_since(t0) / static_cast<double>(probes);

        t0 = std::chrono::steady_clock::now();
        auto fw = all_pairs_bottleneck(g, AllPairsStrategy::labelset_fw, workers);
        row.seconds_labelset_fw = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto ps = all_pairs_bottleneck(g, AllPairsStrategy::parallel_sssp, workers);
        row.seconds_parallel_sssp = seconds_since(t0);
        if (fw.dist != ps.dist)
            throw std::runtime_error("strategy disagreement during benchmark");
        rows.push_back(row);
    }
    return rows;
}

} // namespace swp
