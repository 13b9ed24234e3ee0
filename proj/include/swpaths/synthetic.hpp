#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swpaths/graph.hpp"
#include "swpaths/rng.hpp"

namespace swp {

enum class WeightStyle {
    discrete,  // weights drawn from {0.25, 0.5, 1.0}
    continuous // weights drawn from U(0, 1]
};

// Connected random graph: a random recursive spanning tree plus
// `extra_edges` additional distinct edges (fewer if the graph saturates).
WeightedGraph random_connected_graph(std::size_t n, std::size_t extra_edges, WeightStyle style,
                                     CounterRng& rng);

struct BenchRow {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t distinct_weights = 0;
    double seconds_one_to_all = 0.0;    // single-source run, averaged over sources
    double seconds_labelset_fw = 0.0;   // all-pairs, label-set dynamic programming
    double seconds_parallel_sssp = 0.0; // all-pairs, per-source runs
    std::size_t max_frontier = 0;       // largest label set seen in the per-source runs
};

// Timings of the core algorithms on random connected graphs of the given
// sizes (wall-clock; not deterministic, unlike every other output).
std::vector<BenchRow> complexity_probe(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                       std::size_t workers);

} // namespace swp
