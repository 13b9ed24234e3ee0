#include "swpaths/bottleneck.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace swp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ArenaLabel {
    NodeId node;
    std::int32_t hops;
    double width;
    double product;
    std::int32_t parent; // arena id, -1 for the source label
};

// Frontier insertion. Ids in `frontier` are sorted by width ascending with
// hops strictly decreasing. Returns the candidate's arena id if it was
// non-dominated (and prunes anything it dominates), or -1 if rejected.
// Exact duplicates keep the incumbent, so the first-seen predecessor wins.
std::int32_t try_insert(std::vector<std::int32_t>& frontier, std::vector<ArenaLabel>& arena,
                        NodeId node, std::int32_t hops, double width, std::int32_t parent) {
    const auto label_width = [&](std::int32_t id) { return arena[static_cast<std::size_t>(id)].width; };
    const auto label_hops = [&](std::int32_t id) { return arena[static_cast<std::size_t>(id)].hops; };

    std::size_t lower = 0;
    while (lower < frontier.size() && label_width(frontier[lower]) < width) ++lower;

    if (lower > 0 && label_hops(frontier[lower - 1]) <= hops) {
        return -1; // dominated by a narrower-or-equal, no-worse-hops label
    }
    if (lower < frontier.size() && label_width(frontier[lower]) == width &&
        label_hops(frontier[lower]) <= hops) {
        return -1; // equal width, incumbent no worse
    }
    std::size_t last = lower;
    while (last < frontier.size() && label_hops(frontier[last]) >= hops) ++last;

    const auto id = static_cast<std::int32_t>(arena.size());
    arena.push_back({node, hops, width, static_cast<double>(hops) * width, parent});
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(lower),
                   frontier.begin() + static_cast<std::ptrdiff_t>(last));
    frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(lower), id);
    return id;
}

} // namespace

OneToAllResult one_to_all_bottleneck(const WeightedGraph& g, NodeId source) {
    if (!g.has_node(source)) {
        throw std::invalid_argument("one_to_all_bottleneck: invalid source id " +
                                    std::to_string(source));
    }
    const std::size_t n = g.node_count();
    std::vector<ArenaLabel> arena;
    std::vector<std::vector<std::int32_t>> frontier(n);

    // Min-heap over (product, node, creation order): settle the cheapest
    // unexpanded label each iteration.
    using Entry = std::tuple<double, NodeId, std::int32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;

    arena.push_back({source, 0, 0.0, 0.0, -1});
    frontier[static_cast<std::size_t>(source)].push_back(0);
    queue.emplace(0.0, source, 0);

    while (!queue.empty()) {
        const auto [product, i, id] = queue.top();
        queue.pop();
        const auto& fi = frontier[static_cast<std::size_t>(i)];
        if (std::find(fi.begin(), fi.end(), id) == fi.end()) {
            continue; // pruned since it was queued
        }
        const std::int32_t hops = arena[static_cast<std::size_t>(id)].hops;
        const double width = arena[static_cast<std::size_t>(id)].width;
        for (const auto& nb : g.neighbors(i)) {
            const std::int32_t new_id =
                try_insert(frontier[static_cast<std::size_t>(nb.node)], arena, nb.node,
                           hops + 1, std::max(width, nb.weight), id);
            if (new_id >= 0) {
                queue.emplace(arena[static_cast<std::size_t>(new_id)].product, nb.node, new_id);
            }
        }
    }

    // Expanded labels are never pruned afterwards, so every parent of a
    // surviving label sits in its node's final frontier; remap arena ids to
    // final frontier indices for path walking.
    std::vector<std::int32_t> final_index(arena.size(), -1);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < frontier[v].size(); ++k) {
            final_index[static_cast<std::size_t>(frontier[v][k])] = static_cast<std::int32_t>(k);
        }
    }

    OneToAllResult result;
    result.source = source;
    result.frontiers.resize(n);
    result.distance.assign(n, kInf);
    for (std::size_t v = 0; v < n; ++v) {
        auto& set = result.frontiers[v];
        set.labels.reserve(frontier[v].size());
        for (const std::int32_t id : frontier[v]) {
            const ArenaLabel& a = arena[static_cast<std::size_t>(id)];
            Label l;
            l.hops = a.hops;
            l.max_width = a.width;
            l.product = a.product;
            if (a.parent >= 0) {
                const ArenaLabel& p = arena[static_cast<std::size_t>(a.parent)];
                l.pred = p.node;
                l.pred_label = final_index[static_cast<std::size_t>(a.parent)];
                if (l.pred_label < 0) {
                    throw std::logic_error("internal: expanded label missing from final frontier");
                }
            }
            set.labels.push_back(l);
            result.distance[v] = std::min(result.distance[v], l.product);
        }
    }
    return result;
}

std::vector<NodeId> reconstruct_path(const OneToAllResult& r, NodeId target) {
    if (target < 0 || static_cast<std::size_t>(target) >= r.frontiers.size()) {
        throw std::invalid_argument("reconstruct_path: invalid target id " +
                                    std::to_string(target));
    }
    const LabelSet& set = r.frontiers[static_cast<std::size_t>(target)];
    if (set.empty()) {
        throw std::runtime_error("reconstruct_path: target " + std::to_string(target) +
                                 " unreachable from source " + std::to_string(r.source));
    }
    // Cheapest label, ties toward fewer hops.
    std::size_t best = 0;
    for (std::size_t k = 1; k < set.labels.size(); ++k) {
        const Label& l = set.labels[k];
        const Label& b = set.labels[best];
        if (l.product < b.product || (l.product == b.product && l.hops < b.hops)) {
            best = k;
        }
    }
    std::vector<NodeId> path;
    NodeId node = target;
    std::int32_t idx = static_cast<std::int32_t>(best);
    for (;;) {
        path.push_back(node);
        const Label& l = r.frontiers[static_cast<std::size_t>(node)].labels[static_cast<std::size_t>(idx)];
        if (l.pred < 0) break;
        node = l.pred;
        idx = l.pred_label;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t AllPairsResult::tri_index(std::size_t n, std::size_t i, std::size_t j) {
    // i < j required
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const std::vector<PairLabel>& AllPairsResult::labels_at(NodeId i, NodeId j) const {
    std::size_t a = static_cast<std::size_t>(i);
    std::size_t b = static_cast<std::size_t>(j);
    if (a == b) {
        throw std::invalid_argument("labels_at: diagonal pair has no label set");
    }
    if (a > b) std::swap(a, b);
    return tri_labels[tri_index(n, a, b)];
}

std::vector<PairLabel> node_insertion(std::span<const PairLabel> via_left,
                                      std::span<const PairLabel> via_right) {
    std::vector<PairLabel> out;
    std::ptrdiff_t p = static_cast<std::ptrdiff_t>(via_left.size()) - 1;
    std::ptrdiff_t q = static_cast<std::ptrdiff_t>(via_right.size()) - 1;
    // Walk both frontiers from the wide end; each step emits the best
    // combination whose width is the current maximum, so emitted widths
    // strictly decrease.
    while (p >= 0 && q >= 0) {
        const PairLabel& a = via_left[static_cast<std::size_t>(p)];
        const PairLabel& b = via_right[static_cast<std::size_t>(q)];
        out.push_back({a.hops + b.hops, std::max(a.width, b.width)});
        if (a.width == b.width) {
            --p;
            --q;
        } else if (a.width > b.width) {
            --p;
        } else {
            --q;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<PairLabel> maximize_labels(std::span<const PairLabel> current,
                                       std::span<const PairLabel> candidates) {
    std::vector<PairLabel> out;
    std::int32_t best_hops = std::numeric_limits<std::int32_t>::max();
    const auto take = [&](const PairLabel& l) {
        if (l.hops < best_hops) {
            out.push_back(l);
            best_hops = l.hops;
        }
    };
    std::size_t p = 0, q = 0;
    while (p < current.size() && q < candidates.size()) {
        const PairLabel& a = current[p];
        const PairLabel& b = candidates[q];
        if (a.width < b.width) {
            take(a);
            ++p;
        } else if (a.width > b.width) {
            take(b);
            ++q;
        } else {
            // Equal width: only the fewer-hops one can survive; ties keep
            // the established label.
            take(a.hops <= b.hops ? a : b);
            ++p;
            ++q;
        }
    }
    for (; p < current.size(); ++p) take(current[p]);
    for (; q < candidates.size(); ++q) take(candidates[q]);
    return out;
}

namespace {

AllPairsResult all_pairs_labelset_fw(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<PairLabel>> table(n * n);
    for (const auto& e : g.edges()) {
        const std::size_t u = static_cast<std::size_t>(e.u);
        const std::size_t v = static_cast<std::size_t>(e.v);
        table[u * n + v] = {{1, e.weight}};
        table[v * n + u] = {{1, e.weight}};
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const auto& left = table[i * n + k];
            if (left.empty()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k || j == i) continue;
                const auto& right = table[k * n + j];
                if (right.empty()) continue;
                const auto candidates = node_insertion(left, right);
                table[i * n + j] = maximize_labels(table[i * n + j], candidates);
            }
        }
    }

    AllPairsResult r;
    r.n = n;
    r.dist.assign(n * n, kInf);
    r.tri_labels.resize(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        r.dist[i * n + i] = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double best = kInf;
            for (const auto& l : table[i * n + j]) best = std::min(best, l.product());
            r.dist[i * n + j] = best;
            if (i < j) r.tri_labels[AllPairsResult::tri_index(n, i, j)] = std::move(table[i * n + j]);
        }
    }
    return r;
}

AllPairsResult all_pairs_parallel_sssp(const WeightedGraph& g, int workers) {
    const std::size_t n = g.node_count();
    AllPairsResult r;
    r.n = n;
    r.dist.assign(n * n, kInf);
    r.tri_labels.resize(n * (n - 1) / 2);

    const auto run_source = [&](std::size_t s) {
        const OneToAllResult one = one_to_all_bottleneck(g, static_cast<NodeId>(s));
        for (std::size_t t = 0; t < n; ++t) {
            r.dist[s * n + t] = one.distance[t];
            if (t > s) {
                auto& slot = r.tri_labels[AllPairsResult::tri_index(n, s, t)];
                slot.reserve(one.frontiers[t].count());
                for (const auto& l : one.frontiers[t].labels) {
                    slot.push_back({l.hops, l.max_width});
                }
            }
        }
        r.dist[s * n + s] = 0.0;
    };

    const std::size_t nworkers =
        std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(n, 1));
    if (nworkers <= 1) {
        for (std::size_t s = 0; s < n; ++s) run_source(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < n; s += nworkers) run_source(s);
            });
        }
        for (auto& t : pool) t.join();
    }
    return r;
}

} // namespace

AllPairsResult all_pairs_bottleneck(const WeightedGraph& g, AllPairsStrategy strategy,
                                    int workers) {
    if (strategy == AllPairsStrategy::labelset_fw) {
        return all_pairs_labelset_fw(g);
    }
    return all_pairs_parallel_sssp(g, workers);
}

} // namespace swp
