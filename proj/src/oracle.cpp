#include "swpaths/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace swp {
namespace {

void check_endpoint(const WeightedGraph& g, NodeId v, const char* what) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.node_count())
        throw std::invalid_argument(std::string(what) + " node out of range");
}

struct PathCosts {
    double hops;
    double sum;
    double width; // max edge weight; 0 for the zero-length path
};

PathCosts path_costs(const WeightedGraph& g, const std::vector<NodeId>& path) {
    PathCosts c{static_cast<double>(path.size() - 1), 0.0, 0.0};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        double w = *g.edge_weight(path[i], path[i + 1]);
        c.sum += w;
        c.width = std::max(c.width, w);
    }
    return c;
}

} // namespace

std::vector<std::vector<NodeId>> enumerate_simple_paths(const WeightedGraph& g,
                                                        NodeId source, NodeId target,
                                                        std::size_t max_nodes) {
    check_endpoint(g, source, "source");
    check_endpoint(g, target, "target");
    if (g.node_count() > max_nodes)
        throw std::invalid_argument("graph too large for exhaustive path enumeration (" +
                                    std::to_string(g.node_count()) + " nodes, limit " +
                                    std::to_string(max_nodes) + ")");

    std::vector<std::vector<NodeId>> paths;
    if (source == target) {
        paths.push_back({source});
        return paths;
    }

    std::vector<char> on_path(g.node_count(), 0);
    std::vector<NodeId> stack{source};
    on_path[static_cast<std::size_t>(source)] = 1;

    // Explicit DFS over extension indices to keep recursion depth bounded.
    std::vector<std::size_t> next_edge{0};
    while (!stack.empty()) {
        NodeId u = stack.back();
        auto nbrs = g.neighbors(u);
        std::size_t& idx = next_edge.back();
        bool advanced = false;
        while (idx < nbrs.size()) {
            NodeId v = nbrs[idx++].node;
            if (on_path[static_cast<std::size_t>(v)]) continue;
            if (v == target) {
                auto path = stack;
                path.push_back(target);
                paths.push_back(std::move(path));
                continue;
            }
            stack.push_back(v);
            on_path[static_cast<std::size_t>(v)] = 1;
            next_edge.push_back(0);
            advanced = true;
            break;
        }
        if (!advanced) {
            on_path[static_cast<std::size_t>(u)] = 0;
            stack.pop_back();
            next_edge.pop_back();
        }
    }
    return paths;
}

OracleResult oracle_distances(const WeightedGraph& g, NodeId source, NodeId target,
                              std::size_t max_nodes) {
    auto paths = enumerate_simple_paths(g, source, target, max_nodes);

    OracleResult r;
    r.s = source;
    r.t = target;
    r.simple_path_count = paths.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (paths.empty()) {
        r.geodesic = r.weighted = r.bottleneck = r.minimax_width = inf;
        return r;
    }

    double best_hops = inf, best_sum = inf, best_prod = inf, best_width = inf;
    std::vector<PathCosts> costs;
    costs.reserve(paths.size());
    for (const auto& p : paths) {
        PathCosts c = path_costs(g, p);
        costs.push_back(c);
        best_hops = std::min(best_hops, c.hops);
        best_sum = std::min(best_sum, c.sum);
        best_prod = std::min(best_prod, c.hops * c.width);
        best_width = std::min(best_width, c.width);
    }
    r.geodesic = best_hops;
    r.weighted = best_sum;
    r.bottleneck = best_prod;
    r.minimax_width = best_width;

    for (std::size_t i = 0; i < paths.size(); ++i) {
        const PathCosts& c = costs[i];
        if (c.hops == best_hops) r.geodesic_paths.push_back(paths[i]);
        if (c.sum == best_sum) r.weighted_paths.push_back(paths[i]);
        if (c.hops * c.width == best_prod) r.bottleneck_paths.push_back(paths[i]);
        if (c.width == best_width) r.minimax_width_paths.push_back(paths[i]);
    }
    return r;
}

} // namespace swp
