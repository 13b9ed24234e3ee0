#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "swpaths/graph.hpp"
#include "swpaths/oracle.hpp"

using namespace swp;

namespace {

const char* kTriangle = "a b 5\na c 1\nc b 1\n";
const char* kSubstructure = "s x 3\ns a 1\na x 1\nx t 3\n";

// Independent recursive count of simple paths, no enumeration shared with
// the implementation under test.
std::size_t count_paths(const WeightedGraph& g, NodeId u, NodeId t, std::vector<char>& used) {
    if (u == t) return 1;
    used[static_cast<std::size_t>(u)] = 1;
    std::size_t total = 0;
    for (const auto& nb : g.neighbors(u))
        if (!used[static_cast<std::size_t>(nb.node)]) total += count_paths(g, nb.node, t, used);
    used[static_cast<std::size_t>(u)] = 0;
    return total;
}

} // namespace

TEST_CASE("triangle has two simple paths between adjacent nodes") {
    auto g = parse_edge_list(kTriangle, WeightMode::weights);
    auto paths = enumerate_simple_paths(g, *g.find("a"), *g.find("b"));
    REQUIRE(paths.size() == 2);
    std::set<std::size_t> lengths;
    for (const auto& p : paths) lengths.insert(p.size());
    CHECK(lengths == std::set<std::size_t>{2, 3});
}

TEST_CASE("K4 has five simple paths between any adjacent pair") {
    auto g = parse_edge_list("a b 1\na c 1\na d 1\nb c 1\nb d 1\nc d 1\n", WeightMode::weights);
    auto paths = enumerate_simple_paths(g, *g.find("a"), *g.find("b"));
    CHECK(paths.size() == 5);
    // Each path visits distinct nodes and uses real edges.
    for (const auto& p : paths) {
        std::set<NodeId> seen(p.begin(), p.end());
        CHECK(seen.size() == p.size());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
    }
}

TEST_CASE("disconnected pair yields no paths and infinite distances") {
    auto g = parse_edge_list("a b 1\nc d 1\n", WeightMode::weights);
    auto paths = enumerate_simple_paths(g, *g.find("a"), *g.find("c"));
    CHECK(paths.empty());
    auto r = oracle_distances(g, *g.find("a"), *g.find("c"));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(r.geodesic == inf);
    CHECK(r.weighted == inf);
    CHECK(r.bottleneck == inf);
    CHECK(r.minimax_width == inf);
    CHECK(r.simple_path_count == 0);
}

TEST_CASE("source equals target: one trivial path, all distances zero") {
    auto g = parse_edge_list(kTriangle, WeightMode::weights);
    auto r = oracle_distances(g, *g.find("a"), *g.find("a"));
    CHECK(r.simple_path_count == 1);
    CHECK(r.geodesic == 0.0);
    CHECK(r.weighted == 0.0);
    CHECK(r.bottleneck == 0.0);
    CHECK(r.minimax_width == 0.0);
}

TEST_CASE("size guard refuses large graphs but is overridable") {
    GraphBuilder b(15);
    for (NodeId i = 1; i < 15; ++i) b.add_edge(0, i, 1.0);
    auto g = b.build();
    CHECK_THROWS_AS(enumerate_simple_paths(g, 0, 1), std::invalid_argument);
    auto paths = enumerate_simple_paths(g, 0, 1, 15);
    CHECK(paths.size() == 1);
}

TEST_CASE("substructure fixture: the phenomenon the oracle must certify") {
    auto g = parse_edge_list(kSubstructure, WeightMode::weights);
    NodeId s = *g.find("s"), x = *g.find("x"), t = *g.find("t"), a = *g.find("a");

    auto sx = oracle_distances(g, s, x);
    CHECK(sx.bottleneck == 2.0); // s-a-x: 2 hops x width 1
    auto st = oracle_distances(g, s, t);
    CHECK(st.bottleneck == 6.0); // s-x-t: 2 hops x width 3
    REQUIRE(st.bottleneck_paths.size() == 1);
    CHECK(st.bottleneck_paths[0] == std::vector<NodeId>{s, x, t});
    auto sa = oracle_distances(g, s, a);
    CHECK(sa.bottleneck == 1.0);
    // The s->x prefix of the optimal s->t path costs 1 hop x 3 = 3 > d_B(s,x).
    CHECK(3.0 > sx.bottleneck);
}

TEST_CASE("unit-weight star: all notions agree on leaf pairs") {
    auto g = parse_edge_list("h a 1\nh b 1\nh c 1\nh d 1\n", WeightMode::weights);
    auto r = oracle_distances(g, *g.find("a"), *g.find("b"));
    CHECK(r.geodesic == 2.0);
    CHECK(r.weighted == 2.0);
    CHECK(r.bottleneck == 2.0);
    CHECK(r.simple_path_count == 1);
}

TEST_CASE("path count matches an independent recursive count") {
    auto g = parse_edge_list(
        "a b 1\na c 1\nb c 1\nb d 1\nc d 1\nc e 1\nd e 1\nd f 1\ne f 1\na f 1\n",
        WeightMode::weights);
    for (NodeId s = 0; static_cast<std::size_t>(s) < g.node_count(); ++s) {
        for (NodeId t = s + 1; static_cast<std::size_t>(t) < g.node_count(); ++t) {
            std::vector<char> used(g.node_count(), 0);
            auto expect = count_paths(g, s, t, used);
            auto r = oracle_distances(g, s, t);
            CHECK(r.simple_path_count == expect);
        }
    }
}

TEST_CASE("every reported optimum is attained by a reported path") {
    auto g = parse_edge_list(kSubstructure, WeightMode::weights);
    auto r = oracle_distances(g, *g.find("s"), *g.find("t"));
    auto costs = [&](const std::vector<NodeId>& p) {
        double sum = 0, width = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            double w = *g.edge_weight(p[i], p[i + 1]);
            sum += w;
            width = std::max(width, w);
        }
        return std::tuple{static_cast<double>(p.size() - 1), sum, width};
    };
    REQUIRE(!r.geodesic_paths.empty());
    REQUIRE(!r.weighted_paths.empty());
    REQUIRE(!r.bottleneck_paths.empty());
    REQUIRE(!r.minimax_width_paths.empty());
    for (const auto& p : r.geodesic_paths) CHECK(std::get<0>(costs(p)) == r.geodesic);
    for (const auto& p : r.weighted_paths) CHECK(std::get<1>(costs(p)) == r.weighted);
    for (const auto& p : r.bottleneck_paths)
        CHECK(std::get<0>(costs(p)) * std::get<2>(costs(p)) == r.bottleneck);
    for (const auto& p : r.minimax_width_paths) CHECK(std::get<2>(costs(p)) == r.minimax_width);
}

TEST_CASE("invalid endpoints rejected") {
    auto g = parse_edge_list(kTriangle, WeightMode::weights);
    CHECK_THROWS_AS(enumerate_simple_paths(g, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_simple_paths(g, 0, 99), std::invalid_argument);
}
