#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "swpaths/bottleneck.hpp"
#include "swpaths/classic_paths.hpp"
#include "swpaths/graph.hpp"
#include "swpaths/oracle.hpp"
#include "swpaths/rng.hpp"
#include "swpaths/synthetic.hpp"

using namespace swp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

} // namespace

TEST_CASE("geodesic: path of four nodes") {
    auto g = parse_edge_list("a b 9\nb c 9\nc d 9\n", WeightMode::weights);
    auto d = geodesic_all(g, *g.find("a"));
    CHECK(d[idx(*g.find("a"))] == 0.0);
    CHECK(d[idx(*g.find("b"))] == 1.0);
    CHECK(d[idx(*g.find("c"))] == 2.0);
    CHECK(d[idx(*g.find("d"))] == 3.0);
}

TEST_CASE("geodesic: star has diameter two") {
    auto g = parse_edge_list("h a 1\nh b 1\nh c 1\nh d 1\n", WeightMode::weights);
    for (NodeId s = 0; idx(s) < g.node_count(); ++s) {
        auto d = geodesic_all(g, s);
        for (NodeId t = 0; idx(t) < g.node_count(); ++t) {
            CHECK(d[idx(t)] <= 2.0);
        }
    }
    auto leaf = geodesic_all(g, *g.find("a"));
    CHECK(leaf[idx(*g.find("b"))] == 2.0);
    CHECK(leaf[idx(*g.find("h"))] == 1.0);
}

TEST_CASE("weighted: sum of weights picks the light detour") {
    auto g = parse_edge_list("a b 5\na c 1\nc b 1\n", WeightMode::weights);
    auto d = weighted_all(g, *g.find("a"));
    CHECK(d[idx(*g.find("b"))] == 2.0); // a-c-b = 1+1 beats a-b = 5
    CHECK(d[idx(*g.find("c"))] == 1.0);
}

TEST_CASE("minimax width: single edge and detour") {
    auto g1 = parse_edge_list("u v 0.25\n", WeightMode::weights);
    auto d1 = minimax_width_all(g1, *g1.find("u"));
    CHECK(d1[idx(*g1.find("v"))] == 0.25);
    CHECK(d1[idx(*g1.find("u"))] == 0.0);

    // Long thin detour wins over the direct heavy edge regardless of hops.
    auto g2 = parse_edge_list("a b 5\na x 1\nx y 1\ny b 1\n", WeightMode::weights);
    auto d2 = minimax_width_all(g2, *g2.find("a"));
    CHECK(d2[idx(*g2.find("b"))] == 1.0);
}

TEST_CASE("unreachable nodes are infinite in every notion") {
    auto g = parse_edge_list("a b 1\nx y 1\n", WeightMode::weights);
    NodeId a = *g.find("a"), x = *g.find("x");
    CHECK(geodesic_all(g, a)[idx(x)] == kInf);
    CHECK(weighted_all(g, a)[idx(x)] == kInf);
    CHECK(minimax_width_all(g, a)[idx(x)] == kInf);
}

TEST_CASE("invalid source throws") {
    auto g = parse_edge_list("a b 1\n", WeightMode::weights);
    CHECK_THROWS_AS(geodesic_all(g, static_cast<NodeId>(5)), std::invalid_argument);
    CHECK_THROWS_AS(weighted_all(g, static_cast<NodeId>(-1)), std::invalid_argument);
    CHECK_THROWS_AS(minimax_width_all(g, static_cast<NodeId>(2)), std::invalid_argument);
}

TEST_CASE("property: all three notions match the oracle on random graphs" *
          doctest::timeout(120)) {
    CounterRng rng(314, 0);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 3 + rng.next_below(6);
        auto style = i % 2 == 0 ? WeightStyle::discrete : WeightStyle::continuous;
        auto g = random_connected_graph(n, rng.next_below(n + 3), style, rng);
        for (NodeId s = 0; idx(s) < n; ++s) {
            auto geo = geodesic_all(g, s);
            auto wtd = weighted_all(g, s);
            auto mmw = minimax_width_all(g, s);
            for (NodeId t = 0; idx(t) < n; ++t) {
                auto want = oracle_distances(g, s, t);
                CAPTURE(i);
                CAPTURE(s);
                CAPTURE(t);
                CHECK(geo[idx(t)] == want.geodesic);
                CHECK(wtd[idx(t)] == want.weighted);
                CHECK(mmw[idx(t)] == want.minimax_width);
            }
        }
    }
}

TEST_CASE("ordering relations between the notions") {
    CounterRng rng(525, 0);
    for (int i = 0; i < 25; ++i) {
        // Continuous weights are drawn from (0,1]; discrete from {0.25,0.5,1}.
        // Either way all weights are <= 1, so both orderings must hold.
        auto style = i % 2 == 0 ? WeightStyle::discrete : WeightStyle::continuous;
        auto g = random_connected_graph(4 + rng.next_below(5), rng.next_below(8), style, rng);
        for (NodeId s = 0; idx(s) < g.node_count(); ++s) {
            auto geo = geodesic_all(g, s);
            auto wtd = weighted_all(g, s);
            auto one = one_to_all_bottleneck(g, s);
            for (NodeId t = 0; idx(t) < g.node_count(); ++t) {
                CHECK(wtd[idx(t)] <= one.distance[idx(t)]);
                CHECK(one.distance[idx(t)] <= geo[idx(t)]);
            }
        }
    }
}

TEST_CASE("weighted sum ordering holds even with weights above one") {
    auto g = parse_edge_list("s x 3\ns a 1\na x 1\nx t 3\n", WeightMode::weights);
    for (NodeId s = 0; idx(s) < g.node_count(); ++s) {
        auto wtd = weighted_all(g, s);
        auto one = one_to_all_bottleneck(g, s);
        for (NodeId t = 0; idx(t) < g.node_count(); ++t) {
            CHECK(wtd[idx(t)] <= one.distance[idx(t)]);
        }
    }
    // But the hop-count ordering can break: d_B(s,t)=6 > d_G(s,t)=2.
    NodeId s = *g.find("s"), t = *g.find("t");
    auto geo = geodesic_all(g, s);
    auto one = one_to_all_bottleneck(g, s);
    CHECK(geo[idx(t)] == 2.0);
    CHECK(one.distance[idx(t)] == 6.0);
}

TEST_CASE("source distance is zero for every notion") {
    CounterRng rng(8, 8);
    auto g = random_connected_graph(7, 5, WeightStyle::continuous, rng);
    for (NodeId s = 0; idx(s) < g.node_count(); ++s) {
        CHECK(geodesic_all(g, s)[idx(s)] == 0.0);
        CHECK(weighted_all(g, s)[idx(s)] == 0.0);
        CHECK(minimax_width_all(g, s)[idx(s)] == 0.0);
    }
}
