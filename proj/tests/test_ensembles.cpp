#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "swpaths/bottleneck.hpp"
#include "swpaths/classic_paths.hpp"
#include "swpaths/ensembles.hpp"
#include "swpaths/graph.hpp"
#include "swpaths/rng.hpp"

using namespace swp;

namespace {

std::vector<std::size_t> degree_sequence(const WeightedGraph& g) {
    std::vector<std::size_t> d;
    d.reserve(g.node_count());
    for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
        d.push_back(g.degree(v));
    return d;
}

} // namespace

TEST_CASE("multiplicity sampling: power-law frequencies match the pmf") {
    MultiplicityModel model; // exponent 2.76, max 50
    CounterRng rng(1234, 0);
    const int draws = 100000;
    std::map<int, int> counts;
    for (int i = 0; i < draws; ++i) {
        int m = sample_multiplicity(model, rng);
        CHECK(m >= 1);
        CHECK(m <= 50);
        counts[m]++;
    }
    // Normalization constant of m^-2.76 over 1..50.
    double z = 0.0;
    for (int m = 1; m <= 50; ++m) z += std::pow(m, -2.76);
    // m=1 carries ~85% of the mass; check the head of the pmf closely.
    for (int m = 1; m <= 3; ++m) {
        double expect = std::pow(m, -2.76) / z;
        double got = static_cast<double>(counts[m]) / draws;
        CHECK(got == doctest::Approx(expect).epsilon(0.05));
    }
    // Chi-square over all observed values stays sane.
    double chi = 0.0;
    for (int m = 1; m <= 50; ++m) {
        double e = draws * std::pow(m, -2.76) / z;
        if (e < 5.0) break;
        double o = static_cast<double>(counts[m]);
        chi += (o - e) * (o - e) / e;
    }
    CHECK(chi < 100.0);
}

TEST_CASE("multiplicity sampling: empirical histogram mode") {
    MultiplicityModel model;
    model.histogram = {0.0, 3.0, 1.0}; // m=2 three times as likely as m=3; m=1 never
    REQUIRE(model.empirical());
    CounterRng rng(99, 0);
    int twos = 0, threes = 0;
    for (int i = 0; i < 20000; ++i) {
        int m = sample_multiplicity(model, rng);
        REQUIRE(m >= 2);
        REQUIRE(m <= 3);
        (m == 2 ? twos : threes)++;
    }
    CHECK(static_cast<double>(twos) / 20000 == doctest::Approx(0.75).epsilon(0.03));
    CHECK(static_cast<double>(threes) / 20000 == doctest::Approx(0.25).epsilon(0.10));
}

TEST_CASE("er sampling: edge count concentrates around C(n,2)p") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::erdos_renyi;
    spec.n = 60;
    spec.p = 0.1;
    spec.seed = 7;
    const int samples = 80;
    double total = 0.0;
    for (int i = 0; i < samples; ++i) {
        auto g = sample_er_weighted(spec, static_cast<std::uint64_t>(i));
        CHECK(g.node_count() == 60);
        total += static_cast<double>(g.edge_count());
    }
    const double pairs = 60.0 * 59.0 / 2.0;
    const double mean = total / samples;
    const double want = pairs * spec.p; // 177
    const double se = std::sqrt(pairs * spec.p * (1.0 - spec.p) / samples);
    CHECK(std::abs(mean - want) <= 3.0 * se);
}

TEST_CASE("er sampling: weights are reciprocals of multiplicities in range") {
    EnsembleSpec spec;
    spec.n = 30;
    spec.p = 0.2;
    spec.seed = 3;
    auto g = sample_er_weighted(spec, 0);
    REQUIRE(g.edge_count() > 0);
    for (const auto& e : g.edges()) {
        double m = 1.0 / e.weight;
        CHECK(m == doctest::Approx(std::round(m)).epsilon(1e-12));
        CHECK(m >= 1.0);
        CHECK(m <= 50.0);
    }
}

TEST_CASE("er sampling: identical (seed, index) reproduces the sample bit-exactly") {
    EnsembleSpec spec;
    spec.n = 40;
    spec.p = 0.15;
    spec.seed = 2024;
    auto a = sample_er_weighted(spec, 5);
    auto b = sample_er_weighted(spec, 5);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));
    auto c = sample_er_weighted(spec, 6);
    CHECK(serialize_edge_list(a) != serialize_edge_list(c));
}

TEST_CASE("er sampling: parameter validation") {
    EnsembleSpec spec;
    spec.n = 0;
    spec.p = 0.5;
    CHECK_THROWS_AS(sample_er_weighted(spec, 0), std::invalid_argument);
    spec.n = 10;
    spec.p = 0.0;
    CHECK_THROWS_AS(sample_er_weighted(spec, 0), std::invalid_argument);
    spec.p = 1.5;
    CHECK_THROWS_AS(sample_er_weighted(spec, 0), std::invalid_argument);
}

TEST_CASE("sampled weights never exceed one, so hop counts bound bottleneck distances") {
    EnsembleSpec spec;
    spec.n = 25;
    spec.p = 0.15;
    spec.seed = 55;
    for (std::uint64_t i = 0; i < 3; ++i) {
        auto g = giant_component(sample_er_weighted(spec, i));
        if (g.node_count() < 2) continue;
        for (NodeId s = 0; static_cast<std::size_t>(s) < g.node_count(); ++s) {
            auto geo = geodesic_all(g, s);
            auto one = one_to_all_bottleneck(g, s);
            for (std::size_t t = 0; t < g.node_count(); ++t) {
                CHECK(one.distance[t] <= geo[t]);
            }
        }
    }
}

TEST_CASE("degree-matched rewiring: degree sequence preserved, graph stays simple") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    spec.seed = 9;
    GraphBuilder b(12);
    // Path plus chords: varied degrees, plenty of legal swaps.
    for (NodeId i = 1; i < 12; ++i) b.add_edge(i - 1, i, 1.0);
    b.add_edge(0, 11, 0.5);
    b.add_edge(2, 9, 0.25);
    b.add_edge(0, 5, 0.5);
    auto ref = b.build();
    auto want = degree_sequence(ref);

    for (std::uint64_t i = 0; i < 5; ++i) {
        auto g = sample_degree_matched(ref, spec, i);
        CHECK(g.node_count() == ref.node_count());
        CHECK(g.edge_count() == ref.edge_count());
        CHECK(degree_sequence(g) == want);
        // Simplicity is enforced by the builder, but double-check: u<v and unique.
        std::set<std::pair<NodeId, NodeId>> seen;
        for (const auto& e : g.edges()) {
            CHECK(e.u < e.v);
            CHECK(seen.insert({e.u, e.v}).second);
        }
        // Names preserved in order.
        CHECK(g.names() == ref.names());
    }
}

TEST_CASE("degree-matched rewiring: actually rewires a rewireable graph") {
    GraphBuilder b(16);
    for (NodeId i = 1; i < 16; ++i) b.add_edge(i - 1, i, 1.0);
    b.add_edge(3, 15, 1.0);
    b.add_edge(5, 12, 1.0);
    auto ref = b.build();
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    spec.seed = 100;
    auto g = sample_degree_matched(ref, spec, 0);

    auto key = [](const WeightedGraph& gr) {
        std::set<std::pair<NodeId, NodeId>> s;
        for (const auto& e : gr.edges()) s.insert({e.u, e.v});
        return s;
    };
    CHECK(key(g) != key(ref));
}

TEST_CASE("degree-matched rewiring: star topology has no legal swap and is returned as-is") {
    auto ref = parse_edge_list("h a 1\nh b 1\nh c 1\nh d 1\n", WeightMode::weights);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    spec.seed = 4;
    auto g = sample_degree_matched(ref, spec, 0);
    std::set<std::pair<NodeId, NodeId>> a, b;
    for (const auto& e : ref.edges()) a.insert({e.u, e.v});
    for (const auto& e : g.edges()) b.insert({e.u, e.v});
    CHECK(a == b); // same topology; weights may be resampled
}

TEST_CASE("degree-matched rewiring: too-sparse references are rejected") {
    auto ref = parse_edge_list("a b 1\n", WeightMode::weights);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    CHECK_THROWS_AS(sample_degree_matched(ref, spec, 0), std::invalid_argument);
}

TEST_CASE("degree-matched rewiring: deterministic per (seed, index)") {
    GraphBuilder b(10);
    for (NodeId i = 1; i < 10; ++i) b.add_edge(i - 1, i, 1.0);
    b.add_edge(4, 9, 1.0);
    auto ref = b.build();
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    spec.seed = 77;
    CHECK(serialize_edge_list(sample_degree_matched(ref, spec, 2)) ==
          serialize_edge_list(sample_degree_matched(ref, spec, 2)));
}

TEST_CASE("run_ensemble: bookkeeping, pooling, and analysis cap" * doctest::timeout(120)) {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::erdos_renyi;
    spec.n = 30;
    spec.p = 0.12;
    spec.seed = 12;
    auto run = run_ensemble(spec, nullptr, 6, /*workers=*/2, /*analysis_cap=*/4);
    CHECK(run.samples == 6);
    REQUIRE(run.per_sample.size() == 6);
    std::size_t analyzed = 0;
    for (std::size_t i = 0; i < run.per_sample.size(); ++i) {
        const auto& s = run.per_sample[i];
        CHECK(s.nodes == 30);
        CHECK(s.giant_nodes <= s.nodes);
        CHECK(s.giant_edges <= s.edges);
        if (s.analyzed) {
            ++analyzed;
            CHECK(i < 4);
            CHECK(std::isfinite(s.eff_diameter_geodesic));
            CHECK(s.eff_diameter_geodesic >= 1.0);
            CHECK(s.eff_diameter_bottleneck >= s.eff_diameter_weighted);
        } else {
            CHECK(std::isnan(s.eff_diameter_geodesic));
        }
    }
    CHECK(analyzed <= 4);
    CHECK(run.pooled_geodesic.size() > 0);
    CHECK(run.pooled_geodesic.size() == run.pooled_weighted.size());
    CHECK(run.pooled_geodesic.size() == run.pooled_bottleneck.size());
    // Giant-component pairs only: every pooled distance is finite by construction.
    CHECK(run.pooled_geodesic.infinite_count() == 0);

    // Same spec, same samples: identical pooled values.
    auto rerun = run_ensemble(spec, nullptr, 6, /*workers=*/1, /*analysis_cap=*/4);
    CHECK(run.pooled_bottleneck.values() == rerun.pooled_bottleneck.values());
    for (std::size_t i = 0; i < run.per_sample.size(); ++i) {
        CHECK(run.per_sample[i].edges == rerun.per_sample[i].edges);
    }
}

TEST_CASE("run_ensemble: degree-matched mode pools against the reference topology") {
    GraphBuilder b(14);
    for (NodeId i = 1; i < 14; ++i) b.add_edge(i - 1, i, 0.5);
    b.add_edge(6, 13, 0.5);
    b.add_edge(2, 11, 0.5);
    auto ref = b.build();
    EnsembleSpec spec;
    spec.kind = EnsembleKind::degree_matched;
    spec.seed = 5;
    auto run = run_ensemble(spec, &ref, 3, 1);
    CHECK(run.samples == 3);
    for (const auto& s : run.per_sample) {
        CHECK(s.nodes == 14);
        CHECK(s.edges == ref.edge_count());
        CHECK(s.analyzed);
    }
    CHECK(run.pooled_bottleneck.size() > 0);
}
