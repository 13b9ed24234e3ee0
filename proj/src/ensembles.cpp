#include "swpaths/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "swpaths/bottleneck.hpp"
#include "swpaths/classic_paths.hpp"

namespace swp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_multiplicity(const MultiplicityModel& m) {
    if (m.empirical()) {
        double total = 0.0;
        for (double w : m.histogram) {
            if (!(w >= 0.0) || !std::isfinite(w))
                throw std::invalid_argument("multiplicity histogram entries must be finite and nonnegative");
            total += w;
        }
        if (!(total > 0.0)) throw std::invalid_argument("multiplicity histogram has zero total mass");
        return;
    }
    if (!(m.exponent > 1.0)) throw std::invalid_argument("multiplicity exponent must exceed 1");
    if (m.max < 1) throw std::invalid_argument("multiplicity cutoff must be at least 1");
}

// Cumulative masses for inverse-cdf sampling of m in {1..size}.
struct MultiplicityCdf {
    std::vector<double> cum;

    explicit MultiplicityCdf(const MultiplicityModel& m) {
        validate_multiplicity(m);
        double total = 0.0;
        if (m.empirical()) {
            cum.reserve(m.histogram.size());
            for (double w : m.histogram) {
                total += w;
                cum.push_back(total);
            }
        } else {
            cum.reserve(static_cast<std::size_t>(m.max));
            for (int k = 1; k <= m.max; ++k) {
                total += std::pow(static_cast<double>(k), -m.exponent);
                cum.push_back(total);
            }
        }
    }

    int draw(CounterRng& rng) const {
        double target = rng.next_unit() * cum.back();
        auto it = std::upper_bound(cum.begin(), cum.end(), target);
        if (it == cum.end()) --it; // guard against target == total
        return static_cast<int>(it - cum.begin()) + 1;
    }
};

std::uint64_t edge_key(NodeId u, NodeId v, std::size_t n) {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return a * static_cast<std::uint64_t>(n) + b;
}

} // namespace

int sample_multiplicity(const MultiplicityModel& model, CounterRng& rng) {
    return MultiplicityCdf(model).draw(rng);
}

WeightedGraph sample_er_weighted(const EnsembleSpec& spec, std::uint64_t sample_index) {
    if (spec.kind != EnsembleKind::erdos_renyi)
        throw std::invalid_argument("sample_er_weighted requires an erdos_renyi spec");
    if (spec.n < 1) throw std::invalid_argument("node count must be positive");
    if (!(spec.p > 0.0 && spec.p < 1.0))
        throw std::invalid_argument("connection probability must lie in (0,1)");
    MultiplicityCdf cdf(spec.multiplicity);
    CounterRng rng(spec.seed, sample_index);
    GraphBuilder builder(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = i + 1; j < spec.n; ++j) {
            if (rng.next_unit() < spec.p) {
                int m = cdf.draw(rng);
                builder.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), 1.0 / m);
            }
        }
    }
    return builder.build();
}

WeightedGraph sample_degree_matched(const WeightedGraph& reference, const EnsembleSpec& spec,
                                    std::uint64_t sample_index) {
    if (spec.kind != EnsembleKind::degree_matched)
        throw std::invalid_argument("sample_degree_matched requires a degree_matched spec");
    if (reference.edge_count() < 2)
        throw std::invalid_argument("reference graph too sparse to swap (need at least 2 edges)");
    MultiplicityCdf cdf(spec.multiplicity);
    CounterRng rng(spec.seed, sample_index);

    const std::size_t n = reference.node_count();
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(reference.edge_count());
    std::unordered_set<std::uint64_t> present;
    present.reserve(reference.edge_count() * 2);
    for (const auto& e : reference.edges()) {
        edges.emplace_back(e.u, e.v);
        present.insert(edge_key(e.u, e.v, n));
    }

    const std::size_t m = edges.size();
    const std::size_t target = 10 * m;
    const std::size_t attempt_cap = 100 * target + 1000;
    std::size_t successes = 0;
    for (std::size_t attempt = 0; successes < target && attempt < attempt_cap; ++attempt) {
        std::size_t e1 = rng.next_below(m);
        std::size_t e2 = rng.next_below(m);
        if (e1 == e2) continue;
        auto [a, b] = edges[e1];
        auto [c, d] = edges[e2];
        if (rng.next_unit() < 0.5) std::swap(c, d);
        // Proposed replacement: (a,d) and (c,b).
        if (a == d || c == b) continue;
        std::uint64_t k1 = edge_key(a, d, n);
        std::uint64_t k2 = edge_key(c, b, n);
        if (k1 == k2 || present.count(k1) || present.count(k2)) continue;
        present.erase(edge_key(a, b, n));
        present.erase(edge_key(c, d, n));
        present.insert(k1);
        present.insert(k2);
        edges[e1] = {a, d};
        edges[e2] = {c, b};
        ++successes;
    }

    GraphBuilder builder;
    for (std::size_t i = 0; i < n; ++i) builder.add_node(reference.name(static_cast<NodeId>(i)));
    for (const auto& [u, v] : edges) {
        int mult = cdf.draw(rng);
        builder.add_edge(u, v, 1.0 / mult);
    }
    return builder.build();
}

namespace {

struct SampleDistances {
    std::vector<double> geodesic;
    std::vector<double> weighted;
    std::vector<double> bottleneck;
};

void analyze_giant(const WeightedGraph& giant, double threshold, EnsembleSampleStats& stats,
                   SampleDistances& out) {
    const std::size_t n = giant.node_count();
    for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
        auto geo = geodesic_all(giant, s);
        auto wtd = weighted_all(giant, s);
        auto btl = one_to_all_bottleneck(giant, s);
        for (std::size_t t = static_cast<std::size_t>(s) + 1; t < n; ++t) {
            out.geodesic.push_back(geo[t]);
            out.weighted.push_back(wtd[t]);
            out.bottleneck.push_back(btl.distance[t]);
        }
    }
    stats.analyzed = true;
    stats.eff_diameter_geodesic =
        DistanceDistribution(out.geodesic).effective_diameter(threshold);
    stats.eff_diameter_weighted =
        DistanceDistribution(out.weighted).effective_diameter(threshold);
    stats.eff_diameter_bottleneck =
        DistanceDistribution(out.bottleneck).effective_diameter(threshold);
}

} // namespace

EnsembleRun run_ensemble(const EnsembleSpec& spec, const WeightedGraph* reference,
                         std::size_t samples, std::size_t workers, std::size_t analysis_cap,
                         double threshold) {
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    if (spec.kind == EnsembleKind::degree_matched && reference == nullptr)
        throw std::invalid_argument("degree-matched ensemble needs a reference graph");

    EnsembleRun run;
    run.samples = samples;
    run.empirical_multiplicities = spec.multiplicity.empirical();
    run.per_sample.resize(samples);
    std::vector<SampleDistances> dists(samples);

    auto process = [&](std::size_t idx) {
        WeightedGraph g = spec.kind == EnsembleKind::erdos_renyi
                              ? sample_er_weighted(spec, idx)
                              : sample_degree_matched(*reference, spec, idx);
        EnsembleSampleStats& stats = run.per_sample[idx];
        stats.nodes = g.node_count();
        stats.edges = g.edge_count();
        stats.eff_diameter_geodesic = kNaN;
        stats.eff_diameter_weighted = kNaN;
        stats.eff_diameter_bottleneck = kNaN;
        WeightedGraph giant = giant_component(g);
        stats.giant_nodes = giant.node_count();
        stats.giant_edges = giant.edge_count();
        if (idx < analysis_cap && giant.node_count() >= 2)
            analyze_giant(giant, threshold, stats, dists[idx]);
    };

    std::size_t nworkers = std::clamp<std::size_t>(workers, 1, samples);
    if (nworkers <= 1) {
        for (std::size_t idx = 0; idx < samples; ++idx) process(idx);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t idx = w; idx < samples; idx += nworkers) process(idx);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<double> all_geo, all_wtd, all_btl;
    for (const auto& d : dists) {
        all_geo.insert(all_geo.end(), d.geodesic.begin(), d.geodesic.end());
        all_wtd.insert(all_wtd.end(), d.weighted.begin(), d.weighted.end());
        all_btl.insert(all_btl.end(), d.bottleneck.begin(), d.bottleneck.end());
    }
    run.pooled_geodesic = DistanceDistribution(std::move(all_geo));
    run.pooled_weighted = DistanceDistribution(std::move(all_wtd));
    run.pooled_bottleneck = DistanceDistribution(std::move(all_btl));
    return run;
}

} // namespace swp
