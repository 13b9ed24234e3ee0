#pragma once

#include <cstdint>
#include <vector>

#include "swpaths/graph.hpp"
#include "swpaths/rng.hpp"
#include "swpaths/stats.hpp"

namespace swp {

enum class EnsembleKind { erdos_renyi, degree_matched };

// Edge multiplicities drawn either from a truncated discrete power law
// P(m) proportional to m^(-exponent) on {1..max}, or, when a histogram is
// supplied, from that empirical distribution over {1..histogram.size()}.
// Stored edge weight is always 1/m.
struct MultiplicityModel {
    double exponent = 2.76;
    int max = 50;
    std::vector<double> histogram; // optional: unnormalized mass for m = 1, 2, ...
    bool empirical() const { return !histogram.empty(); }
};

int sample_multiplicity(const MultiplicityModel& model, CounterRng& rng);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::erdos_renyi;
    std::size_t n = 0;  // erdos_renyi only
    double p = 0.0;     // erdos_renyi only
    MultiplicityModel multiplicity;
    std::uint64_t seed = 0;
};

// One Erdos-Renyi draw: each unordered pair is an edge with probability p,
// weights from the multiplicity model. Reproducible from (seed, index).
WeightedGraph sample_er_weighted(const EnsembleSpec& spec, std::uint64_t sample_index);

// One degree-preserving rewiring draw: double-edge swaps on the reference
// topology (rejecting self-loops and duplicates) until 10*|E| swaps succeed
// or an attempt budget runs out; multiplicities resampled per edge.
WeightedGraph sample_degree_matched(const WeightedGraph& reference, const EnsembleSpec& spec,
                                    std::uint64_t sample_index);

struct EnsembleSampleStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t giant_nodes = 0;
    std::size_t giant_edges = 0;
    bool analyzed = false; // distances computed for this sample
    double eff_diameter_geodesic = 0.0;
    double eff_diameter_weighted = 0.0;
    double eff_diameter_bottleneck = 0.0;
};

struct EnsembleRun {
    std::size_t samples = 0;
    std::vector<EnsembleSampleStats> per_sample;
    // Finite giant-component distances pooled over analyzed samples.
    DistanceDistribution pooled_geodesic;
    DistanceDistribution pooled_weighted;
    DistanceDistribution pooled_bottleneck;
    bool empirical_multiplicities = false;
};

// Generates `samples` draws, extracts each giant component, and computes
// all-pairs geodesic/weighted/bottleneck distributions for the first
// `analysis_cap` samples (edge/degree statistics are collected for all).
EnsembleRun run_ensemble(const EnsembleSpec& spec, const WeightedGraph* reference,
                         std::size_t samples, std::size_t workers,
                         std::size_t analysis_cap = static_cast<std::size_t>(-1),
                         double threshold = 0.95);

} // namespace swp
