#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swpaths/bottleneck.hpp"
#include "swpaths/graph.hpp"
#include "swpaths/stats.hpp"

namespace swp {

// Row-major n x n matrices for the four distance notions; diagonal 0,
// unreachable pairs +inf. All are symmetric.
struct DistanceMatrices {
    std::size_t n = 0;
    std::vector<double> geodesic;
    std::vector<double> weighted;
    std::vector<double> bottleneck;
    std::vector<double> minimax;
};

DistanceMatrices compute_all_distances(const WeightedGraph& g,
                                       AllPairsStrategy strategy = AllPairsStrategy::parallel_sssp,
                                       std::size_t workers = 1);

// Distribution over the C(n,2) unordered pairs (upper triangle).
DistanceDistribution upper_triangle_distribution(const std::vector<double>& matrix, std::size_t n);

// Shortest decimal that round-trips the value; infinities as "inf"/"-inf".
std::string format_number(double v);

// CSV with node-name row/column headers.
void write_matrix_csv(std::ostream& out, const WeightedGraph& g, const std::vector<double>& matrix);

// Two-column CSV: value,survival.
void write_survival_csv(std::ostream& out, const SurvivalCurve& curve);

} // namespace swp
