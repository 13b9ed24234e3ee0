#include "swpaths/analysis.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "swpaths/classic_paths.hpp"

namespace swp {

DistanceMatrices compute_all_distances(const WeightedGraph& g, AllPairsStrategy strategy,
                                       std::size_t workers) {
    const std::size_t n = g.node_count();
    DistanceMatrices m;
    m.n = n;
    m.geodesic.resize(n * n);
    m.weighted.resize(n * n);
    m.minimax.resize(n * n);

    auto fill_row = [&](std::size_t s) {
        auto geo = geodesic_all(g, static_cast<NodeId>(s));
        auto wtd = weighted_all(g, static_cast<NodeId>(s));
        auto mmx = minimax_width_all(g, static_cast<NodeId>(s));
        std::copy(geo.begin(), geo.end(), m.geodesic.begin() + static_cast<std::ptrdiff_t>(s * n));
        std::copy(wtd.begin(), wtd.end(), m.weighted.begin() + static_cast<std::ptrdiff_t>(s * n));
        std::copy(mmx.begin(), mmx.end(), m.minimax.begin() + static_cast<std::ptrdiff_t>(s * n));
    };

    std::size_t nworkers = workers == 0 ? 1 : std::min(workers, n == 0 ? std::size_t{1} : n);
    if (nworkers <= 1 || n <= 1) {
        for (std::size_t s = 0; s < n; ++s) fill_row(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < n; s += nworkers) fill_row(s);
            });
        }
        for (auto& th : pool) th.join();
    }

    m.bottleneck = all_pairs_bottleneck(g, strategy, workers).dist;
    return m;
}

DistanceDistribution upper_triangle_distribution(const std::vector<double>& matrix, std::size_t n) {
    if (matrix.size() != n * n) throw std::invalid_argument("matrix size does not match node count");
    std::vector<double> values;
    values.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) values.push_back(matrix[i * n + j]);
    return DistanceDistribution(std::move(values));
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void write_matrix_csv(std::ostream& out, const WeightedGraph& g, const std::vector<double>& matrix) {
    const std::size_t n = g.node_count();
    if (matrix.size() != n * n) throw std::invalid_argument("matrix size does not match graph");
    for (std::size_t j = 0; j < n; ++j) out << ',' << g.name(static_cast<NodeId>(j));
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out << g.name(static_cast<NodeId>(i));
        for (std::size_t j = 0; j < n; ++j) out << ',' << format_number(matrix[i * n + j]);
        out << '\n';
    }
}

void write_survival_csv(std::ostream& out, const SurvivalCurve& curve) {
    out << "value,survival\n";
    for (const auto& p : curve.points)
        out << format_number(p.value) << ',' << format_number(p.fraction) << '\n';
}

} // namespace swp
