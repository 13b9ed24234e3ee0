#include "swpaths/neuro.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace swp {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("expected positive finite ") + what);
}

// -p(y) log2 p(y) for the equal mixture of unit Gaussians at +-mu.
double neg_p_log_p(double y, double mu) {
    const double norm = 1.0 / (2.0 * std::sqrt(2.0 * kPi));
    double a = y - mu, b = y + mu;
    double p = norm * (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b));
    if (p <= 0.0) return 0.0;
    return -p * std::log2(p);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, double mu, double& worst_tol) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = neg_p_log_p(lm, mu), frm = neg_p_log_p(rm, mu);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double err = left + right - whole;
    if (std::fabs(err) <= 15.0 * tol || depth >= 48) {
        if (depth >= 48) worst_tol = std::max(worst_tol, std::fabs(err) / 15.0);
        return left + right + err / 15.0;
    }
    return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, mu, worst_tol) +
           adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, mu, worst_tol);
}

double integrate_segment(double a, double b, double tol, double mu, double& worst_tol) {
    double fa = neg_p_log_p(a, mu);
    double fb = neg_p_log_p(b, mu);
    double m = 0.5 * (a + b);
    double fm = neg_p_log_p(m, mu);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(a, b, fa, fm, fb, whole, tol, 0, mu, worst_tol);
}

} // namespace

double thermal_noise_rms(const ChannelModel& model) {
    require_positive(model.resistance, "resistance");
    require_positive(model.temperature, "temperature");
    require_positive(model.boltzmann, "boltzmann constant");
    if (model.bandwidth < 0.0 || !std::isfinite(model.bandwidth))
        throw std::invalid_argument("bandwidth must be nonnegative");
    return std::sqrt(4.0 * model.boltzmann * model.temperature * model.resistance *
                     model.bandwidth);
}

double mixture_entropy_bits(double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("mixture separation must be nonnegative");
    // Integrand support: within ~9 sigma of either center the density is
    // above 1e-18; beyond the cutoff the tail contributes < 1e-12 bits.
    const double hi = mu + 12.0;
    const int segments = static_cast<int>(std::ceil(hi));
    const double tol = 1e-11 / segments;
    double worst_tol = 0.0;
    double half = 0.0;
    for (int k = 0; k < segments; ++k) {
        double a = hi * static_cast<double>(k) / segments;
        double b = hi * static_cast<double>(k + 1) / segments;
        half += integrate_segment(a, b, tol, mu, worst_tol);
    }
    if (worst_tol > 1e-7)
        throw std::runtime_error("entropy quadrature did not reach tolerance (achieved " +
                                 std::to_string(worst_tol) + " bits)");
    return 2.0 * half; // density is symmetric in y
}

CapacityResult gap_junction_capacity(const ChannelModel& model) {
    require_positive(model.bandwidth, "bandwidth");
    if (model.v0 > model.v1)
        throw std::invalid_argument("signaling levels must satisfy v0 <= v1");
    CapacityResult r;
    r.noise_rms = thermal_noise_rms(model);
    const double amplitude = 0.5 * (model.v1 - model.v0);
    r.snr = (amplitude * amplitude) / (r.noise_rms * r.noise_rms);
    const double mu = std::sqrt(r.snr);
    const double gaussian_entropy = 0.5 * std::log2(2.0 * kPi * std::exp(1.0));
    r.bits_per_use = std::clamp(mixture_entropy_bits(mu) - gaussian_entropy, 0.0, 1.0);
    r.bits_per_second = r.bits_per_use * model.bandwidth;
    r.seconds_per_bit = r.bits_per_second > 0.0
                            ? 1.0 / r.bits_per_second
                            : std::numeric_limits<double>::infinity();
    return r;
}

double parallel_capacity(const CapacityResult& result, double junction_count) {
    require_positive(junction_count, "junction count");
    return junction_count * result.bits_per_second;
}

double consensus_time_bound(const BoundInput& input) {
    require_positive(input.effective_diameter, "effective diameter");
    require_positive(input.log_m_bits, "message volume");
    require_positive(input.capacity_bits_per_second, "capacity");
    return input.effective_diameter * input.log_m_bits / input.capacity_bits_per_second;
}

namespace {

constexpr int kMaxTreeNodes = 9;

struct SmallTree {
    int n = 0;
    std::array<std::array<int, kMaxTreeNodes>, kMaxTreeNodes> adj{};
    std::array<int, kMaxTreeNodes> deg{};

    void reset(int nodes) {
        n = nodes;
        deg.fill(0);
    }
    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(deg[static_cast<std::size_t>(u)]++)] = v;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]++)] = u;
    }
};

// Distance from `start` to the farthest node, and that node (tree BFS).
std::pair<int, int> farthest(const SmallTree& t, int start) {
    std::array<int, kMaxTreeNodes> dist{};
    dist.fill(-1);
    std::array<int, kMaxTreeNodes> queue{};
    int head = 0, tail = 0;
    queue[static_cast<std::size_t>(tail++)] = start;
    dist[static_cast<std::size_t>(start)] = 0;
    int best = start;
    while (head < tail) {
        int u = queue[static_cast<std::size_t>(head++)];
        for (int k = 0; k < t.deg[static_cast<std::size_t>(u)]; ++k) {
            int v = t.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue[static_cast<std::size_t>(tail++)] = v;
                if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]) best = v;
            }
        }
    }
    return {dist[static_cast<std::size_t>(best)], best};
}

int tree_diameter(const SmallTree& t) {
    auto [d0, far] = farthest(t, 0);
    (void)d0;
    return farthest(t, far).first;
}

// Standard sequence decoding: repeatedly attach the smallest remaining leaf
// to the next sequence entry; the two survivors form the final edge.
void decode_tree(const int* seq, int len, SmallTree& tree) {
    const int n = len + 2;
    tree.reset(n);
    std::array<int, kMaxTreeNodes> deg{};
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < len; ++i) ++deg[static_cast<std::size_t>(seq[i])];
    for (int i = 0; i < len; ++i) {
        int leaf = -1;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        }
        tree.add_edge(leaf, seq[i]);
        deg[static_cast<std::size_t>(leaf)] = 0;
        --deg[static_cast<std::size_t>(seq[i])];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) {
            if (u < 0)
                u = v;
            else
                tree.add_edge(u, v);
        }
    }
}

bool is_star(const SmallTree& t) {
    for (int v = 0; v < t.n; ++v)
        if (t.deg[static_cast<std::size_t>(v)] == t.n - 1) return true;
    return false;
}

} // namespace

HubSpokeReport verify_hub_and_spoke(int n) {
    if (n < 3 || n > kMaxTreeNodes)
        throw std::invalid_argument("tree verification supports 3 <= n <= 9");
    HubSpokeReport report;
    report.n = n;
    report.min_diameter = std::numeric_limits<int>::max();
    report.all_minimizers_star = true;

    const int len = n - 2;
    std::array<int, kMaxTreeNodes - 2> seq{};
    SmallTree tree;
    bool done = false;
    while (!done) {
        decode_tree(seq.data(), len, tree);
        ++report.tree_count;
        int d = tree_diameter(tree);
        bool star = is_star(tree);
        if (star) ++report.star_count;
        if (d < report.min_diameter) {
            report.min_diameter = d;
            report.minimizer_count = 1;
            report.all_minimizers_star = star;
        } else if (d == report.min_diameter) {
            ++report.minimizer_count;
            report.all_minimizers_star = report.all_minimizers_star && star;
        }
        // Odometer over sequences of length n-2 in base n.
        int pos = 0;
        for (;; ++pos) {
            if (pos == len) {
                done = true;
                break;
            }
            if (++seq[static_cast<std::size_t>(pos)] < n) break;
            seq[static_cast<std::size_t>(pos)] = 0;
        }
    }
    return report;
}

} // namespace swp
