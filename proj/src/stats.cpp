#include "swpaths/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace swp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

DistanceDistribution::DistanceDistribution(std::vector<double> raw) {
    values_.reserve(raw.size());
    for (double v : raw) {
        if (std::isnan(v)) throw std::invalid_argument("NaN distance in distribution");
        if (std::isinf(v))
            ++infinite_;
        else
            values_.push_back(v);
    }
    std::sort(values_.begin(), values_.end());
}

double DistanceDistribution::quantile(double p) const {
    if (empty()) throw std::invalid_argument("quantile of empty distribution");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile probability must lie in (0,1)");
    const std::size_t n = values_.size();
    // Smallest k in [1, n] with k/n >= p, evaluated in floating point so that
    // exact hits (e.g. 19/20 >= 0.95) resolve to the lower order statistic.
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (static_cast<double>(mid) / static_cast<double>(n) >= p)
            hi = mid;
        else
            lo = mid + 1;
    }
    return values_[lo - 1];
}

double DistanceDistribution::effective_diameter(double threshold) const {
    return quantile(threshold);
}

double DistanceDistribution::diameter() const {
    if (empty()) throw std::invalid_argument("diameter of empty distribution");
    return values_.back();
}

double DistanceDistribution::mean() const {
    if (empty()) throw std::invalid_argument("mean of empty distribution");
    return std::accumulate(values_.begin(), values_.end(), 0.0) /
           static_cast<double>(values_.size());
}

SurvivalCurve DistanceDistribution::survival() const {
    if (empty()) throw std::invalid_argument("survival of empty distribution");
    SurvivalCurve curve;
    const double n = static_cast<double>(values_.size());
    std::size_t i = 0;
    while (i < values_.size()) {
        std::size_t j = i;
        while (j + 1 < values_.size() && values_[j + 1] == values_[i]) ++j;
        curve.points.push_back(
            {values_[i], static_cast<double>(values_.size() - (j + 1)) / n});
        i = j + 1;
    }
    return curve;
}

// ---- special functions ----

double digamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("digamma requires x > 0");
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic expansion, accurate to ~1e-14 for x >= 6.
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
    return result;
}

namespace {

double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 2000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 2000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_p requires a > 0");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_q requires a > 0");
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double gamma_quantile(double a, double p) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_quantile requires a > 0");
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("gamma_quantile probability out of range");
    if (p == 0.0) return 0.0;
    double hi = a + 10.0 * std::sqrt(a) + 10.0;
    while (gamma_p(a, hi) < p) {
        hi *= 2.0;
        if (hi > 1e300) break;
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (gamma_p(a, mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// ---- gamma MLE ----

namespace {

// Unique a > 0 with log(a) - digamma(a) = s (s > 0); the left side is
// strictly decreasing from +inf to 0.
double solve_shape(double s) {
    double lo = 1.0, hi = 1.0;
    while (std::log(lo) - digamma(lo) < s) {
        lo *= 0.5;
        if (lo < 1e-300) break;
    }
    while (std::log(hi) - digamma(hi) > s) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (std::log(mid) - digamma(mid) > s)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct LocFit {
    double loc = 0.0;
    double shape = 0.0;
    double scale = 0.0;
    double loglik = -kInf;
    bool valid = false;
};

LocFit fit_at_location(const std::vector<double>& x, double loc) {
    LocFit f;
    f.loc = loc;
    const double n = static_cast<double>(x.size());
    double sum = 0.0, sum_log = 0.0;
    for (double v : x) {
        double y = v - loc;
        if (!(y > 0.0)) return f;
        sum += y;
        sum_log += std::log(y);
    }
    const double mean = sum / n;
    const double mean_log = sum_log / n;
    const double s = std::log(mean) - mean_log; // >= 0 by Jensen; 0 only for constants
    if (!(s > 0.0) || !std::isfinite(s)) return f;
    const double a = solve_shape(s);
    const double theta = mean / a;
    if (!(a > 0.0) || !(theta > 0.0) || !std::isfinite(a) || !std::isfinite(theta)) return f;
    f.shape = a;
    f.scale = theta;
    f.loglik = n * (-std::lgamma(a) - a * std::log(theta)) + (a - 1.0) * sum_log - sum / theta;
    f.valid = std::isfinite(f.loglik);
    return f;
}

} // namespace

GammaFit fit_gamma(const std::vector<double>& sample) {
    if (sample.size() < 50)
        throw FitError("gamma fit requires at least 50 finite samples, got " +
                       std::to_string(sample.size()));
    std::vector<double> x = sample;
    std::sort(x.begin(), x.end());
    for (double v : x)
        if (!std::isfinite(v)) throw FitError("gamma fit requires finite samples");
    const double n = static_cast<double>(x.size());
    const double xmin = x.front();
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= (n - 1.0);
    if (!(var > 0.0)) throw FitError("degenerate (constant) sample: gamma fit undefined");
    const double sd = std::sqrt(var);

    // Candidate locations: 0 when the data allow it, plus a geometric ladder
    // below the sample minimum. The ladder stays at least sd/4096 away from
    // the minimum, where the profile likelihood is well behaved.
    std::vector<double> candidates;
    if (xmin > 0.0) candidates.push_back(0.0);
    for (int k = 0; k < 16; ++k) {
        double offset = sd * std::pow(4096.0, -static_cast<double>(k) / 15.0);
        candidates.push_back(xmin - offset);
    }

    LocFit best;
    for (double loc : candidates) {
        LocFit f = fit_at_location(x, loc);
        if (f.valid && f.loglik > best.loglik) best = f;
    }
    if (!best.valid) throw FitError("gamma fit did not converge at any candidate location");

    GammaFit out;
    out.shape = best.shape;
    out.location = best.loc;
    out.scale = best.scale;

    // Chi-square on equal-probability bins under the fitted distribution.
    int bins = static_cast<int>(std::max<std::size_t>(5, x.size() / 50));
    bins = std::min(bins, 20);
    out.bins = bins;
    std::vector<double> edges; // interior edges, ascending
    for (int j = 1; j < bins; ++j) {
        double q = gamma_quantile(best.shape, static_cast<double>(j) / bins);
        edges.push_back(best.loc + best.scale * q);
    }
    const double expected = n / bins;
    double chi2 = 0.0;
    std::size_t prev = 0;
    for (int j = 0; j < bins; ++j) {
        std::size_t upto =
            (j + 1 < bins)
                ? static_cast<std::size_t>(
                      std::upper_bound(x.begin(), x.end(), edges[static_cast<std::size_t>(j)]) -
                      x.begin())
                : x.size();
        double observed = static_cast<double>(upto - prev);
        chi2 += (observed - expected) * (observed - expected) / expected;
        prev = upto;
    }
    out.chi_square = chi2;
    const int df = bins - 1 - 3;
    out.p_value = df > 0 ? gamma_q(df / 2.0, chi2 / 2.0) : 0.0;

    // Kolmogorov-Smirnov statistic against the fitted cdf.
    double ks = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double f = x[i] > best.loc ? gamma_p(best.shape, (x[i] - best.loc) / best.scale) : 0.0;
        double hi = static_cast<double>(i + 1) / n - f;
        double lo = f - static_cast<double>(i) / n;
        ks = std::max(ks, std::max(hi, lo));
    }
    out.ks_statistic = ks;
    return out;
}

GammaFit fit_gamma(const DistanceDistribution& d) { return fit_gamma(d.values()); }

} // namespace swp
