#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace swp {

struct SurvivalPoint {
    double value = 0.0;
    double fraction = 0.0; // share of finite pairs with distance > value
};

struct SurvivalCurve {
    std::vector<SurvivalPoint> points; // ascending by value, fractions nonincreasing
};

// Multiset of finite pairwise distances; unreachable pairs are counted, not stored.
class DistanceDistribution {
public:
    DistanceDistribution() = default;

    // Partitions raw values: finite entries sorted ascending, +inf counted separately.
    explicit DistanceDistribution(std::vector<double> raw);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t infinite_count() const { return infinite_; }
    bool empty() const { return values_.empty(); }

    // Left-continuous inverse cdf: smallest value x with p <= F(x).
    double quantile(double p) const;
    double effective_diameter(double threshold = 0.95) const;
    double diameter() const; // max finite value
    double mean() const;     // mean of finite values
    SurvivalCurve survival() const;

private:
    std::vector<double> values_;
    std::size_t infinite_ = 0;
};

struct GammaFit {
    double shape = 0.0;
    double location = 0.0;
    double scale = 0.0;
    double chi_square = 0.0;
    double p_value = 0.0;
    double ks_statistic = 0.0;
    int bins = 0;
};

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Three-parameter gamma fit: shape/scale by maximum likelihood at each
// candidate location on a data-driven grid (0 included when admissible),
// best location by likelihood. Goodness of fit: chi-square on
// equal-probability bins plus the Kolmogorov-Smirnov statistic.
GammaFit fit_gamma(const std::vector<double>& sample);
GammaFit fit_gamma(const DistanceDistribution& d);

// Special functions backing the fit; exposed for direct testing.
double digamma(double x);
double gamma_p(double a, double x); // regularized lower incomplete gamma
double gamma_q(double a, double x); // regularized upper incomplete gamma
double gamma_quantile(double a, double p); // unit-scale inverse of gamma_p

} // namespace swp
