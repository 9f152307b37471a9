#pragma once

#include <cstdint>
#include <span>

namespace sincgap {

struct Interval95 {
    double lo = 0.0;
    double hi = 0.0;
};

/// Two-sided 97.5% normal quantile.
inline constexpr double kZ975 = 1.959963984540054;

double normal_cdf(double x);

/// Exact (Clopper-Pearson) 95% interval for a binomial proportion.
Interval95 clopper_pearson(std::uint64_t successes, std::uint64_t trials);

/// Running first and second moments of a sample, with a normal-approximation interval.
struct MeanAccumulator {
    double count = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double v) {
        count += 1.0;
        sum += v;
        sum_sq += v * v;
    }
    void merge(const MeanAccumulator& o) {
        count += o.count;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
    double mean() const { return count > 0.0 ? sum / count : 0.0; }
    /// Standard error of the mean.
    double standard_error() const;
    Interval95 interval() const;
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double r_squared = 0.0;
};

/// Weighted least squares y ~ intercept + slope x; slope_se from the weights taken as inverse variances.
LineFit weighted_line_fit(std::span<const double> x, std::span<const double> y, std::span<const double> w);

}  // namespace sincgap
