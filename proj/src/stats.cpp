#include "sincgap/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/beta.hpp>

#include "sincgap/errors.hpp"

namespace sincgap {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

Interval95 clopper_pearson(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0 || successes > trials) {
        throw ParameterError("clopper_pearson needs 0 <= successes <= trials, trials > 0");
    }
    const auto k = static_cast<double>(successes);
    const auto n = static_cast<double>(trials);
    Interval95 out{0.0, 1.0};
    if (successes > 0) {
        out.lo = boost::math::quantile(boost::math::beta_distribution<double>(k, n - k + 1.0), 0.025);
    }
    if (successes < trials) {
        out.hi = boost::math::quantile(boost::math::beta_distribution<double>(k + 1.0, n - k), 0.975);
    }
    return out;
}

double MeanAccumulator::standard_error() const {
    if (count < 2.0) {
        return 0.0;
    }
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - count * m * m) / (count - 1.0));
    return std::sqrt(var / count);
}

Interval95 MeanAccumulator::interval() const {
    const double m = mean();
    const double half = kZ975 * standard_error();
    return {m - half, m + half};
}

LineFit weighted_line_fit(std::span<const double> x, std::span<const double> y, std::span<const double> w) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n || w.size() != n) {
        throw ParameterError("weighted_line_fit needs >= 2 matching points");
    }
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i]) || !std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw ParameterError("weighted_line_fit needs finite points and positive weights");
        }
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    const double xm = sx / sw;
    const double ym = sy / sw;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += w[i] * dx * dx;
        sxy += w[i] * dx * dy;
        syy += w[i] * dy * dy;
    }
    if (!(sxx > 0.0)) {
        throw ParameterError("weighted_line_fit needs at least two distinct x values");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    // Weights are inverse variances; inflate by the reduced chi-square when the scatter exceeds them.
    const double chi2 = std::max(0.0, syy - sxy * sxy / sxx);
    const double dispersion = n > 2 ? std::max(1.0, chi2 / static_cast<double>(n - 2)) : 1.0;
    fit.slope_se = std::sqrt(dispersion / sxx);
    fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
    return fit;
}

}  // namespace sincgap
