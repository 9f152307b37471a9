#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sincgap/coeff_models.hpp"
#include "sincgap/sinc_core.hpp"
#include "sincgap/tail_synthesis.hpp"

namespace sincgap {

/**
 * A realisation of f(z) = sum a_n sinc(z - n): the explicit window a_{-M..M}
 * plus, optionally, a synthesised Gaussian remainder for |n| > M.
 *
 * Tags in use: "full", "f0", "f1-shifted", "f2-tail".
 */
struct SeriesSample {
    CoefficientVector coefficients;
    std::optional<TailModes> tail;
    std::string tag = "full";

    int half_width() const { return coefficients.half_width(); }
};

/// Coefficient-wise sum; windows must match and tails (if any) must share M and R.
SeriesSample operator+(const SeriesSample& a, const SeriesSample& b);

/// Window M = 2N + margin.
constexpr int window_half_width(int N, int margin) { return 2 * N + margin; }

/// Default explicit margin beyond 2N used by the Monte Carlo drivers.
inline constexpr int kDefaultWindowMargin = 16;

/**
 * Sample of `model` on |n| <= half_width. For Gaussian coefficients and a
 * `tail_radius`, the remainder |n| > half_width is synthesised (valid for
 * |z| <= tail_radius).
 */
SeriesSample make_sample(const CoefficientModel& model, int half_width, StreamSeed seed,
                         std::optional<double> tail_radius = std::nullopt);

struct SeriesValue {
    std::complex<double> value;
    std::optional<std::complex<double>> derivative;
};

SeriesValue eval_series(const SeriesSample& sample, std::complex<double> z, bool want_derivative);

/// Real-axis value and derivative.
SincPair eval_series_real(const SeriesSample& sample, double x);

/// sqrt(sum_{|n|>M} sinc^2(x - n)): standard deviation of the truncated tail at x.
double tail_std(int M, double x);

/// max of tail_std(M, x) over a 0.01-grid of [-N, N].
double sup_tail_std(int M, int N);

/// Smallest K with sup_{|x|<=N} tail_std(2N + K, x) <= budget, for pure truncation.
long truncation_margin_for_budget(int N, double budget);

/// f = f0 + f1 + f2 with f0 the all-ones window |n| <= 2N, f1 = (a_n - 1) on |n| <= 2N,
/// f2 the coefficients beyond 2N together with any synthesised tail.
struct Decomposition {
    SeriesSample f0;
    SeriesSample f1;
    SeriesSample f2;
};

Decomposition decompose(const SeriesSample& sample, int N);

struct CauchyProbeRow {
    int half_width = 0;
    double median = 0.0;
};

/**
 * For each trial, S_L = sum_{n=1}^{L} a_n / n; reports, for each M in
 * half_widths, the median over trials of max_{L<=M} |S_L|.
 */
std::vector<CauchyProbeRow> cauchy_probe(std::span<const int> half_widths, int trials, StreamSeed seed,
                                         const CoefficientModel& model = CoefficientModel::cauchy(), int jobs = 1);

}  // namespace sincgap
