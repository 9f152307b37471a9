#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sincgap/coeff_models.hpp"
#include "sincgap/series_eval.hpp"

namespace sincgap {

enum class GapMethod { naive, tilted };
std::string_view to_string(GapMethod m);
GapMethod parse_gap_method(std::string_view name);

struct GapOptions {
    double grid_step = 0.05;
    double refine_tol = 1e-10;
    double guard = 1.0;
    int window_margin = kDefaultWindowMargin;
    /// Multiplies the default tilt profile mu_n = 1 on |n| <= 2 ceil(r).
    double tilt_scale = 1.0;
    bool synthesize_tail = true;
    int jobs = 1;
};

/// Explicit window used for a gap at radius r: M = 2 ceil(r) + margin.
int gap_window(double r, int margin);

/// mu_n = scale on |n| <= 2 ceil(r), 0 elsewhere in the window |n| <= half_width.
std::vector<double> default_shift(double r, int half_width, double scale);

struct GapEstimate {
    double r = 0.0;
    std::uint64_t trials = 0;
    GapMethod method = GapMethod::naive;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    /// Effective sample size (sum w I)^2 / sum (w I)^2 of the contributing trials; = trials for naive.
    double ess = 0.0;
    int window_m = 0;
    StreamSeed seed;
    /// Fraction of trials whose scan needed a finer grid.
    double suspect_rate = 0.0;
    /// Trials without a zero in (-r, r).
    std::uint64_t hits = 0;
    /// Trials still ambiguous after every refinement (counted as having a zero).
    std::uint64_t unresolved = 0;
};

/**
 * P(no real zero in (-r, r)). Trial t uses stream seed.stream_index + t.
 * naive: Clopper-Pearson interval. tilted: coefficients from the mixture
 * 1/2 N(mu, I) + 1/2 N(-mu, I), weight exp(|mu|^2/2)/cosh(mu . a), normal interval.
 */
GapEstimate estimate_gap(double r, std::uint64_t trials, GapMethod method, std::optional<std::vector<double>> shift,
                         StreamSeed seed, const GapOptions& options = {});

/// Naive estimates at every r from one set of trials (common random numbers): exactly non-increasing in r.
std::vector<GapEstimate> estimate_gap_curve(std::span<const double> radii, std::uint64_t trials, StreamSeed seed,
                                            const GapOptions& options = {});

/// Tilted estimator with the no-zero indicator replaced by 1; its expectation is exactly 1.
GapEstimate tilted_weight_mean(double r, std::uint64_t trials, StreamSeed seed, const GapOptions& options = {});

/// 2 (1/2)^{2N+1} = 4^{-N}.
double sign_event_bound(int N);

struct DecayPoint {
    double r = 0.0;
    double p_hat = 0.0;
    double weight = 0.0;
};

struct DecayFit {
    std::vector<DecayPoint> points;
    double c_hat = 0.0;
    double c_se = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    /// Radii dropped because p_hat or ci_lo was 0.
    std::vector<double> excluded;
};

/**
 * Weighted least squares of log p_hat on r; weights 1/var(log p_hat) with
 * var estimated from the CI width. Points with zero-width intervals get unit weight.
 */
DecayFit fit_decay_rate(std::span<const GapEstimate> estimates);

struct RademacherEnumeration {
    int N = 0;
    int M = 0;
    std::uint64_t total = 0;
    /// Zero-free windows, each listed as a_{-M..M}.
    std::vector<std::vector<int>> zero_free_patterns;
    std::uint64_t mixed_core = 0;
    /// Mixed-core windows without a detected zero (must be 0).
    std::uint64_t mixed_core_missed = 0;
    std::uint64_t constant_core = 0;
    std::uint64_t constant_core_zero_free = 0;
    double zero_free_fraction = 0.0;
    /// 2 (1/2)^{2N}, the heuristic that conditions only on |n| <= N.
    double heuristic = 0.0;
};

/// All 2^{2M+1} sign windows (2M+1 <= 13), zeros searched on (-N, N).
RademacherEnumeration rademacher_enumeration(int N, int M, double grid_step = 0.01);

struct EventEResult {
    int N = 0;
    double epsilon = 0.0;
    std::uint64_t trials = 0;
    bool sampled = false;
    /// Importance-sampling estimate of P(E) (proposal: uniform box for b).
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    /// Plain Gaussian Monte Carlo on the same trial count.
    std::uint64_t direct_hits = 0;
    double direct_p = 0.0;
    double direct_ci_lo = 0.0;
    double direct_ci_hi = 0.0;
    /// (2 pi)^{-(4N+1)/2} exp(-(4N+1)(1+eps)^2/2) Vol(V_{4N+1}).
    double analytic_lower = 0.0;
    /// (2 pi)^{-N} exp(-N (1+eps)^2) Vol(V_{4N+1}), the bound as printed.
    double paper_literal = 0.0;
    double vol_used = 0.0;
};

/**
 * E = { |b_n| <= eps and |B_n| <= eps for |n| <= 2N },  b_n = (a_n - 1)(-1)^n.
 * Sampled for N <= 3 (trials >= 1e4); larger N only gets the analytic bound.
 */
EventEResult event_E_probability(int N, double epsilon, std::uint64_t trials, StreamSeed seed, int jobs = 1);

struct F1SupCheck {
    int N = 0;
    double epsilon = 0.0;
    double K = 0.0;
    std::uint64_t samples = 0;
    double fraction_within = 0.0;
    /// max over samples of sup |f1| / eps
    double max_ratio = 0.0;
};

/// sup over a grid of [-N, N] of |sum_{|n|<=2N} (-1)^n b_n sinc(x - n)|.
double f1_sup(std::span<const double> b, int N, double grid_step = 0.01);

/**
 * Samples b inside E (each b_n uniform on the interval the constraints leave,
 * with a quarter of the draws pushed to an endpoint) and reports how often
 * sup |f1| <= K eps.
 */
F1SupCheck f1_sup_bound_check(int N, double epsilon, std::uint64_t trials, StreamSeed seed, double K = 10.0,
                              int jobs = 1);

/// sqrt(2/pi) sum_{n=2N+1}^{L} sqrt(n - 2N) / n^2; L = nullopt means infinity.
double tail_moment_exact(int N, std::optional<std::int64_t> L);

struct MomentEstimate {
    double mean = 0.0;
    double se = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::int64_t L = 0;
    std::uint64_t trials = 0;
};

/// Monte Carlo of E sum_{n=2N+1}^{L} |C_n| / n^2 with C_n = sum_{k=2N+1}^{n} (-1)^k a_k.
MomentEstimate tail_moment_mc(int N, std::int64_t L, std::uint64_t trials, StreamSeed seed, int jobs = 1);

/// Markov floor 1 - (8/pi) tail_moment_exact(N, inf) / eps for P(sup_{[-N,N]} |f2| <= eps).
double tail_sup_floor(int N, double epsilon);

struct TailSupEstimate {
    int N = 0;
    double epsilon = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double floor = 0.0;
    int window_m = 0;
};

/// P(sup_{[-N,N]} |f2| <= eps), f2 = coefficients beyond 2N plus the synthesised tail.
TailSupEstimate tail_sup_probability(int N, double epsilon, std::uint64_t trials, StreamSeed seed,
                                     const GapOptions& options = {});

struct Certificate {
    bool certified = false;
    double inf_f0 = 0.0;
    double sup_f1 = 0.0;
    double sup_f2 = 0.0;
    /// inf f0 - sup |f1| - sup |f2|
    double margin = 0.0;
    /// Cross-check: find_real_zeros on the full sample over (-N, N) found nothing.
    bool zero_free = false;
};

/// certified iff sup|f1| <= eps, sup|f2| <= eps and inf f0 - sup|f1| - sup|f2| > 0 on a grid of [-N, N].
Certificate lower_bound_certificate(int N, double epsilon, const SeriesSample& sample, double grid_step = 0.01);

/// Kac-Rice intensity of real zeros for covariance sinc: (1/pi) sqrt(pi^2/3) = 1/sqrt(3).
double kac_rice_real_intensity();

struct IntensityEstimate {
    double intensity = 0.0;
    double se = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t zeros = 0;
    double suspect_rate = 0.0;
};

/// Mean number of real zeros per unit length on (-half_length, half_length).
IntensityEstimate real_zero_intensity(double half_length, std::uint64_t samples, StreamSeed seed,
                                      const GapOptions& options = {});

/// Mean number of zeros per unit area in (-half_length, half_length) x (y_lo, y_hi), by the argument principle.
IntensityEstimate strip_intensity(double y_lo, double y_hi, double half_length, std::uint64_t samples,
                                  StreamSeed seed, int quadrature_points = 80, const GapOptions& options = {});

/// Average of feldheim_S over [y_lo, y_hi] (0 < y_lo < y_hi).
double strip_average_S(double y_lo, double y_hi);

}  // namespace sincgap
