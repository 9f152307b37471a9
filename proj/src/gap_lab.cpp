#include "sincgap/gap_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "sincgap/errors.hpp"
#include "sincgap/gap_engine.hpp"
#include "sincgap/parallel.hpp"
#include "sincgap/polytope_volume.hpp"
#include "sincgap/quadrature.hpp"
#include "sincgap/sinc_core.hpp"
#include "sincgap/stats.hpp"
#include "sincgap/zero_finder.hpp"

namespace sincgap {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gap_inputs(double r, std::uint64_t trials, const GapOptions& options) {
    if (!(r >= 0.25)) {
        throw ParameterError("gap radius must be >= 0.25");
    }
    if (r < options.grid_step) {
        throw ParameterError("gap radius is below the grid resolution");
    }
    if (trials < 1000) {
        throw ParameterError("gap estimation needs at least 1000 trials");
    }
    if (options.window_margin < 0) {
        throw ParameterError("window margin must be >= 0");
    }
}

EngineConfig engine_config(double extent, int half_width, const GapOptions& options) {
    EngineConfig config;
    config.half_width = half_width;
    config.extent = extent;
    config.grid_step = options.grid_step;
    config.refine_tol = options.refine_tol;
    config.guard = options.guard;
    config.synthesize_tail = options.synthesize_tail;
    config.jobs = options.jobs;
    return config;
}

GapEstimate naive_estimate(double r, const std::vector<TrialOutcome>& outcomes, int M, StreamSeed seed) {
    GapEstimate e;
    e.r = r;
    e.trials = outcomes.size();
    e.method = GapMethod::naive;
    e.window_m = M;
    e.seed = seed;
    std::uint64_t rescanned = 0;
    for (const auto& o : outcomes) {
        e.hits += o.nearest >= r ? 1 : 0;
        rescanned += o.rescanned ? 1 : 0;
        e.unresolved += o.suspect ? 1 : 0;
    }
    const auto n = static_cast<double>(e.trials);
    e.p_hat = static_cast<double>(e.hits) / n;
    const Interval95 ci = clopper_pearson(e.hits, e.trials);
    e.ci_lo = ci.lo;
    e.ci_hi = ci.hi;
    e.ess = n;
    e.suspect_rate = static_cast<double>(rescanned) / n;
    return e;
}

double log_normal_density(double x) {
    return -0.5 * x * x - 0.5 * std::log(2.0 * kPi);
}

}  // namespace

std::string_view to_string(GapMethod m) {
    return m == GapMethod::naive ? "naive" : "tilted";
}

GapMethod parse_gap_method(std::string_view name) {
    if (name == "naive") return GapMethod::naive;
    if (name == "tilted") return GapMethod::tilted;
    throw ParameterError("unknown method '" + std::string(name) + "' (expected naive or tilted)");
}

int gap_window(double r, int margin) {
    return 2 * static_cast<int>(std::ceil(r)) + margin;
}

std::vector<double> default_shift(double r, int half_width, double scale) {
    const int core = 2 * static_cast<int>(std::ceil(r));
    if (core > half_width) {
        throw ParameterError("tilt profile is wider than the window");
    }
    std::vector<double> mu(static_cast<std::size_t>(2 * half_width + 1), 0.0);
    for (int n = -core; n <= core; ++n) {
        mu[static_cast<std::size_t>(n + half_width)] = scale;
    }
    return mu;
}

GapEstimate estimate_gap(double r, std::uint64_t trials, GapMethod method, std::optional<std::vector<double>> shift,
                         StreamSeed seed, const GapOptions& options) {
    check_gap_inputs(r, trials, options);
    const int M = gap_window(r, options.window_margin);
    EngineConfig config = engine_config(r, M, options);
    if (method == GapMethod::naive) {
        const GridEngine engine(config);
        return naive_estimate(r, engine.run(trials, seed), M, seed);
    }

    config.shift = shift ? std::move(*shift) : default_shift(r, M, options.tilt_scale);
    const GridEngine engine(config);
    const auto outcomes = engine.run(trials, seed);

    GapEstimate e;
    e.r = r;
    e.trials = trials;
    e.method = GapMethod::tilted;
    e.window_m = M;
    e.seed = seed;
    MeanAccumulator acc;
    double sum_sq = 0.0;
    std::uint64_t rescanned = 0;
    for (const auto& o : outcomes) {
        const bool hit = o.nearest >= r;
        const double v = hit ? o.weight : 0.0;
        acc.add(v);
        sum_sq += v * v;
        e.hits += hit ? 1 : 0;
        rescanned += o.rescanned ? 1 : 0;
        e.unresolved += o.suspect ? 1 : 0;
    }
    e.p_hat = acc.mean();
    const Interval95 ci = acc.interval();
    e.ci_lo = std::max(0.0, ci.lo);
    e.ci_hi = ci.hi;
    e.ess = sum_sq > 0.0 ? acc.sum * acc.sum / sum_sq : 0.0;
    e.suspect_rate = static_cast<double>(rescanned) / static_cast<double>(trials);
    if (e.ess < 30.0) {
        std::ostringstream msg;
        msg << "tilted estimator degenerated: ess " << e.ess << " < 30 (shift too aggressive or too few trials)";
        throw SamplingError(msg.str());
    }
    return e;
}

std::vector<GapEstimate> estimate_gap_curve(std::span<const double> radii, std::uint64_t trials, StreamSeed seed,
                                            const GapOptions& options) {
    if (radii.empty()) {
        throw ParameterError("need at least one radius");
    }
    for (double r : radii) {
        check_gap_inputs(r, trials, options);
    }
    const double extent = *std::max_element(radii.begin(), radii.end());
    const int M = gap_window(extent, options.window_margin);
    const GridEngine engine(engine_config(extent, M, options));
    const auto outcomes = engine.run(trials, seed);
    std::vector<GapEstimate> out;
    for (double r : radii) {
        out.push_back(naive_estimate(r, outcomes, M, seed));
    }
    return out;
}

GapEstimate tilted_weight_mean(double r, std::uint64_t trials, StreamSeed seed, const GapOptions& options) {
    check_gap_inputs(r, trials, options);
    const int M = gap_window(r, options.window_margin);
    EngineConfig config = engine_config(r, M, options);
    config.shift = default_shift(r, M, options.tilt_scale);
    config.scan = false;
    config.synthesize_tail = false;
    const auto outcomes = GridEngine(config).run(trials, seed);
    GapEstimate e;
    e.r = r;
    e.trials = trials;
    e.method = GapMethod::tilted;
    e.window_m = M;
    e.seed = seed;
    MeanAccumulator acc;
    double sum_sq = 0.0;
    for (const auto& o : outcomes) {
        acc.add(o.weight);
        sum_sq += o.weight * o.weight;
    }
    e.hits = trials;
    e.p_hat = acc.mean();
    const Interval95 ci = acc.interval();
    e.ci_lo = ci.lo;
    e.ci_hi = ci.hi;
    e.ess = acc.sum * acc.sum / sum_sq;
    return e;
}

double sign_event_bound(int N) {
    if (N < 1) {
        throw ParameterError("N must be >= 1");
    }
    return std::ldexp(1.0, -2 * N);
}

DecayFit fit_decay_rate(std::span<const GapEstimate> estimates) {
    DecayFit fit;
    std::vector<double> x, y, w;
    bool any_width = false;
    for (const auto& e : estimates) {
        if (e.ci_hi > e.ci_lo) {
            any_width = true;
        }
    }
    for (const auto& e : estimates) {
        if (!(e.p_hat > 0.0) || !(e.ci_lo > 0.0)) {
            fit.excluded.push_back(e.r);
            continue;
        }
        double weight = 1.0;
        if (any_width && e.ci_hi > e.ci_lo) {
            const double sd = (e.ci_hi - e.ci_lo) / (2.0 * kZ975 * e.p_hat);
            weight = 1.0 / (sd * sd);
        }
        x.push_back(e.r);
        y.push_back(std::log(e.p_hat));
        w.push_back(weight);
        fit.points.push_back({e.r, e.p_hat, weight});
    }
    if (x.size() < 4) {
        throw ParameterError("decay fit needs at least 4 points with p_hat > 0 and ci_lo > 0");
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*hi < 4.0 * *lo) {
        throw ParameterError("decay fit needs radii spanning a factor of at least 4");
    }
    const LineFit line = weighted_line_fit(x, y, w);
    fit.c_hat = -line.slope;
    fit.c_se = line.slope_se;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    return fit;
}

RademacherEnumeration rademacher_enumeration(int N, int M, double grid_step) {
    if (N < 1 || N > M) {
        throw ParameterError("rademacher enumeration needs 1 <= N <= M");
    }
    if (2 * M + 1 > 13) {
        throw ParameterError("rademacher enumeration is limited to 2M+1 <= 13 coefficients");
    }
    RademacherEnumeration out;
    out.N = N;
    out.M = M;
    out.total = std::uint64_t{1} << (2 * M + 1);
    out.heuristic = 2.0 * std::ldexp(1.0, -2 * N);
    for (std::uint64_t pattern = 0; pattern < out.total; ++pattern) {
        std::vector<double> a(static_cast<std::size_t>(2 * M + 1));
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = ((pattern >> i) & 1U) ? 1.0 : -1.0;
        }
        bool constant_core = true;
        for (int n = -N; n < N; ++n) {
            constant_core = constant_core && a[static_cast<std::size_t>(n + M)] == a[static_cast<std::size_t>(n + 1 + M)];
        }
        const SeriesSample sample{CoefficientVector(M, a, CoefficientModel::rademacher()), std::nullopt, "full"};
        const ZeroReport report = find_real_zeros(sample, -N, N, grid_step, 1e-12);
        const bool zero_free = report.zeros.empty() && !report.suspect();
        if (constant_core) {
            ++out.constant_core;
            out.constant_core_zero_free += zero_free ? 1 : 0;
        } else {
            ++out.mixed_core;
            out.mixed_core_missed += zero_free ? 1 : 0;
        }
        if (zero_free) {
            std::vector<int> signs(a.size());
            std::transform(a.begin(), a.end(), signs.begin(), [](double v) { return v > 0 ? 1 : -1; });
            out.zero_free_patterns.push_back(std::move(signs));
        }
    }
    out.zero_free_fraction = static_cast<double>(out.zero_free_patterns.size()) / static_cast<double>(out.total);
    return out;
}

EventEResult event_E_probability(int N, double epsilon, std::uint64_t trials, StreamSeed seed, int jobs) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ParameterError("epsilon must be finite and > 0");
    }
    if (N < 0 || 4 * N + 1 > 200) {
        throw ParameterError("event E needs 0 <= N <= 49");
    }
    const int K = 4 * N + 1;
    EventEResult out;
    out.N = N;
    out.epsilon = epsilon;
    out.vol_used = volume_recursion(K, epsilon).volume;
    const double a_max = 1.0 + epsilon;
    out.analytic_lower = std::exp(-0.5 * K * std::log(2.0 * kPi) - 0.5 * K * a_max * a_max) * out.vol_used;
    out.paper_literal = std::exp(-N * std::log(2.0 * kPi) - N * a_max * a_max) * out.vol_used;
    if (N > 3) {
        return out;
    }
    if (trials < 10000) {
        throw ParameterError("event E sampling needs at least 1e4 trials");
    }
    out.sampled = true;
    out.trials = trials;

    struct Partial {
        std::uint64_t direct = 0;
        MeanAccumulator weighted;
    };
    const double log_box = K * std::log(2.0 * epsilon);
    const auto parts = parallel_chunks<Partial>(trials, 4096, jobs, [&](std::size_t begin, std::size_t end) {
        Partial p;
        for (std::size_t t = begin; t < end; ++t) {
            const StreamSeed s{seed.master_seed, seed.stream_index + t};
            // Direct Gaussian draw of a_{-2N..2N}.
            double B = 0.0;
            bool inside = true;
            for (int n = -2 * N; n <= 2 * N && inside; ++n) {
                const double b = (draw_coefficient(CoefficientModel::gaussian(), s, n) - 1.0) * ((n % 2 == 0) ? 1.0 : -1.0);
                B += b;
                inside = std::fabs(b) <= epsilon && std::fabs(B) <= epsilon;
            }
            p.direct += inside ? 1 : 0;

            // Uniform draw of b in the box, weighted by the Gaussian density of a.
            B = 0.0;
            inside = true;
            double log_density = 0.0;
            for (int i = 0; i < K && inside; ++i) {
                const auto block = random_block(s.master_seed, s.stream_index, RandomDomain::uniform_cube,
                                                static_cast<std::uint64_t>(i / 2));
                const double b = epsilon * (2.0 * to_unit_closed_open(block[static_cast<std::size_t>(i % 2)]) - 1.0);
                B += b;
                inside = std::fabs(B) <= epsilon;
                const int n = i - 2 * N;
                log_density += log_normal_density(1.0 + ((n % 2 == 0) ? b : -b));
            }
            p.weighted.add(inside ? std::exp(log_box + log_density) : 0.0);
        }
        return p;
    });
    MeanAccumulator acc;
    for (const auto& p : parts) {
        out.direct_hits += p.direct;
        acc.merge(p.weighted);
    }
    out.p_hat = acc.mean();
    const Interval95 ci = acc.interval();
    out.ci_lo = std::max(0.0, ci.lo);
    out.ci_hi = ci.hi;
    out.direct_p = static_cast<double>(out.direct_hits) / static_cast<double>(trials);
    const Interval95 dci = clopper_pearson(out.direct_hits, trials);
    out.direct_ci_lo = dci.lo;
    out.direct_ci_hi = dci.hi;
    return out;
}

namespace {

// sinc(x_g - n) for |n| <= 2N on a grid of [-N, N]; row n + 2N, column g.
Eigen::MatrixXd core_sinc_table(int N, double grid_step) {
    const auto grid = uniform_grid(-N, N, grid_step);
    Eigen::MatrixXd table(4 * N + 1, static_cast<Eigen::Index>(grid.size()));
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (int n = -2 * N; n <= 2 * N; ++n) {
            table(n + 2 * N, static_cast<Eigen::Index>(g)) = sinc(grid[g] - n);
        }
    }
    return table;
}

double f1_sup_from_table(const Eigen::MatrixXd& table, std::span<const double> b, int N) {
    Eigen::RowVectorXd c(4 * N + 1);
    for (int n = -2 * N; n <= 2 * N; ++n) {
        c(n + 2 * N) = ((n % 2 == 0) ? 1.0 : -1.0) * b[static_cast<std::size_t>(n + 2 * N)];
    }
    return (c * table).cwiseAbs().maxCoeff();
}

}  // namespace

double f1_sup(std::span<const double> b, int N, double grid_step) {
    if (N < 1 || b.size() != static_cast<std::size_t>(4 * N + 1)) {
        throw ParameterError("f1_sup needs N >= 1 and 4N+1 values b_{-2N..2N}");
    }
    return f1_sup_from_table(core_sinc_table(N, grid_step), b, N);
}

F1SupCheck f1_sup_bound_check(int N, double epsilon, std::uint64_t trials, StreamSeed seed, double K, int jobs) {
    if (N < 1 || !(epsilon > 0.0) || !(K > 0.0)) {
        throw ParameterError("f1_sup_bound_check needs N >= 1, eps > 0, K > 0");
    }
    if (trials < 1000) {
        throw ParameterError("f1_sup_bound_check needs at least 1000 conditioned samples");
    }
    const Eigen::MatrixXd table = core_sinc_table(N, 0.01);
    struct Partial {
        std::uint64_t within = 0;
        double max_ratio = 0.0;
    };
    const auto parts = parallel_chunks<Partial>(trials, 256, jobs, [&](std::size_t begin, std::size_t end) {
        Partial p;
        std::vector<double> b(static_cast<std::size_t>(4 * N + 1));
        for (std::size_t t = begin; t < end; ++t) {
            double B = 0.0;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const auto block = random_block(seed.master_seed, seed.stream_index + t, RandomDomain::uniform_cube, i);
                const double lo = std::max(-epsilon, -epsilon - B);
                const double hi = std::min(epsilon, epsilon - B);
                if ((block[1] >> 62) == 0) {
                    b[i] = ((block[1] >> 61) & 1U) ? hi : lo;
                } else {
                    b[i] = lo + (hi - lo) * to_unit_closed_open(block[0]);
                }
                B += b[i];
            }
            const double ratio = f1_sup_from_table(table, b, N) / epsilon;
            p.within += ratio <= K ? 1 : 0;
            p.max_ratio = std::max(p.max_ratio, ratio);
        }
        return p;
    });
    F1SupCheck out;
    out.N = N;
    out.epsilon = epsilon;
    out.K = K;
    out.samples = trials;
    std::uint64_t within = 0;
    for (const auto& p : parts) {
        within += p.within;
        out.max_ratio = std::max(out.max_ratio, p.max_ratio);
    }
    out.fraction_within = static_cast<double>(within) / static_cast<double>(trials);
    return out;
}

namespace {

// f(t) = sqrt(t - a) / t^2
double moment_term(double t, double a) {
    return std::sqrt(t - a) / (t * t);
}

// sum_{n >= T} f(n): integral plus Euler-Maclaurin corrections (T - a >= 1e5, so two suffice).
double moment_tail(double T, double a) {
    const double s = std::sqrt(T - a);
    const double integral = s / T + (kPi / 2.0 - std::atan(s / std::sqrt(a))) / std::sqrt(a);
    const double derivative = 0.5 / (s * T * T) - 2.0 * s / (T * T * T);
    return integral + 0.5 * moment_term(T, a) - derivative / 12.0;
}

}  // namespace

double tail_moment_exact(int N, std::optional<std::int64_t> L) {
    if (N < 1) {
        throw ParameterError("tail_moment_exact needs N >= 1");
    }
    const std::int64_t first = 2 * static_cast<std::int64_t>(N) + 1;
    if (L && *L < first) {
        throw ParameterError("tail_moment_exact needs L > 2N");
    }
    const double a = 2.0 * N;
    constexpr std::int64_t kDirect = 2000000;
    const std::int64_t direct_end = L ? std::min(*L, first + kDirect - 1) : first + kDirect - 1;
    // Sum from the small end upwards so the tiny terms are not lost.
    double sum = 0.0;
    for (std::int64_t n = direct_end; n >= first; --n) {
        sum += moment_term(static_cast<double>(n), a);
    }
    if (!L) {
        sum += moment_tail(static_cast<double>(direct_end + 1), a);
    } else if (*L > direct_end) {
        sum += moment_tail(static_cast<double>(direct_end + 1), a) - moment_tail(static_cast<double>(*L + 1), a);
    }
    return std::sqrt(2.0 / kPi) * sum;
}

MomentEstimate tail_moment_mc(int N, std::int64_t L, std::uint64_t trials, StreamSeed seed, int jobs) {
    if (N < 1 || L <= 2 * static_cast<std::int64_t>(N)) {
        throw ParameterError("tail_moment_mc needs N >= 1 and L > 2N");
    }
    if (trials < 2) {
        throw ParameterError("tail_moment_mc needs at least 2 trials");
    }
    const auto parts = parallel_chunks<MeanAccumulator>(trials, 64, jobs, [&](std::size_t begin, std::size_t end) {
        MeanAccumulator acc;
        for (std::size_t t = begin; t < end; ++t) {
            const StreamSeed s{seed.master_seed, seed.stream_index + t};
            double C = 0.0;
            double total = 0.0;
            for (std::int64_t n = 2 * static_cast<std::int64_t>(N) + 1; n <= L; ++n) {
                const double a = standard_normal_draw(s, RandomDomain::coefficients, coefficient_slot(n));
                C += (n % 2 == 0) ? a : -a;
                total += std::fabs(C) / (static_cast<double>(n) * static_cast<double>(n));
            }
            acc.add(total);
        }
        return acc;
    });
    MeanAccumulator acc;
    for (const auto& p : parts) {
        acc.merge(p);
    }
    MomentEstimate out;
    out.mean = acc.mean();
    out.se = acc.standard_error();
    const Interval95 ci = acc.interval();
    out.ci_lo = ci.lo;
    out.ci_hi = ci.hi;
    out.L = L;
    out.trials = trials;
    return out;
}

double tail_sup_floor(int N, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw ParameterError("epsilon must be > 0");
    }
    return 1.0 - (8.0 / kPi) * tail_moment_exact(N, std::nullopt) / epsilon;
}

TailSupEstimate tail_sup_probability(int N, double epsilon, std::uint64_t trials, StreamSeed seed,
                                     const GapOptions& options) {
    if (N < 1 || !(epsilon > 0.0)) {
        throw ParameterError("tail_sup_probability needs N >= 1 and eps > 0");
    }
    if (trials < 1000) {
        throw ParameterError("tail_sup_probability needs at least 1000 trials");
    }
    TailSupEstimate out;
    out.N = N;
    out.epsilon = epsilon;
    out.trials = trials;
    out.window_m = 2 * N + options.window_margin;
    EngineConfig config = engine_config(N, out.window_m, options);
    config.grid_step = std::min(options.grid_step, 0.01);
    config.zero_inner = 2 * N;
    config.scan = false;
    const auto outcomes = GridEngine(config).run(trials, seed);
    for (const auto& o : outcomes) {
        out.hits += o.sup_abs <= epsilon ? 1 : 0;
    }
    out.p_hat = static_cast<double>(out.hits) / static_cast<double>(trials);
    const Interval95 ci = clopper_pearson(out.hits, trials);
    out.ci_lo = ci.lo;
    out.ci_hi = ci.hi;
    out.floor = tail_sup_floor(N, epsilon);
    return out;
}

Certificate lower_bound_certificate(int N, double epsilon, const SeriesSample& sample, double grid_step) {
    if (!(epsilon > 0.0)) {
        throw ParameterError("epsilon must be > 0");
    }
    const Decomposition parts = decompose(sample, N);
    Certificate c;
    c.inf_f0 = INFINITY;
    for (double x : uniform_grid(-N, N, grid_step)) {
        c.inf_f0 = std::min(c.inf_f0, eval_series_real(parts.f0, x).value);
        c.sup_f1 = std::max(c.sup_f1, std::fabs(eval_series_real(parts.f1, x).value));
        c.sup_f2 = std::max(c.sup_f2, std::fabs(eval_series_real(parts.f2, x).value));
    }
    c.margin = c.inf_f0 - c.sup_f1 - c.sup_f2;
    c.certified = c.sup_f1 <= epsilon && c.sup_f2 <= epsilon && c.margin > 0.0;
    const ZeroReport report = find_real_zeros(sample, -N, N, std::min(grid_step, 0.05), 1e-12);
    c.zero_free = report.zeros.empty() && !report.suspect();
    return c;
}

double kac_rice_real_intensity() {
    return 1.0 / std::numbers::sqrt3;
}

IntensityEstimate real_zero_intensity(double half_length, std::uint64_t samples, StreamSeed seed,
                                      const GapOptions& options) {
    if (!(half_length >= 1.0) || samples < 2) {
        throw ParameterError("real_zero_intensity needs half_length >= 1 and at least 2 samples");
    }
    const int M = gap_window(half_length, options.window_margin);
    const auto outcomes = GridEngine(engine_config(half_length, M, options)).run(samples, seed);
    MeanAccumulator acc;
    IntensityEstimate out;
    std::uint64_t rescanned = 0;
    for (const auto& o : outcomes) {
        acc.add(o.count);
        out.zeros += static_cast<std::uint64_t>(o.count);
        rescanned += o.rescanned ? 1 : 0;
    }
    const double length = 2.0 * half_length;
    out.samples = samples;
    out.intensity = acc.mean() / length;
    out.se = acc.standard_error() / length;
    out.ci_lo = out.intensity - kZ975 * out.se;
    out.ci_hi = out.intensity + kZ975 * out.se;
    out.suspect_rate = static_cast<double>(rescanned) / static_cast<double>(samples);
    return out;
}

IntensityEstimate strip_intensity(double y_lo, double y_hi, double half_length, std::uint64_t samples,
                                  StreamSeed seed, int quadrature_points, const GapOptions& options) {
    const Rectangle rect{-half_length, half_length, y_lo, y_hi};
    rect.validate();
    if (samples < 2) {
        throw ParameterError("strip_intensity needs at least 2 samples");
    }
    const int M = gap_window(half_length, options.window_margin);
    // Room for the largest dilation (1.01) of the rectangle.
    const double far = std::max(std::fabs(y_lo), std::fabs(y_hi));
    const double radius = 1.02 * std::hypot(half_length, far);
    const auto parts = parallel_chunks<MeanAccumulator>(samples, 16, options.jobs, [&](std::size_t begin, std::size_t end) {
        MeanAccumulator acc;
        for (std::size_t t = begin; t < end; ++t) {
            const StreamSeed s{seed.master_seed, seed.stream_index + t};
            const SeriesSample sample = make_sample(CoefficientModel::gaussian(), M, s, radius);
            acc.add(static_cast<double>(*count_zeros_rectangle(sample, rect, quadrature_points, s.stream_index).count));
        }
        return acc;
    });
    MeanAccumulator acc;
    for (const auto& p : parts) {
        acc.merge(p);
    }
    const double area = 2.0 * half_length * (y_hi - y_lo);
    IntensityEstimate out;
    out.samples = samples;
    out.zeros = static_cast<std::uint64_t>(std::llround(acc.sum));
    out.intensity = acc.mean() / area;
    out.se = acc.standard_error() / area;
    out.ci_lo = out.intensity - kZ975 * out.se;
    out.ci_hi = out.intensity + kZ975 * out.se;
    return out;
}

double strip_average_S(double y_lo, double y_hi) {
    if (!(0.0 < y_lo && y_lo < y_hi)) {
        throw ParameterError("strip_average_S needs 0 < y_lo < y_hi");
    }
    const auto& rule = GaussLegendre20::get();
    double sum = 0.0;
    for (int i = 0; i < GaussLegendre20::kPoints; ++i) {
        const double y = 0.5 * (y_lo + y_hi) + 0.5 * (y_hi - y_lo) * rule.nodes[static_cast<std::size_t>(i)];
        sum += rule.weights[static_cast<std::size_t>(i)] * feldheim_S(y);
    }
    return 0.5 * sum;
}

}  // namespace sincgap
