#include "sincgap/series_eval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/trigamma.hpp>

#include "sincgap/errors.hpp"
#include "sincgap/parallel.hpp"
#include "sincgap/special.hpp"

namespace sincgap {

namespace {

constexpr double kPi = std::numbers::pi;

// The factored form pays off beyond this many live terms.
constexpr std::size_t kFactoredMinTerms = 8;
constexpr double kNearInteger = 1e-3;

void check_tail_reach(const SeriesSample& sample, double modulus) {
    if (sample.tail && modulus > sample.tail->radius * (1.0 + 1e-12)) {
        throw DomainError("evaluation point lies outside the synthesised tail radius");
    }
}

}  // namespace

SeriesSample operator+(const SeriesSample& a, const SeriesSample& b) {
    if (a.half_width() != b.half_width()) {
        throw ParameterError("cannot add samples with different windows");
    }
    std::vector<double> values(a.coefficients.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = a.coefficients.values()[i] + b.coefficients.values()[i];
    }
    SeriesSample out{CoefficientVector(a.half_width(), std::move(values), a.coefficients.model(), a.coefficients.seed()),
                     a.tail, "sum"};
    if (b.tail) {
        if (!out.tail) {
            out.tail = b.tail;
        } else {
            if (out.tail->half_width != b.tail->half_width || out.tail->radius != b.tail->radius) {
                throw ParameterError("cannot add tails synthesised for different windows or radii");
            }
            auto& c = out.tail->coefficients;
            c.resize(std::max(c.size(), b.tail->coefficients.size()), 0.0);
            for (std::size_t k = 0; k < b.tail->coefficients.size(); ++k) {
                c[k] += b.tail->coefficients[k];
            }
        }
    }
    return out;
}

SeriesSample make_sample(const CoefficientModel& model, int half_width, StreamSeed seed,
                         std::optional<double> tail_radius) {
    SeriesSample sample{sample_coefficients(model, half_width, seed), std::nullopt, "full"};
    if (tail_radius) {
        if (model.kind != CoefficientKind::gaussian_real) {
            throw ParameterError("tail synthesis is only available for Gaussian coefficients");
        }
        TailModes tail = TailModel::get(half_width, *tail_radius)->sample(seed);
        for (double& v : tail.coefficients) {
            v *= model.scale;
        }
        sample.tail = std::move(tail);
    }
    return sample;
}

SeriesValue eval_series(const SeriesSample& sample, std::complex<double> z, bool want_derivative) {
    check_tail_reach(sample, std::abs(z));
    const auto a = sample.coefficients.values();
    const int M = sample.half_width();
    std::complex<double> value = 0.0;
    std::complex<double> derivative = 0.0;

    const double near = std::abs(z - std::nearbyint(z.real()));
    if (a.size() > kFactoredMinTerms && near >= kNearInteger) {
        std::complex<double> s1 = 0.0;
        std::complex<double> s2 = 0.0;
        for (int n = -M; n <= M; ++n) {
            const double c = (n % 2 == 0) ? a[static_cast<std::size_t>(n + M)] : -a[static_cast<std::size_t>(n + M)];
            const std::complex<double> inv = 1.0 / (z - static_cast<double>(n));
            s1 += c * inv;
            s2 += c * inv * inv;
        }
        const std::complex<double> s = sin_pi(z);
        value = s * s1 / kPi;
        if (want_derivative) {
            derivative = cos_pi(z) * s1 - s * s2 / kPi;
        }
    } else {
        for (int n = -M; n <= M; ++n) {
            const double c = a[static_cast<std::size_t>(n + M)];
            const std::complex<double> t = z - static_cast<double>(n);
            value += c * sinc(t);
            if (want_derivative) {
                derivative += c * sinc_derivative(t);
            }
        }
    }

    if (sample.tail) {
        std::complex<double> tail_derivative = 0.0;
        value += eval_tail(*sample.tail, z, want_derivative ? &tail_derivative : nullptr);
        derivative += tail_derivative;
    }
    SeriesValue out{value, std::nullopt};
    if (want_derivative) {
        out.derivative = derivative;
    }
    return out;
}

SincPair eval_series_real(const SeriesSample& sample, double x) {
    check_tail_reach(sample, std::fabs(x));
    const auto a = sample.coefficients.values();
    const int M = sample.half_width();
    SincPair out;

    if (a.size() > kFactoredMinTerms && std::fabs(x - std::nearbyint(x)) >= kNearInteger) {
        double s1 = 0.0;
        double s2 = 0.0;
        for (int n = -M; n <= M; ++n) {
            const double c = (n % 2 == 0) ? a[static_cast<std::size_t>(n + M)] : -a[static_cast<std::size_t>(n + M)];
            const double inv = 1.0 / (x - n);
            s1 += c * inv;
            s2 += c * inv * inv;
        }
        const double s = sin_pi(x);
        out.value = s * s1 / kPi;
        out.derivative = cos_pi(x) * s1 - s * s2 / kPi;
    } else {
        for (int n = -M; n <= M; ++n) {
            const double c = a[static_cast<std::size_t>(n + M)];
            const SincPair p = sinc_pair(x - n);
            out.value += c * p.value;
            out.derivative += c * p.derivative;
        }
    }

    if (sample.tail) {
        std::complex<double> d;
        out.value += eval_tail(*sample.tail, x, &d).real();
        out.derivative += d.real();
    }
    return out;
}

double tail_std(int M, double x) {
    if (M < 1) {
        throw ParameterError("tail_std needs M >= 1");
    }
    if (!(std::fabs(x) < M)) {
        throw DomainError("tail_std needs |x| < M");
    }
    // sum_{n>M} 1/(n - x)^2 = psi_1(M + 1 - x), and the mirror with x -> -x.
    const double s = sin_pi(x) / kPi;
    const double sum = boost::math::trigamma(M + 1.0 - x) + boost::math::trigamma(M + 1.0 + x);
    return std::fabs(s) * std::sqrt(sum);
}

double sup_tail_std(int M, int N) {
    if (N < 1 || M <= N) {
        throw ParameterError("sup_tail_std needs 1 <= N < M");
    }
    const int cells = 200 * N;
    double best = 0.0;
    for (int i = 0; i <= cells; ++i) {
        best = std::max(best, tail_std(M, -N + 2.0 * N * i / cells));
    }
    return best;
}

long truncation_margin_for_budget(int N, double budget) {
    if (!(budget > 0.0)) {
        throw ParameterError("budget must be > 0");
    }
    auto fits = [&](long K) { return sup_tail_std(static_cast<int>(2 * N + K), N) <= budget; };
    constexpr long kLimit = 1L << 30;
    long hi = 1;
    while (!fits(hi)) {
        hi *= 2;
        if (hi > kLimit) {
            throw NumericalError("truncation margin exceeds 2^30");
        }
    }
    long lo = hi / 2;  // fits(lo) is false unless lo == 0
    if (lo == 0) {
        return 1;
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (fits(mid) ? hi : lo) = mid;
    }
    return hi;
}

Decomposition decompose(const SeriesSample& sample, int N) {
    const int M = sample.half_width();
    if (N < 1 || M < 2 * N) {
        throw ParameterError("decomposition needs a window covering |n| <= 2N");
    }
    const auto a = sample.coefficients.values();
    std::vector<double> v0(a.size(), 0.0);
    std::vector<double> v1(a.size(), 0.0);
    std::vector<double> v2(a.begin(), a.end());
    for (int n = -2 * N; n <= 2 * N; ++n) {
        const auto i = static_cast<std::size_t>(n + M);
        v0[i] = 1.0;
        v1[i] = a[i] - 1.0;
        v2[i] = 0.0;
    }
    const auto& model = sample.coefficients.model();
    const auto& seed = sample.coefficients.seed();
    return {SeriesSample{CoefficientVector(M, std::move(v0)), std::nullopt, "f0"},
            SeriesSample{CoefficientVector(M, std::move(v1), model, seed), std::nullopt, "f1-shifted"},
            SeriesSample{CoefficientVector(M, std::move(v2), model, seed), sample.tail, "f2-tail"}};
}

std::vector<CauchyProbeRow> cauchy_probe(std::span<const int> half_widths, int trials, StreamSeed seed,
                                         const CoefficientModel& model, int jobs) {
    model.validate();
    if (trials < 1 || half_widths.empty()) {
        throw ParameterError("cauchy_probe needs trials >= 1 and at least one half-width");
    }
    for (std::size_t i = 0; i < half_widths.size(); ++i) {
        if (half_widths[i] < 1 || (i > 0 && half_widths[i] <= half_widths[i - 1])) {
            throw ParameterError("cauchy_probe half-widths must be positive and increasing");
        }
    }
    const std::vector<int> widths(half_widths.begin(), half_widths.end());
    const int top = widths.back();

    // Per trial: max_{L<=M} |S_L| at each requested M. Trial t uses stream seed.stream_index + t.
    using Block = std::vector<std::vector<double>>;
    auto chunks = parallel_chunks<Block>(static_cast<std::size_t>(trials), 8, jobs, [&](std::size_t begin, std::size_t end) {
        Block block;
        for (std::size_t t = begin; t < end; ++t) {
            const StreamSeed s{seed.master_seed, seed.stream_index + t};
            std::vector<double> row;
            row.reserve(widths.size());
            double partial = 0.0;
            double running_max = 0.0;
            std::size_t next = 0;
            for (int n = 1; n <= top; ++n) {
                partial += draw_coefficient(model, s, n) / n;
                running_max = std::max(running_max, std::fabs(partial));
                if (n == widths[next]) {
                    row.push_back(running_max);
                    ++next;
                }
            }
            block.push_back(std::move(row));
        }
        return block;
    });

    std::vector<CauchyProbeRow> rows;
    for (std::size_t j = 0; j < widths.size(); ++j) {
        std::vector<double> column;
        column.reserve(static_cast<std::size_t>(trials));
        for (const auto& block : chunks) {
            for (const auto& row : block) {
                column.push_back(row[j]);
            }
        }
        std::sort(column.begin(), column.end());
        const std::size_t n = column.size();
        const double median = (n % 2 == 1) ? column[n / 2] : 0.5 * (column[n / 2 - 1] + column[n / 2]);
        rows.push_back({widths[j], median});
    }
    return rows;
}

}  // namespace sincgap
