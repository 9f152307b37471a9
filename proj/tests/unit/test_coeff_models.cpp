#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sincgap/coeff_models.hpp"
#include "sincgap/errors.hpp"
#include "sincgap/philox.hpp"
#include "sincgap/stats.hpp"

using namespace sincgap;

TEST_CASE("philox4x32-10 known-answer vectors") {
    using philox::Counter;
    using philox::Key;
    CHECK(philox::philox4x32_10(Counter{0, 0, 0, 0}, Key{0, 0}) ==
          Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox::philox4x32_10(Counter{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, Key{0xffffffffu, 0xffffffffu}) ==
          Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox::philox4x32_10(Counter{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, Key{0xa4093822u, 0x299f31d0u}) ==
          Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("zigzag slots enumerate 0, -1, 1, -2, 2, ...") {
    CHECK(coefficient_slot(0) == 0);
    CHECK(coefficient_slot(-1) == 1);
    CHECK(coefficient_slot(1) == 2);
    CHECK(coefficient_slot(-2) == 3);
    CHECK(coefficient_slot(2) == 4);
    CHECK(coefficient_slot(-1000) == 1999);
}

TEST_CASE("model names round-trip and bad models are rejected") {
    for (auto kind : {CoefficientKind::gaussian_real, CoefficientKind::rademacher, CoefficientKind::cauchy}) {
        CHECK(parse_coefficient_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_coefficient_kind("uniform"), ParameterError);
    CoefficientModel bad;
    bad.scale = 0.0;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    bad.scale = NAN;
    CHECK_THROWS_AS(sample_coefficients(bad, 3, {1, 0}), ParameterError);
    CHECK_THROWS_AS(sample_coefficients(CoefficientModel::gaussian(), 0, {1, 0}), ParameterError);
}

TEST_CASE("samples are pure functions of (model, seed, index)") {
    for (const auto& model : {CoefficientModel::gaussian(), CoefficientModel::rademacher(), CoefficientModel::cauchy()}) {
        const StreamSeed seed{42, 7};
        const auto a = sample_coefficients(model, 20, seed);
        const auto b = sample_coefficients(model, 20, seed);
        CHECK(a == b);
        const auto wide = sample_coefficients(model, 50, seed);
        for (int n = -20; n <= 20; ++n) {
            CHECK(a[n] == wide[n]);
            CHECK(a[n] == draw_coefficient(model, seed, n));
        }
        const auto other_stream = sample_coefficients(model, 20, {42, 8});
        const auto other_master = sample_coefficients(model, 20, {43, 7});
        CHECK_FALSE(a == other_stream);
        CHECK_FALSE(a == other_master);
    }
}

TEST_CASE("uniform draws stay in (0, 1]") {
    double lo = 1.0;
    double hi = 0.0;
    for (std::uint64_t s = 0; s < 100000; ++s) {
        const double u = uniform_draw({3, 0}, RandomDomain::auxiliary, s);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo > 0.0);
    CHECK(hi <= 1.0);
    CHECK(lo < 1e-4);
    CHECK(hi > 1.0 - 1e-4);
    CHECK(to_unit_open_closed(0) > 0.0);
    CHECK(to_unit_open_closed(~std::uint64_t{0}) == 1.0);
    CHECK(to_unit_closed_open(0) == 0.0);
}

TEST_CASE("gaussian coefficients: moments and Kolmogorov-Smirnov") {
    const int M = 50000;
    const auto a = sample_coefficients(CoefficientModel::gaussian(), M, {2024, 0});
    std::vector<double> v(a.values().begin(), a.values().end());
    MeanAccumulator acc;
    double fourth = 0.0;
    for (double x : v) {
        acc.add(x);
        fourth += x * x * x * x;
    }
    const double n = static_cast<double>(v.size());
    const double var = acc.sum_sq / n - acc.mean() * acc.mean();
    CHECK(std::fabs(acc.mean()) < 4.0 / std::sqrt(n));
    CHECK(std::fabs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
    CHECK(std::fabs(fourth / n - 3.0) < 4.0 * std::sqrt(96.0 / n));

    std::sort(v.begin(), v.end());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double F = normal_cdf(v[i]);
        d = std::max({d, F - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - F});
    }
    // alpha = 0.001 critical value
    CHECK(d * std::sqrt(n) < 1.95);
}

TEST_CASE("location and scale act affinely") {
    CoefficientModel m = CoefficientModel::gaussian();
    m.location = 1.5;
    m.scale = 2.0;
    const auto a = sample_coefficients(m, 10, {9, 1});
    const auto z = sample_coefficients(CoefficientModel::gaussian(), 10, {9, 1});
    for (int n = -10; n <= 10; ++n) {
        CHECK(a[n] == doctest::Approx(1.5 + 2.0 * z[n]).epsilon(1e-15));
    }
}

TEST_CASE("distinct streams and neighbouring indices are uncorrelated") {
    const int trials = 100000;
    double sxy_stream = 0.0;
    double sxy_index = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto a = sample_coefficients(CoefficientModel::gaussian(), 1, {5, static_cast<std::uint64_t>(t)});
        const auto b = sample_coefficients(CoefficientModel::gaussian(), 1, {5, static_cast<std::uint64_t>(t) + 1});
        sxy_stream += a[0] * b[0];
        sxy_index += a[0] * a[1];
    }
    CHECK(std::fabs(sxy_stream / trials) < 4.0 / std::sqrt(trials));
    CHECK(std::fabs(sxy_index / trials) < 4.0 / std::sqrt(trials));

    // domains are disjoint draws for the same slot
    double sxy_domain = 0.0;
    for (int s = 0; s < trials; ++s) {
        sxy_domain += standard_normal_draw({5, 0}, RandomDomain::coefficients, s) *
                      standard_normal_draw({5, 0}, RandomDomain::tail_modes, s);
    }
    CHECK(std::fabs(sxy_domain / trials) < 4.0 / std::sqrt(trials));
}

TEST_CASE("rademacher coefficients are balanced signs") {
    const auto a = sample_coefficients(CoefficientModel::rademacher(), 50000, {11, 0});
    double sum = 0.0;
    for (double x : a.values()) {
        CHECK((x == 1.0 || x == -1.0));
        sum += x;
    }
    CHECK(std::fabs(sum) < 4.0 * std::sqrt(static_cast<double>(a.size())));
}

TEST_CASE("cauchy coefficients: quantiles and running means that do not settle") {
    const auto a = sample_coefficients(CoefficientModel::cauchy(), 100000, {13, 0});
    const double n = static_cast<double>(a.size());
    double below_one = 0.0;
    double above_ten = 0.0;
    for (double x : a.values()) {
        CHECK(std::isfinite(x));
        below_one += std::fabs(x) < 1.0 ? 1.0 : 0.0;
        above_ten += std::fabs(x) > 10.0 ? 1.0 : 0.0;
    }
    // P(|X| < 1) = 1/2, P(|X| > 10) = 1 - (2/pi) atan(10)
    CHECK(std::fabs(below_one / n - 0.5) < 4.0 * std::sqrt(0.25 / n));
    const double tail = 1.0 - 2.0 / std::numbers::pi * std::atan(10.0);
    CHECK(std::fabs(above_ten / n - tail) < 4.0 * std::sqrt(tail / n));

    // Batch means of a Cauchy sample are Cauchy again: their spread does not shrink with batch size.
    auto batch_iqr = [&](int batch) {
        std::vector<double> means;
        const auto v = a.values();
        for (std::size_t start = 0; start + static_cast<std::size_t>(batch) <= v.size(); start += static_cast<std::size_t>(batch)) {
            double s = 0.0;
            for (int j = 0; j < batch; ++j) {
                s += v[start + static_cast<std::size_t>(j)];
            }
            means.push_back(s / batch);
        }
        std::sort(means.begin(), means.end());
        return means[means.size() * 3 / 4] - means[means.size() / 4];
    };
    const double small = batch_iqr(10);
    const double large = batch_iqr(1000);
    CHECK(large > 0.5 * small);
    CHECK(large < 2.0 * small);
}
