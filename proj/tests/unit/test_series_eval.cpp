#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sincgap/errors.hpp"
#include "sincgap/series_eval.hpp"
#include "sincgap/stats.hpp"
#include "sincgap/tail_synthesis.hpp"

using namespace sincgap;
using cd = std::complex<double>;

namespace {

cd direct_sum(const SeriesSample& s, cd z) {
    cd v = 0.0;
    for (int n = -s.half_width(); n <= s.half_width(); ++n) {
        v += s.coefficients[n] * sinc(z - static_cast<double>(n));
    }
    return v;
}

}  // namespace

TEST_CASE("scaled Hurwitz zeta against high-precision values") {
    CHECK(scaled_hurwitz_zeta(3.0, 5.0) == doctest::Approx(3.0493582653196560453).epsilon(1e-13));
    CHECK(scaled_hurwitz_zeta(2.5, 1.0) == doctest::Approx(1.3414872572509171798).epsilon(1e-13));
    CHECK(scaled_hurwitz_zeta(10.0, 40.0) == doctest::Approx(4.9652492092373721723).epsilon(1e-13));
    CHECK_THROWS_AS(scaled_hurwitz_zeta(1.0, 2.0), ParameterError);
}

TEST_CASE("tail standard deviation against high-precision values") {
    CHECK(tail_std(20, 0.37) == doctest::Approx(0.091252007641376332249).epsilon(1e-12));
    CHECK(tail_std(36, 9.5) == doctest::Approx(0.077167061381656584255).epsilon(1e-12));
    CHECK(tail_std(5, 4.9) == doctest::Approx(0.12164382681800255804).epsilon(1e-12));
    CHECK(tail_std(20, 3.0) == 0.0);
    CHECK_THROWS_AS(tail_std(5, 5.0), DomainError);
    // The supremum sits between integers and shrinks like 1/sqrt(M - N).
    CHECK(sup_tail_std(40, 10) > tail_std(40, 9.5) * 0.999);
    CHECK(sup_tail_std(40, 10) < sup_tail_std(25, 10));
}

TEST_CASE("truncation margin meets its budget") {
    for (double budget : {0.1, 0.03}) {
        const long K = truncation_margin_for_budget(10, budget);
        CHECK(sup_tail_std(20 + static_cast<int>(K), 10) <= budget);
        CHECK(sup_tail_std(20 + static_cast<int>(K) - 1, 10) > budget);
    }
}

TEST_CASE("series evaluation: factored form and direct sum agree") {
    for (int M : {3, 20, 100}) {
        const SeriesSample s = make_sample(CoefficientModel::gaussian(), M, {1, static_cast<std::uint64_t>(M)});
        for (cd z : {cd(0.37, 0.0), cd(-2.71, 0.5), cd(1.0004, -0.2), cd(2.0, 0.0), cd(0.5, 3.0)}) {
            const SeriesValue v = eval_series(s, z, true);
            const cd ref = direct_sum(s, z);
            CHECK(std::abs(v.value - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
            const double h = 1e-6;
            const cd fd = (direct_sum(s, z + h) - direct_sum(s, z - h)) / (2 * h);
            CHECK(std::abs(*v.derivative - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
            if (z.imag() == 0.0) {
                const SincPair r = eval_series_real(s, z.real());
                CHECK(r.value == doctest::Approx(v.value.real()).epsilon(1e-13));
                CHECK(r.derivative == doctest::Approx(v.derivative->real()).epsilon(1e-12));
            }
        }
        // interpolation: f(k) = a_k
        CHECK(eval_series_real(s, 1.0).value == doctest::Approx(s.coefficients[1]).epsilon(1e-14));
    }
}

TEST_CASE("tail model reproduces the truncated-tail variance") {
    const int M = 20;
    const double R = 10.0;
    const auto model = TailModel::get(M, R);
    CHECK(model == TailModel::get(M, R));
    CHECK(model->rank() > 0);
    CHECK(model->residual_std() < 1e-8);
    CHECK_THROWS_AS(TailModel(M, 16.0), ParameterError);

    // Var T(x) from the factor equals the trigamma formula.
    for (double x : {0.37, 4.5, 9.9}) {
        std::vector<double> val(static_cast<std::size_t>(model->rank()));
        std::vector<double> der(val.size());
        model->mode_values(x, val, der);
        double var = 0.0;
        for (double v : val) {
            var += v * v;
        }
        CHECK(std::sqrt(var) == doctest::Approx(tail_std(M, x)).epsilon(1e-8));
    }

    // Empirical variance over samples, and T(x) consistent with the modes.
    MeanAccumulator acc;
    const double x = 2.5;
    for (std::uint64_t t = 0; t < 20000; ++t) {
        const SeriesSample s = make_sample(CoefficientModel::gaussian(), M, {3, t}, R);
        cd d;
        acc.add(eval_tail(*s.tail, x, &d).real());
    }
    const double var = acc.sum_sq / acc.count;
    const double sigma2 = tail_std(M, x) * tail_std(M, x);
    CHECK(std::fabs(var - sigma2) < 4.0 * sigma2 * std::sqrt(2.0 / acc.count));
}

TEST_CASE("tail is real on the axis and vanishes at window integers") {
    const SeriesSample s = make_sample(CoefficientModel::gaussian(), 12, {8, 0}, 8.0);
    cd d;
    CHECK(std::fabs(eval_tail(*s.tail, 0.3, &d).imag()) == 0.0);
    CHECK(std::abs(eval_tail(*s.tail, 4.0, &d)) < 1e-15);
    // conjugate symmetry
    const cd z(1.3, 0.7);
    CHECK(std::abs(eval_tail(*s.tail, std::conj(z), &d) - std::conj(eval_tail(*s.tail, z, &d))) < 1e-14);
    CHECK_THROWS_AS(eval_series(s, cd(8.5, 0.0), false), DomainError);
    CHECK_THROWS_AS(make_sample(CoefficientModel::cauchy(), 12, {8, 0}, 8.0), ParameterError);
}

TEST_CASE("samples add coefficient-wise, and the decomposition sums back") {
    const SeriesSample s = make_sample(CoefficientModel::gaussian(), 30, {4, 2}, 12.0);
    const Decomposition parts = decompose(s, 5);
    CHECK(parts.f0.tag == "f0");
    CHECK(parts.f1.tag == "f1-shifted");
    CHECK(parts.f2.tag == "f2-tail");
    CHECK_FALSE(parts.f0.tail.has_value());
    CHECK(parts.f2.tail.has_value());
    for (int n = -10; n <= 10; ++n) {
        CHECK(parts.f0.coefficients[n] == 1.0);
        CHECK(parts.f2.coefficients[n] == 0.0);
    }
    CHECK(parts.f0.coefficients[11] == 0.0);
    const SeriesSample sum = parts.f0 + parts.f1 + parts.f2;
    for (cd z : {cd(0.1, 0.0), cd(-4.9, 0.0), cd(3.3, 1.2)}) {
        const cd a = eval_series(s, z, false).value;
        const cd b = eval_series(sum, z, false).value;
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
    const SeriesSample other = make_sample(CoefficientModel::gaussian(), 31, {4, 2});
    CHECK_THROWS_AS(s + other, ParameterError);
    CHECK_THROWS_AS(decompose(s, 16), ParameterError);
    CHECK(window_half_width(5, kDefaultWindowMargin) == 26);
}

TEST_CASE("cauchy probe: running maxima are monotone in M") {
    const std::vector<int> widths{10, 100, 1000};
    const auto rows = cauchy_probe(widths, 31, {6, 0});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].half_width == 10);
    CHECK(rows[0].median <= rows[1].median);
    CHECK(rows[1].median <= rows[2].median);
    // a single trial is allowed
    CHECK(cauchy_probe(widths, 1, {6, 0}).size() == 3);
    // Gaussian control: sum a_n / n converges, so the maxima stabilise
    const std::vector<int> control{1000, 100000};
    const auto g = cauchy_probe(control, 31, {6, 0}, CoefficientModel::gaussian());
    CHECK(g[1].median < 1.5 * g[0].median);
    const std::vector<int> bad{100, 10};
    CHECK_THROWS_AS(cauchy_probe(bad, 5, {6, 0}), ParameterError);
    CHECK_THROWS_AS(cauchy_probe(widths, 0, {6, 0}), ParameterError);
}
