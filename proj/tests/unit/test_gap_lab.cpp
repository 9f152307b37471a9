#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sincgap/errors.hpp"
#include "sincgap/gap_engine.hpp"
#include "sincgap/gap_lab.hpp"
#include "sincgap/polytope_volume.hpp"
#include "sincgap/stats.hpp"
#include "sincgap/zero_finder.hpp"

using namespace sincgap;

TEST_CASE("gap estimates are reproducible and independent of the worker count") {
    GapOptions one;
    GapOptions two;
    two.jobs = 2;
    const GapEstimate a = estimate_gap(1.0, 3000, GapMethod::naive, std::nullopt, {17, 0}, one);
    const GapEstimate b = estimate_gap(1.0, 3000, GapMethod::naive, std::nullopt, {17, 0}, two);
    CHECK(a.hits == b.hits);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.window_m == gap_window(1.0, kDefaultWindowMargin));
    CHECK(a.ess == 3000.0);
    CHECK(a.ci_lo <= a.p_hat);
    CHECK(a.p_hat <= a.ci_hi);
    const GapEstimate c = estimate_gap(1.0, 3000, GapMethod::naive, std::nullopt, {18, 0}, one);
    CHECK(c.hits != a.hits);
}

TEST_CASE("engine outcomes match a direct search on the same sample") {
    EngineConfig config;
    config.half_width = 20;
    config.extent = 2.0;
    const GridEngine engine(config);
    const auto outcomes = engine.run(40, {5, 100});
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const SeriesSample s = engine.trial_sample({5, 100 + t});
        const ZeroReport r = find_real_zeros(s, -2.0, 2.0, 0.05, 1e-10);
        CHECK(outcomes[t].count == static_cast<int>(r.zeros.size() + 2 * r.suspect_cells.size()));
        double nearest = INFINITY;
        for (double z : r.zeros) {
            nearest = std::min(nearest, std::fabs(z));
        }
        if (r.suspect_cells.empty()) {
            CHECK(outcomes[t].nearest == doctest::Approx(nearest).epsilon(1e-8));
        }
    }
}

TEST_CASE("common random numbers give a non-increasing curve") {
    const std::vector<double> radii{0.5, 1.0, 1.5, 2.0};
    const auto curve = estimate_gap_curve(radii, 5000, {3, 0});
    REQUIRE(curve.size() == 4);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(curve[i].hits <= curve[i - 1].hits);
    }
    // gap probability for r = N sits below the sign-pattern bound 4^{-N}
    CHECK(curve[1].p_hat < sign_event_bound(1));
    CHECK(curve[3].p_hat < sign_event_bound(2));
    CHECK(sign_event_bound(3) == 1.0 / 64.0);
}

TEST_CASE("tilted likelihood ratios average to one") {
    const GapEstimate w = tilted_weight_mean(2.0, 20000, {9, 0});
    CHECK(std::fabs(w.p_hat - 1.0) < 4.0 * (w.ci_hi - w.p_hat) / kZ975);
}

TEST_CASE("tilted and naive estimators agree where both work") {
    GapOptions opts;
    opts.tilt_scale = 0.6;
    for (std::uint64_t pair = 0; pair < 5; ++pair) {
        CAPTURE(pair);
        const GapEstimate naive = estimate_gap(1.5, 10000, GapMethod::naive, std::nullopt, {1000 + pair, 0}, opts);
        const GapEstimate tilted = estimate_gap(1.5, 10000, GapMethod::tilted, std::nullopt, {2000 + pair, 0}, opts);
        CHECK(naive.ci_lo <= tilted.ci_hi);
        CHECK(tilted.ci_lo <= naive.ci_hi);
        CHECK(tilted.ess >= 100.0);
        CHECK(tilted.method == GapMethod::tilted);
    }
}

TEST_CASE("an explicit shift array replaces the default profile") {
    const int M = gap_window(2.0, kDefaultWindowMargin);
    std::vector<double> mu(static_cast<std::size_t>(2 * M + 1), 0.0);
    for (int n = -2; n <= 2; ++n) {
        mu[static_cast<std::size_t>(n + M)] = 0.85;
    }
    const GapEstimate e = estimate_gap(2.0, 5000, GapMethod::tilted, mu, {3, 0});
    const GapEstimate d = estimate_gap(2.0, 5000, GapMethod::tilted, std::nullopt, {3, 0});
    CHECK(e.p_hat != d.p_hat);
    CHECK(e.ess > d.ess);
    CHECK_THROWS_AS(estimate_gap(2.0, 5000, GapMethod::tilted, std::vector<double>(3, 0.5), {3, 0}), ParameterError);
}

TEST_CASE("an over-aggressive tilt is reported") {
    GapOptions opts;
    opts.tilt_scale = 8.0;
    CHECK_THROWS_AS(estimate_gap(1.0, 1000, GapMethod::tilted, std::nullopt, {2, 0}, opts), SamplingError);
}

TEST_CASE("gap parameter checks") {
    CHECK_THROWS_AS(estimate_gap(0.1, 1000, GapMethod::naive, std::nullopt, {1, 0}), ParameterError);
    CHECK_THROWS_AS(estimate_gap(1.0, 999, GapMethod::naive, std::nullopt, {1, 0}), ParameterError);
    CHECK_THROWS_AS(parse_gap_method("importance"), ParameterError);
    CHECK(parse_gap_method("tilted") == GapMethod::tilted);
}

TEST_CASE("decay fit recovers an exact exponential") {
    std::vector<GapEstimate> pts;
    for (double r : {0.5, 1.0, 2.0, 3.0}) {
        GapEstimate e;
        e.r = r;
        e.p_hat = 0.9 * std::exp(-1.7 * r);
        e.ci_lo = 0.9 * e.p_hat;
        e.ci_hi = 1.1 * e.p_hat;
        pts.push_back(e);
    }
    const DecayFit fit = fit_decay_rate(pts);
    CHECK(fit.c_hat == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(0.9)).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0));
    // a point without zero-free trials is dropped, not logged as -inf
    GapEstimate empty;
    empty.r = 4.0;
    pts.push_back(empty);
    const DecayFit dropped = fit_decay_rate(pts);
    CHECK(dropped.excluded == std::vector<double>{4.0});
    CHECK(dropped.points.size() == 4);
    pts.erase(pts.begin());
    pts.pop_back();
    CHECK_THROWS_AS(fit_decay_rate(pts), ParameterError);
}

TEST_CASE("rademacher windows: every mixed core has a zero") {
    const RademacherEnumeration e = rademacher_enumeration(1, 2);
    CHECK(e.total == 32);
    CHECK(e.mixed_core + e.constant_core == 32);
    CHECK(e.constant_core == 8);
    CHECK(e.mixed_core_missed == 0);
    CHECK(e.zero_free_patterns.size() == e.constant_core_zero_free);
    CHECK(e.heuristic == 0.5);
    for (const auto& p : e.zero_free_patterns) {
        CHECK(p[1] == p[2]);
        CHECK(p[2] == p[3]);
    }
    // all-plus and all-minus windows are zero free
    CHECK(std::find(e.zero_free_patterns.begin(), e.zero_free_patterns.end(), std::vector<int>(5, 1)) !=
          e.zero_free_patterns.end());
    CHECK_THROWS_AS(rademacher_enumeration(1, 7), ParameterError);
}

TEST_CASE("event E: importance sampling and direct counting agree") {
    const EventEResult e = event_E_probability(1, 0.5, 200000, {4, 0});
    CHECK(e.sampled);
    CHECK(e.direct_ci_lo <= e.p_hat);
    CHECK(e.p_hat <= e.direct_ci_hi);
    CHECK(e.p_hat >= e.analytic_lower);
    CHECK(e.vol_used == doctest::Approx(volume_recursion(5, 0.5).volume));
    // N beyond the sampling range still reports the bound
    const EventEResult big = event_E_probability(5, 0.5, 0, {4, 0});
    CHECK_FALSE(big.sampled);
    CHECK(big.analytic_lower > 0.0);
    CHECK_THROWS_AS(event_E_probability(1, 0.5, 100, {4, 0}), ParameterError);
}

TEST_CASE("f1 stays within a constant multiple of eps on E") {
    const F1SupCheck c = f1_sup_bound_check(2, 0.5, 2000, {8, 0});
    CHECK(c.fraction_within == 1.0);
    CHECK(c.max_ratio < 10.0);
    std::vector<double> zeros(9, 0.0);
    CHECK(f1_sup(zeros, 2) == 0.0);
}

TEST_CASE("tail moments") {
    CHECK(tail_moment_exact(4, std::nullopt) == doctest::Approx(0.440605691422193).epsilon(1e-10));
    CHECK(tail_moment_exact(10, std::nullopt) == doctest::Approx(0.279840094163566).epsilon(1e-10));
    CHECK(tail_moment_exact(16, std::nullopt) == doctest::Approx(0.2213960098261883).epsilon(1e-10));
    CHECK(tail_moment_exact(64, std::nullopt) == doctest::Approx(0.110768261296269).epsilon(1e-10));
    CHECK(tail_moment_exact(10, 20000) == doctest::Approx(0.26855832438184454097).epsilon(1e-12));
    CHECK(tail_moment_exact(10, 21) == doctest::Approx(std::sqrt(2.0 / M_PI) / 441.0).epsilon(1e-14));
    const MomentEstimate mc = tail_moment_mc(3, 2000, 2000, {12, 0});
    CHECK(std::fabs(mc.mean - tail_moment_exact(3, 2000)) < 4.0 * mc.se);
    CHECK(tail_sup_floor(40, 0.25) == doctest::Approx(1.0 - 8.0 / M_PI * tail_moment_exact(40, std::nullopt) / 0.25));
}

TEST_CASE("certificate for a sample close to the all-ones window") {
    std::vector<double> a(2 * 30 + 1, 0.0);
    for (int n = -8; n <= 8; ++n) {
        a[static_cast<std::size_t>(n + 30)] = 1.0 + 0.01 * std::sin(n);
    }
    const SeriesSample s{CoefficientVector(30, a), std::nullopt, "full"};
    const Certificate c = lower_bound_certificate(4, 0.3, s);
    CHECK(c.certified);
    CHECK(c.zero_free);
    CHECK(c.margin > 0.0);
    CHECK(c.sup_f2 == 0.0);
    CHECK(c.sup_f1 <= 0.3);

    // a sample with a sign change inside cannot be certified
    a[30] = -1.0;
    const SeriesSample bad{CoefficientVector(30, a), std::nullopt, "full"};
    const Certificate nc = lower_bound_certificate(4, 0.3, bad);
    CHECK_FALSE(nc.certified);
    CHECK_FALSE(nc.zero_free);
}

TEST_CASE("real-zero intensity is close to Kac-Rice") {
    const IntensityEstimate e = real_zero_intensity(10.0, 1000, {31, 0});
    CHECK(std::fabs(e.intensity - kac_rice_real_intensity()) < 4.0 * e.se);
    CHECK(kac_rice_real_intensity() == doctest::Approx(0.5773502691896258));
}

TEST_CASE("strip intensity and its density average") {
    const IntensityEstimate e = strip_intensity(0.5, 0.7, 5.0, 300, {32, 0});
    const double s = strip_average_S(0.5, 0.7);
    CHECK(s == doctest::Approx(feldheim_S(0.6)).epsilon(0.02));
    CHECK(std::fabs(e.intensity - s) < 4.0 * e.se);
    CHECK_THROWS_AS(strip_average_S(0.0, 0.7), ParameterError);
}
