#pragma once

#include <array>
#include <complex>

#include <boost/math/quadrature/gauss.hpp>

namespace sincgap {

/// Full 20-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre20 {
    static constexpr int kPoints = 20;
    std::array<double, kPoints> nodes{};
    std::array<double, kPoints> weights{};

    static const GaussLegendre20& get() {
        static const GaussLegendre20 rule = [] {
            using G = boost::math::quadrature::gauss<double, kPoints>;
            GaussLegendre20 r;
            const auto& x = G::abscissa();
            const auto& w = G::weights();
            for (int i = 0; i < kPoints / 2; ++i) {
                r.nodes[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(kPoints / 2 - 1 - i)];
                r.weights[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(kPoints / 2 - 1 - i)];
                r.nodes[static_cast<std::size_t>(kPoints / 2 + i)] = x[static_cast<std::size_t>(i)];
                r.weights[static_cast<std::size_t>(kPoints / 2 + i)] = w[static_cast<std::size_t>(i)];
            }
            return r;
        }();
        return rule;
    }
};

/// Integral of f along the straight segment a -> b, split into `panels` equal panels.
template <class F>
std::complex<double> segment_integral(F&& f, std::complex<double> a, std::complex<double> b, int panels) {
    const auto& rule = GaussLegendre20::get();
    const std::complex<double> step = (b - a) / static_cast<double>(panels);
    std::complex<double> total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const std::complex<double> mid = a + (static_cast<double>(p) + 0.5) * step;
        std::complex<double> panel = 0.0;
        for (int i = 0; i < GaussLegendre20::kPoints; ++i) {
            panel += rule.weights[static_cast<std::size_t>(i)] * f(mid + 0.5 * rule.nodes[static_cast<std::size_t>(i)] * step);
        }
        total += 0.5 * step * panel;
    }
    return total;
}

}  // namespace sincgap
