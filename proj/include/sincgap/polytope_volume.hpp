#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sincgap/coeff_models.hpp"

namespace sincgap {

/**
 * V_N = { x in [-eps, eps]^N : |x_1 + ... + x_k| <= eps for k = 1..N }.
 *
 * g_k is the (N-1)-volume density of the partial sum y_k = x_1 + ... + x_k
 * over V_k. It is even and, on [0, eps], a single polynomial of degree k - 1,
 * stored in the Bernstein basis of s = y / eps. One step of the recursion is
 *
 *   g_{k+1}(y) = Q_k(eps - y) + Q_k(eps),   Q_k(u) = int_0^u g_k,   0 <= y <= eps,
 *
 * which keeps every Bernstein coefficient non-negative.
 */
template <class Real>
struct PiecewiseDensity {
    int k = 1;
    Real epsilon = 1;
    std::vector<Real> bernstein{Real(1)};

    /// g_k(y); zero outside [-eps, eps].
    Real operator()(Real y) const;
    /// int g_k = Vol(V_k).
    Real integral() const;
    /// The density of the next stage.
    PiecewiseDensity next() const;
};

enum class VolumeMethod { recursion, mc };
std::string_view to_string(VolumeMethod m);

struct VolumeResult {
    int N = 0;
    double epsilon = 0.0;
    double volume = 0.0;
    VolumeMethod method = VolumeMethod::recursion;
    /// recursion: |double - long double| of the volume; mc: 95% CI half-width.
    double error_estimate = 0.0;
    /// recursion only: Vol(V_1), ..., Vol(V_N).
    std::vector<double> stage_volumes;
    /// mc only
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

/// Exact-arithmetic-free recursion in double, cross-checked in long double; 1 <= N <= 200.
VolumeResult volume_recursion(int N, double epsilon);

/// Rejection sampling in the cube [-eps, eps]^N; trials >= 1e5, N <= 12.
VolumeResult volume_mc(int N, double epsilon, std::uint64_t trials, StreamSeed seed, int jobs = 1);

}  // namespace sincgap
