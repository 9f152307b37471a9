#include "sincgap/polytope_volume.hpp"

#include <cmath>
#include <sstream>

#include "sincgap/errors.hpp"
#include "sincgap/parallel.hpp"
#include "sincgap/stats.hpp"

namespace sincgap {

template <class Real>
Real PiecewiseDensity<Real>::operator()(Real y) const {
    using std::fabs;
    const Real s = fabs(y) / epsilon;
    if (s > Real(1)) {
        return Real(0);
    }
    // de Casteljau
    std::vector<Real> b = bernstein;
    for (std::size_t r = 1; r < b.size(); ++r) {
        for (std::size_t i = 0; i + r < b.size(); ++i) {
            b[i] = (Real(1) - s) * b[i] + s * b[i + 1];
        }
    }
    return b[0];
}

template <class Real>
Real PiecewiseDensity<Real>::integral() const {
    Real sum = 0;
    for (const Real& c : bernstein) {
        sum += c;
    }
    // Each Bernstein polynomial of degree d integrates to 1/(d+1) over [0, 1]; both halves count.
    return Real(2) * epsilon * sum / static_cast<Real>(bernstein.size());
}

template <class Real>
PiecewiseDensity<Real> PiecewiseDensity<Real>::next() const {
    const std::size_t d = bernstein.size() - 1;
    // Q_k in degree d+1: q_i = eps/(d+1) * sum_{j<i} c_j.
    std::vector<Real> q(d + 2, Real(0));
    for (std::size_t i = 1; i <= d + 1; ++i) {
        q[i] = q[i - 1] + bernstein[i - 1];
    }
    const Real scale = epsilon / static_cast<Real>(d + 1);
    for (Real& v : q) {
        v *= scale;
    }
    PiecewiseDensity out;
    out.k = k + 1;
    out.epsilon = epsilon;
    out.bernstein.resize(d + 2);
    for (std::size_t i = 0; i <= d + 1; ++i) {
        out.bernstein[i] = q[d + 1 - i] + q[d + 1];
    }
    return out;
}

template struct PiecewiseDensity<double>;
template struct PiecewiseDensity<long double>;

std::string_view to_string(VolumeMethod m) {
    return m == VolumeMethod::recursion ? "recursion" : "mc";
}

VolumeResult volume_recursion(int N, double epsilon) {
    if (N < 1 || N > 200) {
        throw ParameterError("volume_recursion needs 1 <= N <= 200");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ParameterError("epsilon must be finite and > 0");
    }
    PiecewiseDensity<double> g{1, epsilon, {1.0}};
    PiecewiseDensity<long double> gl{1, static_cast<long double>(epsilon), {1.0L}};
    VolumeResult out;
    out.N = N;
    out.epsilon = epsilon;
    out.stage_volumes.push_back(g.integral());
    for (int k = 2; k <= N; ++k) {
        g = g.next();
        gl = gl.next();
        out.stage_volumes.push_back(g.integral());
    }
    out.volume = out.stage_volumes.back();
    for (int k = 1; k < N; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (out.stage_volumes[i] < epsilon * out.stage_volumes[i - 1] * (1.0 - 1e-12)) {
            throw NumericalError("volume recursion violated the per-stage factor eps");
        }
    }
    const long double reference = gl.integral();
    out.error_estimate = static_cast<double>(std::fabs(static_cast<long double>(out.volume) - reference));
    if (!(out.error_estimate <= 1e-6 * out.volume)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "volume recursion lost precision: double " << out.volume << " vs long double "
            << static_cast<double>(reference);
        throw NumericalError(msg.str());
    }
    return out;
}

VolumeResult volume_mc(int N, double epsilon, std::uint64_t trials, StreamSeed seed, int jobs) {
    if (N < 1 || N > 12) {
        throw ParameterError("volume_mc needs 1 <= N <= 12");
    }
    if (trials < 100000) {
        throw ParameterError("volume_mc needs at least 1e5 trials");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ParameterError("epsilon must be finite and > 0");
    }
    const auto counts = parallel_chunks<std::uint64_t>(trials, 1 << 14, jobs, [&](std::size_t begin, std::size_t end) {
        std::uint64_t hits = 0;
        for (std::size_t t = begin; t < end; ++t) {
            double partial = 0.0;
            bool inside = true;
            for (int i = 0; i < N && inside; i += 2) {
                const auto block = random_block(seed.master_seed, seed.stream_index + t, RandomDomain::uniform_cube,
                                                static_cast<std::uint64_t>(i / 2));
                for (int j = 0; j < 2 && i + j < N; ++j) {
                    partial += epsilon * (2.0 * to_unit_closed_open(block[static_cast<std::size_t>(j)]) - 1.0);
                    if (std::fabs(partial) > epsilon) {
                        inside = false;
                        break;
                    }
                }
            }
            hits += inside ? 1 : 0;
        }
        return hits;
    });
    VolumeResult out;
    out.N = N;
    out.epsilon = epsilon;
    out.method = VolumeMethod::mc;
    out.trials = trials;
    for (auto h : counts) {
        out.hits += h;
    }
    if (out.hits == 0) {
        throw SamplingError("volume_mc: no sample fell inside the polytope");
    }
    const double cube = std::pow(2.0 * epsilon, N);
    const Interval95 ci = clopper_pearson(out.hits, trials);
    out.volume = cube * static_cast<double>(out.hits) / static_cast<double>(trials);
    out.ci_lo = cube * ci.lo;
    out.ci_hi = cube * ci.hi;
    out.error_estimate = 0.5 * (out.ci_hi - out.ci_lo);
    return out;
}

}  // namespace sincgap
