#include "sincgap/sinc_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "sincgap/errors.hpp"
#include "sincgap/quadrature.hpp"
#include "sincgap/special.hpp"

namespace sincgap {

namespace {

constexpr double kPi = std::numbers::pi;

// |pi t| below this uses the Taylor series of sinc.
constexpr double kSincSeriesCutoff = 0.5;

// sinc(t) = sum_k (-1)^k (pi t)^{2k} / (2k+1)!, k = 0..9
template <class T>
T sinc_series(T pt) {
    const T w = pt * pt;
    T term = 1.0;
    T sum = 1.0;
    for (int k = 1; k <= 9; ++k) {
        term *= -w / static_cast<double>((2 * k) * (2 * k + 1));
        sum += term;
    }
    return sum;
}

// d/dt sinc(t) = pi * sum_{k>=1} (-1)^k 2k (pi t)^{2k-1} / (2k+1)!
template <class T>
T sinc_derivative_series(T pt) {
    const T w = pt * pt;
    T power = pt;
    T sum = 0.0;
    double inv_factorial = 1.0;
    for (int k = 1; k <= 9; ++k) {
        inv_factorial /= static_cast<double>((2 * k) * (2 * k + 1));
        sum += ((k % 2 == 1) ? -2.0 : 2.0) * k * inv_factorial * power;
        power *= w;
    }
    return kPi * sum;
}

int checked_N(int N) {
    if (N < 1) {
        throw ParameterError("N must be >= 1");
    }
    return N;
}

double distance_to_integer(std::complex<double> z) {
    return std::abs(z - std::nearbyint(z.real()));
}

}  // namespace

SincPair sinc_pair(double t) {
    const double pt = kPi * t;
    if (std::fabs(pt) < kSincSeriesCutoff) {
        return {sinc_series(pt), sinc_derivative_series(pt)};
    }
    const double value = sin_pi(t) / pt;
    return {value, (cos_pi(t) - value) / t};
}

double sinc(double t) {
    const double pt = kPi * t;
    return std::fabs(pt) < kSincSeriesCutoff ? sinc_series(pt) : sin_pi(t) / pt;
}

std::complex<double> sinc(std::complex<double> z) {
    const std::complex<double> pz = kPi * z;
    if (std::abs(pz) < kSincSeriesCutoff) {
        return sinc_series(pz);
    }
    return sin_pi(z) / pz;
}

std::complex<double> sinc_derivative(std::complex<double> z) {
    const std::complex<double> pz = kPi * z;
    if (std::abs(pz) < kSincSeriesCutoff) {
        return sinc_derivative_series(pz);
    }
    return (cos_pi(z) - sin_pi(z) / pz) / z;
}

std::complex<double> eval_f0_direct(int N, std::complex<double> z) {
    checked_N(N);
    std::complex<double> sum = 0.0;
    for (int n = -2 * N; n <= 2 * N; ++n) {
        sum += sinc(z - static_cast<double>(n));
    }
    return sum;
}

std::complex<double> eval_f0_factored(int N, std::complex<double> z) {
    checked_N(N);
    std::complex<double> sum = 0.0;
    for (int n = -2 * N; n <= 2 * N; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign / (z - static_cast<double>(n));
    }
    return sin_pi(z) * sum / kPi;
}

std::complex<double> eval_f0(int N, std::complex<double> z) {
    return distance_to_integer(z) < 1e-3 ? eval_f0_direct(N, z) : eval_f0_factored(N, z);
}

double eval_f0(int N, double x) {
    checked_N(N);
    if (std::fabs(x - std::nearbyint(x)) < 1e-3) {
        double sum = 0.0;
        for (int n = -2 * N; n <= 2 * N; ++n) {
            sum += sinc(x - n);
        }
        return sum;
    }
    double sum = 0.0;
    for (int n = -2 * N; n <= 2 * N; ++n) {
        sum += ((n % 2 == 0) ? 1.0 : -1.0) / (x - n);
    }
    return sin_pi(x) * sum / kPi;
}

F0Profile f0_profile(int N, double grid_step) {
    checked_N(N);
    if (!(grid_step > 0.0) || grid_step > 0.01) {
        throw ParameterError("f0_profile needs 0 < grid_step <= 0.01");
    }
    const auto cells = static_cast<std::size_t>(std::ceil(2.0 * N / grid_step));
    F0Profile profile;
    profile.N = N;
    profile.grid.resize(cells + 1);
    profile.values.resize(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        const double x = (i == cells) ? static_cast<double>(N)
                                      : -N + 2.0 * N * static_cast<double>(i) / static_cast<double>(cells);
        profile.grid[i] = x;
        profile.values[i] = eval_f0(N, x);
    }
    const auto [lo, hi] = std::minmax_element(profile.values.begin(), profile.values.end());
    profile.inf_val = *lo;
    profile.sup_val = *hi;
    profile.C_estimate = N * std::max(std::fabs(profile.inf_val - 1.0), std::fabs(profile.sup_val - 1.0));
    return profile;
}

double off_axis_minimum(int N, double height, double grid_step) {
    checked_N(N);
    if (!(grid_step > 0.0)) {
        throw ParameterError("grid_step must be > 0");
    }
    const auto cells = static_cast<std::size_t>(std::ceil(2.0 * N / grid_step));
    double best = INFINITY;
    for (std::size_t i = 0; i <= cells; ++i) {
        const double x = -N + 2.0 * N * static_cast<double>(i) / static_cast<double>(cells);
        best = std::min(best, std::abs(eval_f0(N, std::complex<double>(x, height))));
    }
    return best;
}

double alternating_partial_form(int N, double x) {
    checked_N(N);
    double sum = 0.0;
    for (int n = -2 * N + 1; n <= 2 * N; ++n) {
        sum += ((n % 2 == 0) ? 1.0 : -1.0) / (x - n);
    }
    return sin_pi(x) * sum / kPi;
}

double residue_remainder(int N, double x, int quadrature_points) {
    checked_N(N);
    if (std::fabs(x) > N) {
        throw DomainError("residue_remainder needs |x| <= N");
    }
    if (x == std::nearbyint(x)) {
        throw DomainError("residue_remainder is undefined at integer x");
    }
    if (quadrature_points < 64) {
        throw ParameterError("residue_remainder needs at least 64 quadrature points per edge");
    }

    const double left = -2.0 * N + 0.5;
    const double right = 2.0 * N + 0.5;
    const double height = 2.0 * N;
    const std::array<std::complex<double>, 4> corners{{{left, -height}, {right, -height}, {right, height}, {left, height}}};
    auto integrand = [x](std::complex<double> z) { return csc_pi(z) / (x - z); };

    auto contour_value = [&](int points) {
        const int panels = (points + GaussLegendre20::kPoints - 1) / GaussLegendre20::kPoints;
        std::complex<double> total = 0.0;
        for (std::size_t e = 0; e < 4; ++e) {
            total += segment_integral(integrand, corners[e], corners[(e + 1) % 4], panels);
        }
        return sin_pi(x) * total / std::complex<double>(0.0, 2.0 * kPi);
    };

    constexpr int kMaxDoublings = 12;
    int points = quadrature_points;
    std::complex<double> previous = contour_value(points);
    for (int level = 0;; ++level) {
        points *= 2;
        const std::complex<double> current = contour_value(points);
        if (std::abs(current - previous) < 1e-10) {
            if (std::fabs(current.imag()) > 1e-8) {
                std::ostringstream msg;
                msg << "residue contour value has imaginary part " << current.imag();
                throw NumericalError(msg.str());
            }
            return current.real();
        }
        if (level + 1 == kMaxDoublings) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "residue quadrature did not converge: " << points / 2 << " points -> " << previous.real()
                << ", " << points << " points -> " << current.real();
            throw NumericalError(msg.str());
        }
        previous = current;
    }
}

PartialSumView::PartialSumView(int N, std::vector<double> b) : N_(N), b_(std::move(b)) {
    if (N < 0 || b_.size() != static_cast<std::size_t>(4 * N + 1)) {
        throw ParameterError("PartialSumView needs 4N+1 values b_{-2N..2N}");
    }
    B_.resize(b_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        running += b_[i];
        B_[i] = running;
    }
}

PartialSumView PartialSumView::from_coefficients(const CoefficientVector& a, int N) {
    if (a.half_width() < 2 * N) {
        throw ParameterError("coefficient window must cover |n| <= 2N");
    }
    std::vector<double> b(static_cast<std::size_t>(4 * N + 1));
    for (int n = -2 * N; n <= 2 * N; ++n) {
        b[static_cast<std::size_t>(n + 2 * N)] = (a[n] - 1.0) * ((n % 2 == 0) ? 1.0 : -1.0);
    }
    return PartialSumView(N, std::move(b));
}

SumByParts sum_by_parts(const PartialSumView& view, double x) {
    const int N = view.N();
    if (x == std::nearbyint(x) && x >= -2.0 * N && x <= 2.0 * N + 1.0) {
        throw DomainError("sum_by_parts: x is a pole");
    }
    SumByParts out;
    for (int n = -2 * N; n <= 2 * N; ++n) {
        out.lhs += view.b(n) / (x - n);
        out.rhs -= view.B(n) / ((x - n) * (x - n - 1.0));
    }
    out.rhs += view.B(2 * N) / (x - 2.0 * N - 1.0);
    return out;
}

namespace {

// Even Taylor coefficients of h(u), u^0 .. u^14.
constexpr std::array<double, 8> kFeldheimSeries{
    0.57735026918962576451,   0.019245008972987525484,  -0.00068732174903526876727, 0.000010691671651659736380,
    4.4052728744083484001e-7, -3.6352243096106298863e-8, 9.9441698265963370077e-10, 1.2680055292431660753e-11,
};

struct ScaledParts {
    double num, dnum, den, dden;
};

// N = cosh u - sinh u / u and D = sinh^2 u - u^2 with derivatives,
// scaled by e^{-u} and e^{-2u} respectively (u > 0).
ScaledParts feldheim_parts(double u) {
    const double e = std::exp(-2.0 * u);
    const double ch = 0.5 * (1.0 + e);
    const double sh = 0.5 * (1.0 - e);
    const double u2 = u * u;
    return {ch - sh / u, sh - (u * ch - sh) / u2, sh * sh - u2 * e, 2.0 * sh * ch - 2.0 * u * e};
}

}  // namespace

double feldheim_h(double u) {
    const double a = std::fabs(u);
    if (a < kFeldheimSeriesCutoff) {
        const double w = a * a;
        double sum = 0.0;
        for (auto it = kFeldheimSeries.rbegin(); it != kFeldheimSeries.rend(); ++it) {
            sum = sum * w + *it;
        }
        return sum;
    }
    const auto p = feldheim_parts(a);
    return p.num / std::sqrt(p.den);
}

double feldheim_h_prime(double u) {
    const double a = std::fabs(u);
    double value;
    if (a < kFeldheimSeriesCutoff) {
        const double w = a * a;
        double sum = 0.0;
        for (std::size_t k = kFeldheimSeries.size() - 1; k >= 1; --k) {
            sum = sum * w + 2.0 * static_cast<double>(k) * kFeldheimSeries[k];
        }
        value = sum * a;
    } else {
        const auto p = feldheim_parts(a);
        value = (p.dnum - p.num * p.dden / (2.0 * p.den)) / std::sqrt(p.den);
    }
    return u < 0.0 ? -value : value;
}

double feldheim_S(double y) {
    if (y == 0.0) {
        throw DomainError("S(y) is undefined at y = 0; the real line carries the separate atom kRealLineAtom");
    }
    return kPi * std::fabs(feldheim_h_prime(2.0 * kPi * std::fabs(y)));
}

DensityProfile density_profile(std::span<const double> y_grid) {
    DensityProfile profile;
    profile.y_grid.assign(y_grid.begin(), y_grid.end());
    profile.S_values.reserve(y_grid.size());
    for (double y : y_grid) {
        profile.S_values.push_back(feldheim_S(y));
    }
    return profile;
}

}  // namespace sincgap
