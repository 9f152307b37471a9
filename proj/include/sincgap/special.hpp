#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace sincgap {

/// sin(pi x), exactly 0 at integers and exactly +-1 at half-integers.
inline double sin_pi(double x) {
    const double k = std::nearbyint(x);
    const double t = x - k;
    const double s = (std::fabs(t) == 0.5) ? std::copysign(1.0, t) : std::sin(std::numbers::pi * t);
    return (std::fmod(k, 2.0) == 0.0) ? s : -s;
}

/// cos(pi x), exactly 0 at half-integers and exactly +-1 at integers.
inline double cos_pi(double x) {
    const double k = std::nearbyint(x);
    const double t = x - k;
    const double c = (std::fabs(t) == 0.5) ? 0.0 : std::cos(std::numbers::pi * t);
    return (std::fmod(k, 2.0) == 0.0) ? c : -c;
}

inline std::complex<double> sin_pi(std::complex<double> z) {
    const double py = std::numbers::pi * z.imag();
    return {sin_pi(z.real()) * std::cosh(py), cos_pi(z.real()) * std::sinh(py)};
}

inline std::complex<double> cos_pi(std::complex<double> z) {
    const double py = std::numbers::pi * z.imag();
    return {cos_pi(z.real()) * std::cosh(py), -sin_pi(z.real()) * std::sinh(py)};
}

/// 1 / sin(pi z); uses the exponential form off the axis so large |Im z| underflows gracefully.
inline std::complex<double> csc_pi(std::complex<double> z) {
    if (std::fabs(z.imag()) <= 1.0) {
        return 1.0 / sin_pi(z);
    }
    const bool lower = z.imag() < 0.0;
    const std::complex<double> w = lower ? std::conj(z) : z;
    // q = exp(i pi w), |q| = exp(-pi Im w) < 1
    const std::complex<double> q = std::exp(-std::numbers::pi * w.imag()) * std::complex<double>(cos_pi(w.real()), sin_pi(w.real()));
    const std::complex<double> r = std::complex<double>(0.0, -2.0) * q / (1.0 - q * q);
    return lower ? std::conj(r) : r;
}

}  // namespace sincgap
