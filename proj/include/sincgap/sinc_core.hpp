#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "sincgap/coeff_models.hpp"

namespace sincgap {

struct SincPair {
    double value = 0.0;
    double derivative = 0.0;
};

/// sin(pi t)/(pi t) and its derivative, with the removable singularity filled.
SincPair sinc_pair(double t);
double sinc(double t);
std::complex<double> sinc(std::complex<double> z);
/// d/dz sinc(z).
std::complex<double> sinc_derivative(std::complex<double> z);

// ---------------------------------------------------------------------------
// The all-ones series f0(z) = sum_{n=-2N}^{2N} sinc(z - n).

/// Term-by-term sinc sum.
std::complex<double> eval_f0_direct(int N, std::complex<double> z);
/// sin(pi z) * sum (-1)^n / (pi (z - n)).
std::complex<double> eval_f0_factored(int N, std::complex<double> z);
/// Picks the factored form unless z is within 1e-3 of an integer.
std::complex<double> eval_f0(int N, std::complex<double> z);
double eval_f0(int N, double x);

struct F0Profile {
    int N = 0;
    std::vector<double> grid;
    std::vector<double> values;
    double inf_val = 0.0;
    double sup_val = 0.0;
    /// N * max(|inf - 1|, |sup - 1|)
    double C_estimate = 0.0;
};

/// f0 on a uniform grid over [-N, N] with spacing at most grid_step (<= 0.01).
F0Profile f0_profile(int N, double grid_step);

/// min over a grid of x in [-N, N] of |f0(x + i height)|.
double off_axis_minimum(int N, double height, double grid_step);

/// sin(pi x) * sum_{n=-2N+1}^{2N} (-1)^n / (pi (x - n)): the index range of the contour identity.
double alternating_partial_form(int N, double x);

/**
 * (sin(pi x) / 2 pi i) * contour integral of dz / ((x - z) sin(pi z)) around the
 * rectangle Re z in [-2N + 1/2, 2N + 1/2], Im z in [-2N, 2N].
 *
 * Satisfies alternating_partial_form(N, x) = 1 + residue_remainder(N, x, ...).
 * Composite 20-point Gauss-Legendre per edge, doubling the panel count until two
 * successive levels agree to 1e-10.
 */
double residue_remainder(int N, double x, int quadrature_points);

/// Prefix sums B_n = b_{-2N} + ... + b_n over the window |n| <= 2N (B_{-2N-1} = 0).
class PartialSumView {
public:
    PartialSumView(int N, std::vector<double> b);
    /// b_n = (a_n - 1)(-1)^n for |n| <= 2N.
    static PartialSumView from_coefficients(const CoefficientVector& a, int N);

    int N() const { return N_; }
    double b(int n) const { return b_[static_cast<std::size_t>(n + 2 * N_)]; }
    double B(int n) const { return n < -2 * N_ ? 0.0 : B_[static_cast<std::size_t>(n + 2 * N_)]; }
    std::span<const double> b_values() const { return b_; }
    std::span<const double> B_values() const { return B_; }

private:
    int N_;
    std::vector<double> b_;
    std::vector<double> B_;
};

struct SumByParts {
    double lhs = 0.0;  ///< sum b_n / (x - n)
    double rhs = 0.0;  ///< -sum B_n / ((x - n)(x - n - 1)) + B_{2N} / (x - 2N - 1)
};

SumByParts sum_by_parts(const PartialSumView& view, double x);

// ---------------------------------------------------------------------------
// Zero density of the real-coefficient series off the real axis.

/// h(u) = (cosh u - sinh u / u) / sqrt(sinh^2 u - u^2), h(0) = 1/sqrt(3).
double feldheim_h(double u);
double feldheim_h_prime(double u);

/// Below this |u| both h and h' come from the even Taylor expansion.
inline constexpr double kFeldheimSeriesCutoff = 0.1;

/// S(y) = pi |h'(2 pi y)|, the planar intensity of zeros at height y != 0.
double feldheim_S(double y);

/// Mass per unit length the density formula puts on the real line, as printed.
inline constexpr double kRealLineAtom = 1.0 / (2.0 * std::numbers::sqrt3);

struct DensityProfile {
    std::vector<double> y_grid;
    std::vector<double> S_values;
    double realline_atom = kRealLineAtom;
};

DensityProfile density_profile(std::span<const double> y_grid);

}  // namespace sincgap
