#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sincgap/coeff_models.hpp"

namespace sincgap {

/// q^s * sum_{n>=0} (q + n)^{-s}, for s > 1 and q >= 1.
double scaled_hurwitz_zeta(double s, double q);

/**
 * One realisation of the part of a Gaussian sinc series beyond a window:
 *
 *   T(z) = sum_{|n|>M} a_n sinc(z - n) = sin(pi z)/pi * sum_k V_k (z/R)^k,   |z| <= R.
 *
 * Only the polynomial coefficients V_k are stored.
 */
struct TailModes {
    int half_width = 0;
    double radius = 0.0;
    std::vector<double> coefficients;

    bool operator==(const TailModes&) const = default;
};

/**
 * Gaussian law of the coefficients V_k for a window half-width M and validity
 * radius R. Expanding 1/(z - n) in powers of z/n turns the tail into
 * sin(pi z)/pi * sum_k z^k U_k with
 *
 *   Cov(U_j, U_k) = (1 + (-1)^{j+k}) * zeta(j + k + 2, M + 1),
 *
 * which is factored once by a symmetric eigendecomposition; a sample is
 * V = factor * xi with xi standard normal. The series is cut where
 * (R/(M+1))^K < 1e-17.
 */
class TailModel {
public:
    TailModel(int half_width, double radius);

    /// Shared, cached instance; TailModel is immutable so sharing across threads is safe.
    static std::shared_ptr<const TailModel> get(int half_width, double radius);

    int half_width() const { return half_width_; }
    double radius() const { return radius_; }
    int terms() const { return static_cast<int>(factor_.rows()); }
    int rank() const { return static_cast<int>(factor_.cols()); }
    const Eigen::MatrixXd& factor() const { return factor_; }
    const Eigen::MatrixXd& covariance() const { return covariance_; }
    /// Standard deviation bound of everything the model leaves out (dropped modes, series cut).
    double residual_std() const { return residual_std_; }

    /// Standard normals xi_0..xi_{rank-1} for this seed (domain tail_modes).
    void draw_modes(StreamSeed seed, std::span<double> xi) const;
    TailModes sample(StreamSeed seed) const;
    TailModes from_modes(std::span<const double> xi) const;

    /// Contribution of each mode (column of factor) to T(x) and T'(x).
    void mode_values(double x, std::span<double> value, std::span<double> derivative) const;

private:
    int half_width_;
    double radius_;
    Eigen::MatrixXd covariance_;
    Eigen::MatrixXd factor_;
    double residual_std_ = 0.0;
};

/// T(z) and T'(z) for a realised tail.
std::complex<double> eval_tail(const TailModes& tail, std::complex<double> z, std::complex<double>* derivative);

}  // namespace sincgap
