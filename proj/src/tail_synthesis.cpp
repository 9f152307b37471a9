#include "sincgap/tail_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "sincgap/errors.hpp"
#include "sincgap/special.hpp"

namespace sincgap {

double scaled_hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !(q >= 1.0)) {
        throw ParameterError("scaled_hurwitz_zeta needs s > 1 and q >= 1");
    }
    // Direct sum up to A = q + J, then Euler-Maclaurin with A >= 2s so the
    // correction series decays geometrically.
    const int J = 16 + static_cast<int>(2.0 * s);
    double sum = 0.0;
    for (int n = 0; n < J; ++n) {
        sum += std::pow(q / (q + n), s);
    }
    const double A = q + J;
    const double lead = std::pow(q / A, s);
    // B_2/2!, B_4/4!, B_6/6!, B_8/8!
    constexpr double kB[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
    double correction = A / (s - 1.0) + 0.5;
    double rising = s;  // s (s+1) ... (s + 2j - 2)
    double inv_power = 1.0 / A;
    for (int j = 0; j < 4; ++j) {
        correction += kB[j] * rising * inv_power;
        rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
        inv_power /= A * A;
    }
    return sum + lead * correction;
}

TailModel::TailModel(int half_width, double radius) : half_width_(half_width), radius_(radius) {
    if (half_width < 1 || !(radius > 0.0)) {
        throw ParameterError("TailModel needs M >= 1 and R > 0");
    }
    const double q = half_width + 1.0;
    const double ratio = radius / q;
    if (ratio > 0.75) {
        throw ParameterError("TailModel radius must stay below 0.75 (M + 1)");
    }
    const int terms = std::clamp(static_cast<int>(std::ceil(std::log(1e-17) / std::log(ratio))) + 1, 4, 160);

    // Cov(V_j, V_k) = (1 + (-1)^{j+k}) (R/q)^{j+k} q^{-2} q^s zeta(s, q),  s = j + k + 2
    covariance_ = Eigen::MatrixXd::Zero(terms, terms);
    const double log_ratio = std::log(ratio);
    for (int j = 0; j < terms; ++j) {
        for (int k = j; k < terms; k += 2) {
            const double s = j + k + 2.0;
            const double value = 2.0 * std::exp((j + k) * log_ratio) / (q * q) * scaled_hurwitz_zeta(s, q);
            covariance_(j, k) = value;
            covariance_(k, j) = value;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance_);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("tail covariance eigendecomposition failed");
    }
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const double top = lambda.maxCoeff();
    // Modes below 1e-34 of the top variance contribute < 1e-17 in standard deviation.
    std::vector<int> kept;
    double dropped = 0.0;
    for (int i = terms - 1; i >= 0; --i) {
        if (lambda(i) > top * 1e-34) {
            kept.push_back(i);
        } else {
            dropped += std::max(lambda(i), 0.0);
        }
    }
    factor_.resize(terms, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        factor_.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(kept[c]) * std::sqrt(lambda(kept[c]));
    }
    const double cut = std::pow(ratio, terms) * std::sqrt(2.0 / (q * q * (1.0 - ratio * ratio)));
    residual_std_ = std::sqrt(dropped * terms) + cut;
}

std::shared_ptr<const TailModel> TailModel::get(int half_width, double radius) {
    static std::mutex mutex;
    static std::map<std::pair<int, double>, std::shared_ptr<const TailModel>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{half_width, radius}];
    if (!slot) {
        slot = std::make_shared<const TailModel>(half_width, radius);
    }
    return slot;
}

void TailModel::draw_modes(StreamSeed seed, std::span<double> xi) const {
    fill_standard_normals(seed, RandomDomain::tail_modes, 0, xi.first(static_cast<std::size_t>(rank())));
}

TailModes TailModel::from_modes(std::span<const double> xi) const {
    const Eigen::Map<const Eigen::VectorXd> modes(xi.data(), rank());
    const Eigen::VectorXd v = factor_ * modes;
    return {half_width_, radius_, std::vector<double>(v.data(), v.data() + v.size())};
}

TailModes TailModel::sample(StreamSeed seed) const {
    std::vector<double> xi(static_cast<std::size_t>(rank()));
    draw_modes(seed, xi);
    return from_modes(xi);
}

void TailModel::mode_values(double x, std::span<double> value, std::span<double> derivative) const {
    const double t = x / radius_;
    const double s = sin_pi(x) / std::numbers::pi;
    const double c = cos_pi(x);
    for (int m = 0; m < rank(); ++m) {
        double p = 0.0;
        double dp = 0.0;
        for (int k = terms() - 1; k >= 0; --k) {
            dp = dp * t + p;
            p = p * t + factor_(k, m);
        }
        value[static_cast<std::size_t>(m)] = s * p;
        derivative[static_cast<std::size_t>(m)] = c * p + s * dp / radius_;
    }
}

std::complex<double> eval_tail(const TailModes& tail, std::complex<double> z, std::complex<double>* derivative) {
    const std::complex<double> t = z / tail.radius;
    std::complex<double> p = 0.0;
    std::complex<double> dp = 0.0;
    for (auto it = tail.coefficients.rbegin(); it != tail.coefficients.rend(); ++it) {
        dp = dp * t + p;
        p = p * t + *it;
    }
    const std::complex<double> s = sin_pi(z) / std::numbers::pi;
    if (derivative != nullptr) {
        *derivative = cos_pi(z) * p + s * dp / tail.radius;
    }
    return s * p;
}

}  // namespace sincgap
