#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sincgap/philox.hpp"

namespace sincgap {

enum class CoefficientKind { gaussian_real, rademacher, cauchy };

std::string_view to_string(CoefficientKind kind);
CoefficientKind parse_coefficient_kind(std::string_view name);

/// Law of the i.i.d. coefficients a_n. Default is the standard real Gaussian.
struct CoefficientModel {
    CoefficientKind kind = CoefficientKind::gaussian_real;
    double location = 0.0;
    double scale = 1.0;

    /// Throws ParameterError when scale <= 0 or not finite.
    void validate() const;

    static CoefficientModel gaussian() { return {}; }
    static CoefficientModel rademacher() { return {CoefficientKind::rademacher, 0.0, 1.0}; }
    static CoefficientModel cauchy() { return {CoefficientKind::cauchy, 0.0, 1.0}; }

    bool operator==(const CoefficientModel&) const = default;
};

struct StreamSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    bool operator==(const StreamSeed&) const = default;
};

/// Coefficients a_{-M..M}; slot n + M holds a_n.
class CoefficientVector {
public:
    CoefficientVector() = default;
    CoefficientVector(int half_width, std::vector<double> values, CoefficientModel model = {},
                      StreamSeed seed = {});

    /// All-equal window, e.g. the all-ones coefficients of f0.
    static CoefficientVector constant(int half_width, double value);

    int half_width() const { return half_width_; }
    std::size_t size() const { return values_.size(); }
    double operator[](int n) const { return values_[static_cast<std::size_t>(n + half_width_)]; }
    double& operator[](int n) { return values_[static_cast<std::size_t>(n + half_width_)]; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    const CoefficientModel& model() const { return model_; }
    const StreamSeed& seed() const { return seed_; }

    bool operator==(const CoefficientVector&) const = default;

private:
    int half_width_ = 0;
    std::vector<double> values_;
    CoefficientModel model_;
    StreamSeed seed_;
};

/// Zigzag slot of coefficient index n: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint64_t coefficient_slot(std::int64_t n) {
    return n >= 0 ? 2 * static_cast<std::uint64_t>(n) : 2 * static_cast<std::uint64_t>(-n) - 1;
}

/// Standard normal draw for `slot` in `domain` (Box-Muller over one Philox block per slot pair).
double standard_normal_draw(StreamSeed seed, RandomDomain domain, std::uint64_t slot);

/// Uniform (0,1] draw for `slot` in `domain`.
double uniform_draw(StreamSeed seed, RandomDomain domain, std::uint64_t slot);

/// a_n under `model`; a pure function of (model, seed, n).
double draw_coefficient(const CoefficientModel& model, StreamSeed seed, std::int64_t n);

/// Fills `out` with standard normals for consecutive slots starting at `first_slot`.
void fill_standard_normals(StreamSeed seed, RandomDomain domain, std::uint64_t first_slot,
                           std::span<double> out);

/**
 * 2M+1 independent draws a_{-M..M}. Windows of different half-width taken
 * from the same seed agree on their common indices.
 */
CoefficientVector sample_coefficients(const CoefficientModel& model, int half_width, StreamSeed seed);

}  // namespace sincgap
