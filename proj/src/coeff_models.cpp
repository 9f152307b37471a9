#include "sincgap/coeff_models.hpp"

#include <cmath>
#include <numbers>

#include "sincgap/errors.hpp"
#include "sincgap/special.hpp"

namespace sincgap {

std::string_view to_string(CoefficientKind kind) {
    switch (kind) {
        case CoefficientKind::gaussian_real: return "gaussian_real";
        case CoefficientKind::rademacher: return "rademacher";
        case CoefficientKind::cauchy: return "cauchy";
    }
    return "unknown";
}

CoefficientKind parse_coefficient_kind(std::string_view name) {
    if (name == "gaussian_real" || name == "gaussian") return CoefficientKind::gaussian_real;
    if (name == "rademacher") return CoefficientKind::rademacher;
    if (name == "cauchy") return CoefficientKind::cauchy;
    throw ParameterError("unknown coefficient model '" + std::string(name) + "'");
}

void CoefficientModel::validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ParameterError("coefficient model scale must be finite and > 0");
    }
    if (!std::isfinite(location)) {
        throw ParameterError("coefficient model location must be finite");
    }
}

CoefficientVector::CoefficientVector(int half_width, std::vector<double> values, CoefficientModel model,
                                     StreamSeed seed)
    : half_width_(half_width), values_(std::move(values)), model_(model), seed_(seed) {
    if (half_width < 0 || values_.size() != static_cast<std::size_t>(2 * half_width + 1)) {
        throw ParameterError("coefficient vector must hold exactly 2M+1 values");
    }
}

CoefficientVector CoefficientVector::constant(int half_width, double value) {
    return CoefficientVector(half_width, std::vector<double>(static_cast<std::size_t>(2 * half_width + 1), value));
}

namespace {

std::array<double, 2> box_muller(const std::array<std::uint64_t, 2>& block) {
    const double radius = std::sqrt(-2.0 * std::log(to_unit_open_closed(block[0])));
    const double turn = 2.0 * to_unit_closed_open(block[1]);
    return {radius * cos_pi(turn), radius * sin_pi(turn)};
}

}  // namespace

double standard_normal_draw(StreamSeed seed, RandomDomain domain, std::uint64_t slot) {
    const auto pair = box_muller(random_block(seed.master_seed, seed.stream_index, domain, slot / 2));
    return pair[slot % 2];
}

double uniform_draw(StreamSeed seed, RandomDomain domain, std::uint64_t slot) {
    const auto block = random_block(seed.master_seed, seed.stream_index, domain, slot / 2);
    return to_unit_open_closed(block[slot % 2]);
}

void fill_standard_normals(StreamSeed seed, RandomDomain domain, std::uint64_t first_slot,
                           std::span<double> out) {
    std::size_t i = 0;
    std::uint64_t slot = first_slot;
    if (slot % 2 == 1 && i < out.size()) {
        out[i++] = standard_normal_draw(seed, domain, slot++);
    }
    for (; i + 1 < out.size(); i += 2, slot += 2) {
        const auto pair = box_muller(random_block(seed.master_seed, seed.stream_index, domain, slot / 2));
        out[i] = pair[0];
        out[i + 1] = pair[1];
    }
    if (i < out.size()) {
        out[i] = standard_normal_draw(seed, domain, slot);
    }
}

double draw_coefficient(const CoefficientModel& model, StreamSeed seed, std::int64_t n) {
    const std::uint64_t slot = coefficient_slot(n);
    switch (model.kind) {
        case CoefficientKind::gaussian_real:
            return model.location + model.scale * standard_normal_draw(seed, RandomDomain::coefficients, slot);
        case CoefficientKind::rademacher: {
            const auto block = random_block(seed.master_seed, seed.stream_index, RandomDomain::coefficients, slot / 2);
            const bool positive = (block[slot % 2] >> 63) != 0;
            return model.location + model.scale * (positive ? 1.0 : -1.0);
        }
        case CoefficientKind::cauchy: {
            // Inverse CDF: tan(pi (u - 1/2)) with u strictly inside (0, 1).
            const auto block = random_block(seed.master_seed, seed.stream_index, RandomDomain::coefficients, slot / 2);
            const double t = (static_cast<double>(block[slot % 2] >> 11) + 0.5) * 0x1.0p-53 - 0.5;
            return model.location + model.scale * sin_pi(t) / cos_pi(t);
        }
    }
    throw ParameterError("unknown coefficient model");
}

CoefficientVector sample_coefficients(const CoefficientModel& model, int half_width, StreamSeed seed) {
    model.validate();
    if (half_width < 1) {
        throw ParameterError("half_width must be >= 1");
    }
    std::vector<double> values(static_cast<std::size_t>(2 * half_width + 1));
    if (model.kind == CoefficientKind::gaussian_real) {
        // Slots 2k and 2k+1 (indices k and -(k+1)) share one Box-Muller block.
        for (int k = 0; k <= half_width; ++k) {
            const auto pair = box_muller(
                random_block(seed.master_seed, seed.stream_index, RandomDomain::coefficients, static_cast<std::uint64_t>(k)));
            values[static_cast<std::size_t>(half_width + k)] = model.location + model.scale * pair[0];
            if (k + 1 <= half_width) {
                values[static_cast<std::size_t>(half_width - k - 1)] = model.location + model.scale * pair[1];
            }
        }
    } else {
        for (int n = -half_width; n <= half_width; ++n) {
            values[static_cast<std::size_t>(n + half_width)] = draw_coefficient(model, seed, n);
        }
    }
    return CoefficientVector(half_width, std::move(values), model, seed);
}

}  // namespace sincgap
