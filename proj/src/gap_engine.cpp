#include "sincgap/gap_engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "sincgap/errors.hpp"
#include "sincgap/parallel.hpp"
#include "sincgap/sinc_core.hpp"
#include "sincgap/zero_finder.hpp"

namespace sincgap {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double log_cosh(double t) {
    const double a = std::fabs(t);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double distance_to_origin(const Cell& c) {
    if (c.lo <= 0.0 && c.hi >= 0.0) {
        return 0.0;
    }
    return std::min(std::fabs(c.lo), std::fabs(c.hi));
}

}  // namespace

GridEngine::GridEngine(EngineConfig config) : config_(std::move(config)) {
    const int M = config_.half_width;
    if (M < 1 || !(config_.extent > 0.0) || config_.extent >= M) {
        throw ParameterError("grid engine needs M >= 1 and 0 < X < M");
    }
    if (!(config_.grid_step > 0.0) || config_.grid_step > 0.1) {
        throw ParameterError("grid_step must lie in (0, 0.1]");
    }
    if (!(config_.refine_tol > 0.0) || config_.refine_tol > 1e-8) {
        throw ParameterError("refine_tol must lie in (0, 1e-8]");
    }
    if (config_.zero_inner >= M) {
        throw ParameterError("zero_inner must be smaller than the window");
    }
    if (!config_.shift.empty() && config_.shift.size() != static_cast<std::size_t>(2 * M + 1)) {
        throw ParameterError("shift must have one entry per window coefficient");
    }
    for (double mu : config_.shift) {
        shift_norm_sq_ += mu * mu;
    }

    grid_ = uniform_grid(-config_.extent, config_.extent, config_.grid_step);
    const auto G = static_cast<Eigen::Index>(grid_.size());
    sinc_values_.resize(2 * M + 1, G);
    sinc_derivatives_.resize(2 * M + 1, G);
    for (Eigen::Index g = 0; g < G; ++g) {
        for (int n = -M; n <= M; ++n) {
            const SincPair p = sinc_pair(grid_[static_cast<std::size_t>(g)] - n);
            sinc_values_(n + M, g) = p.value;
            sinc_derivatives_(n + M, g) = p.derivative;
        }
    }

    if (config_.synthesize_tail) {
        tail_ = TailModel::get(M, config_.extent);
        const int rank = tail_->rank();
        mode_values_.resize(rank, G);
        mode_derivatives_.resize(rank, G);
        std::vector<double> v(static_cast<std::size_t>(rank));
        std::vector<double> d(static_cast<std::size_t>(rank));
        for (Eigen::Index g = 0; g < G; ++g) {
            tail_->mode_values(grid_[static_cast<std::size_t>(g)], v, d);
            for (int m = 0; m < rank; ++m) {
                mode_values_(m, g) = v[static_cast<std::size_t>(m)];
                mode_derivatives_(m, g) = d[static_cast<std::size_t>(m)];
            }
        }
    }
}

GridEngine::Draw GridEngine::draw(StreamSeed trial_seed) const {
    Draw d;
    const CoefficientVector z = sample_coefficients(CoefficientModel::gaussian(), config_.half_width, trial_seed);
    d.coefficients.assign(z.values().begin(), z.values().end());
    if (!config_.shift.empty()) {
        const double sign = uniform_draw(trial_seed, RandomDomain::auxiliary, 0) <= 0.5 ? 1.0 : -1.0;
        double dot = 0.0;
        for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
            d.coefficients[i] += sign * config_.shift[i];
            dot += config_.shift[i] * d.coefficients[i];
        }
        d.weight = std::exp(0.5 * shift_norm_sq_ - log_cosh(dot));
    }
    for (int n = -config_.zero_inner; n <= config_.zero_inner; ++n) {
        d.coefficients[static_cast<std::size_t>(n + config_.half_width)] = 0.0;
    }
    if (tail_) {
        d.modes.resize(static_cast<std::size_t>(tail_->rank()));
        tail_->draw_modes(trial_seed, d.modes);
    }
    return d;
}

SeriesSample GridEngine::trial_sample(StreamSeed trial_seed) const {
    Draw d = draw(trial_seed);
    SeriesSample sample{CoefficientVector(config_.half_width, std::move(d.coefficients), CoefficientModel::gaussian(), trial_seed),
                        std::nullopt, "full"};
    if (tail_) {
        sample.tail = tail_->from_modes(d.modes);
    }
    return sample;
}

TrialOutcome GridEngine::analyse(const Draw& d, StreamSeed trial_seed, std::span<const double> values,
                                 std::span<const double> derivatives) const {
    std::optional<SeriesSample> sample;
    auto pointwise = [&](double x) {
        if (!sample) {
            sample = SeriesSample{CoefficientVector(config_.half_width, d.coefficients, CoefficientModel::gaussian(), trial_seed),
                                  std::nullopt, "full"};
            if (tail_) {
                sample->tail = tail_->from_modes(d.modes);
            }
        }
        return eval_series_real(*sample, x);
    };

    ZeroReport report = scan_zeros(grid_, values, derivatives, pointwise, config_.refine_tol, config_.guard);
    TrialOutcome out;
    out.weight = d.weight;
    for (double v : values) {
        out.sup_abs = std::max(out.sup_abs, std::fabs(v));
    }
    out.rescanned = report.rescanned_cells > 0;
    if (report.suspect()) {
        // Ambiguous even after the cell rescan: repeat the whole scan at a quarter of the step.
        out.rescanned = true;
        report = find_real_zeros(pointwise, -config_.extent, config_.extent, config_.grid_step / 4.0,
                                 config_.refine_tol, config_.guard);
        out.suspect = report.suspect();
    }
    out.nearest = std::numeric_limits<double>::infinity();
    for (double z : report.zeros) {
        out.nearest = std::min(out.nearest, std::fabs(z));
    }
    for (const Cell& c : report.suspect_cells) {
        out.nearest = std::min(out.nearest, distance_to_origin(c));
    }
    out.count = static_cast<int>(report.zeros.size() + 2 * report.suspect_cells.size());
    return out;
}

std::vector<TrialOutcome> GridEngine::run(std::uint64_t trials, StreamSeed seed) const {
    const auto K = static_cast<Eigen::Index>(2 * config_.half_width + 1);
    const auto G = static_cast<Eigen::Index>(grid_.size());
    const int rank = tail_rank();

    auto chunks = parallel_chunks<std::vector<TrialOutcome>>(
        trials, kChunk, config_.jobs, [&](std::size_t begin, std::size_t end) {
            const auto T = static_cast<Eigen::Index>(end - begin);
            std::vector<Draw> draws;
            draws.reserve(static_cast<std::size_t>(T));
            RowMatrix A(T, K);
            RowMatrix X(T, rank);
            for (Eigen::Index t = 0; t < T; ++t) {
                const StreamSeed s{seed.master_seed, seed.stream_index + begin + static_cast<std::size_t>(t)};
                draws.push_back(draw(s));
                const Draw& d = draws.back();
                A.row(t) = Eigen::Map<const Eigen::RowVectorXd>(d.coefficients.data(), K);
                if (rank > 0) {
                    X.row(t) = Eigen::Map<const Eigen::RowVectorXd>(d.modes.data(), rank);
                }
            }
            RowMatrix F = A * sinc_values_;
            if (rank > 0) {
                F.noalias() += X * mode_values_;
            }
            std::vector<TrialOutcome> out;
            out.reserve(static_cast<std::size_t>(T));
            if (!config_.scan) {
                for (Eigen::Index t = 0; t < T; ++t) {
                    TrialOutcome o;
                    o.weight = draws[static_cast<std::size_t>(t)].weight;
                    o.sup_abs = F.row(t).cwiseAbs().maxCoeff();
                    out.push_back(o);
                }
                return out;
            }
            RowMatrix D = A * sinc_derivatives_;
            if (rank > 0) {
                D.noalias() += X * mode_derivatives_;
            }
            for (Eigen::Index t = 0; t < T; ++t) {
                const StreamSeed s{seed.master_seed, seed.stream_index + begin + static_cast<std::size_t>(t)};
                out.push_back(analyse(draws[static_cast<std::size_t>(t)], s,
                                      std::span<const double>(F.row(t).data(), static_cast<std::size_t>(G)),
                                      std::span<const double>(D.row(t).data(), static_cast<std::size_t>(G))));
            }
            return out;
        });

    std::vector<TrialOutcome> all;
    all.reserve(trials);
    for (auto& c : chunks) {
        all.insert(all.end(), c.begin(), c.end());
    }
    return all;
}

}  // namespace sincgap
