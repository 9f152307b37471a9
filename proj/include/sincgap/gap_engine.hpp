#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sincgap/coeff_models.hpp"
#include "sincgap/series_eval.hpp"
#include "sincgap/tail_synthesis.hpp"

namespace sincgap {

/// What one Monte Carlo trial reports about the real zeros of its sample on (-X, X).
struct TrialOutcome {
    /// Distance from the origin to the nearest zero (or unresolved dip); +inf when none.
    double nearest = 0.0;
    /// Zeros found in (-X, X); an unresolved dip counts as a pair.
    int count = 0;
    bool rescanned = false;
    bool suspect = false;
    /// Likelihood ratio of the trial's coefficients (1 without tilting).
    double weight = 1.0;
    /// max |f| over the grid.
    double sup_abs = 0.0;
};

struct EngineConfig {
    /// Explicit coefficient window |n| <= M.
    int half_width = 0;
    /// Scan interval [-X, X]; the synthesised tail is valid there.
    double extent = 0.0;
    double grid_step = 0.05;
    double refine_tol = 1e-10;
    double guard = 1.0;
    bool synthesize_tail = true;
    /// Tilt vector mu over the window (empty = no tilt). Proposal: 1/2 N(mu, I) + 1/2 N(-mu, I).
    std::vector<double> shift;
    /// Coefficients with |n| <= zero_inner are set to 0 (the f2 piece); negative keeps all.
    int zero_inner = -1;
    /// false: only sup_abs is filled in (no zero search, no derivatives).
    bool scan = true;
    int jobs = 1;
};

/**
 * Batched evaluation of many samples on one grid. Values and derivatives of
 * all trials in a chunk come from two matrix products against precomputed
 * sinc (and tail-mode) tables; zero brackets are then refined pointwise.
 * Trial t uses stream seed.stream_index + t, so the outcome of a trial does
 * not depend on chunking or on the number of workers.
 */
class GridEngine {
public:
    explicit GridEngine(EngineConfig config);

    const EngineConfig& config() const { return config_; }
    std::span<const double> grid() const { return grid_; }
    int tail_rank() const { return tail_ ? tail_->rank() : 0; }

    std::vector<TrialOutcome> run(std::uint64_t trials, StreamSeed seed) const;

    /// The sample a trial evaluates (tilted coefficients included).
    SeriesSample trial_sample(StreamSeed trial_seed) const;

    static constexpr std::size_t kChunk = 1024;

private:
    struct Draw {
        std::vector<double> coefficients;
        std::vector<double> modes;
        double weight = 1.0;
    };
    Draw draw(StreamSeed trial_seed) const;
    TrialOutcome analyse(const Draw& d, StreamSeed trial_seed, std::span<const double> values,
                         std::span<const double> derivatives) const;

    EngineConfig config_;
    std::vector<double> grid_;
    std::shared_ptr<const TailModel> tail_;
    double shift_norm_sq_ = 0.0;
    Eigen::MatrixXd sinc_values_;       // (2M+1) x G
    Eigen::MatrixXd sinc_derivatives_;  // (2M+1) x G
    Eigen::MatrixXd mode_values_;       // rank x G
    Eigen::MatrixXd mode_derivatives_;  // rank x G
};

}  // namespace sincgap
