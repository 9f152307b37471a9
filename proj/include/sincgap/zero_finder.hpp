#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sincgap/series_eval.hpp"
#include "sincgap/sinc_core.hpp"

namespace sincgap {

struct Rectangle {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    /// Throws ParameterError unless x_lo < x_hi and y_lo < y_hi.
    void validate() const;
    /// Scaled by `factor` about its centre.
    Rectangle dilated(double factor) const;
};

struct Cell {
    double lo = 0.0;
    double hi = 0.0;
};

struct ZeroReport {
    // Real-line search
    std::optional<Cell> interval;
    std::vector<double> zeros;
    /// Cells where |f| dipped towards zero without a resolved sign change, even after a finer rescan.
    std::vector<Cell> suspect_cells;
    /// Number of cells that needed the fine rescan (resolved or not).
    int rescanned_cells = 0;
    double grid_step = 0.0;
    double refine_tol = 0.0;

    // Rectangle count
    std::optional<Rectangle> rectangle;
    std::optional<long> count;
    /// (1/2 pi i) * contour integral of f'/f before rounding.
    std::complex<double> winding{};
    int dilation_retries = 0;
    int quadrature_points = 0;
    long evaluations = 0;

    bool suspect() const { return !suspect_cells.empty(); }
};

/// Value and derivative of a real function.
using RealFunction = std::function<SincPair(double)>;
/// Value and derivative of an analytic function.
using ComplexFunction = std::function<std::pair<std::complex<double>, std::complex<double>>(std::complex<double>)>;

/// Default multiplier of the |f|-dip guard: a cell is ambiguous when min |f| < guard * step * max |f'|.
inline constexpr double kDefaultGuard = 1.0;
/// Cells that look ambiguous are rescanned at step / kRescanFactor.
inline constexpr int kRescanFactor = 32;
inline constexpr double kDefaultGridStep = 0.05;
inline constexpr double kDefaultRefineTol = 1e-10;

/**
 * True when the cell [x0, x1] has endpoint values of one sign, |f| decreasing
 * into the cell from both ends, and min |f| small against step * max |f'|:
 * the signature of a pair of close zeros (or a tangency) hidden inside.
 */
bool ambiguous_cell(double f0, double d0, double f1, double d1, double step, double guard);

/// Zero inside a bracket with f(lo) f(hi) < 0: Newton steps kept inside the bracket, bisection otherwise; accurate to tol.
double bisect_zero(const RealFunction& f, double lo, double hi, double f_lo, double tol);

/**
 * Zeros in the open interval (grid.front(), grid.back()) from precomputed values
 * and derivatives on an increasing grid; `f` is used for bisection and rescans.
 */
ZeroReport scan_zeros(std::span<const double> grid, std::span<const double> values, std::span<const double> derivatives,
                      const RealFunction& f, double refine_tol, double guard = kDefaultGuard);

/// Sign-change scan of (lo, hi) at grid_step (<= 0.1), bisection to refine_tol (<= 1e-8).
ZeroReport find_real_zeros(const RealFunction& f, double lo, double hi, double grid_step, double refine_tol,
                           double guard = kDefaultGuard);
ZeroReport find_real_zeros(const SeriesSample& sample, double lo, double hi, double grid_step, double refine_tol,
                           double guard = kDefaultGuard);

/// Uniform grid over [lo, hi] with spacing at most step, endpoints included.
std::vector<double> uniform_grid(double lo, double hi, double step);

/**
 * Number of zeros inside `rect` from the argument principle, integrating f'/f
 * with adaptive 20-point Gauss-Legendre panels (initially quadrature_points
 * nodes per edge). When |f| on the contour comes within 1e-6 of its maximum
 * the rectangle is dilated about its centre by a factor drawn from
 * [1.001, 1.01] (from `dilation_seed`) and retried, at most 5 times.
 */
ZeroReport count_zeros_rectangle(const ComplexFunction& f, const Rectangle& rect, int quadrature_points,
                                 std::uint64_t dilation_seed = 0);
ZeroReport count_zeros_rectangle(const SeriesSample& sample, const Rectangle& rect, int quadrature_points,
                                 std::uint64_t dilation_seed = 0);

}  // namespace sincgap
