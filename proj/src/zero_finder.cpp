#include "sincgap/zero_finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sincgap/errors.hpp"
#include "sincgap/philox.hpp"
#include "sincgap/quadrature.hpp"

namespace sincgap {

void Rectangle::validate() const {
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw ParameterError("rectangle needs x_lo < x_hi and y_lo < y_hi");
    }
}

Rectangle Rectangle::dilated(double factor) const {
    const double cx = 0.5 * (x_lo + x_hi);
    const double cy = 0.5 * (y_lo + y_hi);
    const double hx = 0.5 * (x_hi - x_lo) * factor;
    const double hy = 0.5 * (y_hi - y_lo) * factor;
    return {cx - hx, cx + hx, cy - hy, cy + hy};
}

bool ambiguous_cell(double f0, double d0, double f1, double d1, double step, double guard) {
    if (f0 == 0.0 || f1 == 0.0 || (f0 > 0.0) != (f1 > 0.0)) {
        return false;
    }
    const double s = f0 > 0.0 ? 1.0 : -1.0;
    if (!(s * d0 < 0.0 && s * d1 > 0.0)) {
        return false;
    }
    return std::min(std::fabs(f0), std::fabs(f1)) < guard * step * std::max(std::fabs(d0), std::fabs(d1));
}

double bisect_zero(const RealFunction& f, double lo, double hi, double f_lo, double tol) {
    const bool lo_negative = f_lo < 0.0;
    double x = 0.5 * (lo + hi);
    double width = hi - lo;
    while (hi - lo > tol) {
        const SincPair p = f(x);
        if (p.value == 0.0) {
            return x;
        }
        ((p.value < 0.0) == lo_negative ? lo : hi) = x;
        // Newton only while it keeps halving the bracket.
        const bool stalled = hi - lo > 0.5 * width;
        width = hi - lo;
        const double newton = x - p.value / p.derivative;
        if (!stalled && std::isfinite(newton) && newton > lo && newton < hi) {
            if (std::fabs(newton - x) < 0.25 * tol) {
                return newton;
            }
            x = newton;
        } else {
            x = 0.5 * (lo + hi);
            if (x <= lo || x >= hi) {
                break;
            }
        }
    }
    return std::clamp(x, lo, hi);
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    const auto cells = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / step - 1e-9)));
    std::vector<double> grid(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        grid[i] = (i == cells) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
    }
    return grid;
}

namespace {

// Zeros of f inside one cell found by a fine rescan; returns false if the cell stays ambiguous.
bool rescan_cell(const RealFunction& f, double x0, double x1, double refine_tol, double guard,
                 std::vector<double>& zeros) {
    const double step = (x1 - x0) / kRescanFactor;
    std::array<SincPair, kRescanFactor + 1> fine;
    std::array<double, kRescanFactor + 1> xs;
    for (int j = 0; j <= kRescanFactor; ++j) {
        xs[static_cast<std::size_t>(j)] = (j == kRescanFactor) ? x1 : x0 + step * j;
        fine[static_cast<std::size_t>(j)] = f(xs[static_cast<std::size_t>(j)]);
    }
    bool resolved = true;
    bool found = false;
    for (std::size_t j = 0; j < static_cast<std::size_t>(kRescanFactor); ++j) {
        const double a = fine[j].value;
        const double b = fine[j + 1].value;
        if (j > 0 && a == 0.0) {
            zeros.push_back(xs[j]);
            found = true;
        } else if (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)) {
            zeros.push_back(bisect_zero(f, xs[j], xs[j + 1], a, refine_tol));
            found = true;
        } else if (ambiguous_cell(a, fine[j].derivative, b, fine[j + 1].derivative, step, guard)) {
            resolved = false;
        }
    }
    return resolved || found;
}

}  // namespace

ZeroReport scan_zeros(std::span<const double> grid, std::span<const double> values, std::span<const double> derivatives,
                      const RealFunction& f, double refine_tol, double guard) {
    const std::size_t n = grid.size();
    if (n < 2 || values.size() != n || derivatives.size() != n) {
        throw ParameterError("scan_zeros needs matching grid, values and derivatives");
    }
    ZeroReport report;
    report.interval = Cell{grid.front(), grid.back()};
    report.refine_tol = refine_tol;
    report.grid_step = grid[1] - grid[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = values[i];
        const double b = values[i + 1];
        if (i > 0 && a == 0.0) {
            report.zeros.push_back(grid[i]);
        } else if (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)) {
            report.zeros.push_back(bisect_zero(f, grid[i], grid[i + 1], a, refine_tol));
        } else if (ambiguous_cell(a, derivatives[i], b, derivatives[i + 1], grid[i + 1] - grid[i], guard)) {
            ++report.rescanned_cells;
            if (!rescan_cell(f, grid[i], grid[i + 1], refine_tol, guard, report.zeros)) {
                report.suspect_cells.push_back({grid[i], grid[i + 1]});
            }
        }
    }
    std::sort(report.zeros.begin(), report.zeros.end());
    std::vector<double> unique;
    for (double z : report.zeros) {
        if (unique.empty() || z - unique.back() > 2.0 * refine_tol) {
            unique.push_back(z);
        }
    }
    report.zeros = std::move(unique);
    return report;
}

ZeroReport find_real_zeros(const RealFunction& f, double lo, double hi, double grid_step, double refine_tol,
                           double guard) {
    if (!(lo < hi)) {
        throw ParameterError("find_real_zeros needs a non-empty interval");
    }
    if (!(grid_step > 0.0) || grid_step > 0.1) {
        throw ParameterError("find_real_zeros needs 0 < grid_step <= 0.1");
    }
    if (!(refine_tol > 0.0) || refine_tol > 1e-8) {
        throw ParameterError("find_real_zeros needs 0 < refine_tol <= 1e-8");
    }
    const auto grid = uniform_grid(lo, hi, grid_step);
    std::vector<double> values(grid.size());
    std::vector<double> derivatives(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const SincPair p = f(grid[i]);
        values[i] = p.value;
        derivatives[i] = p.derivative;
    }
    ZeroReport report = scan_zeros(grid, values, derivatives, f, refine_tol, guard);
    report.grid_step = grid_step;
    return report;
}

ZeroReport find_real_zeros(const SeriesSample& sample, double lo, double hi, double grid_step, double refine_tol,
                           double guard) {
    return find_real_zeros([&sample](double x) { return eval_series_real(sample, x); }, lo, hi, grid_step, refine_tol,
                           guard);
}

namespace {

constexpr int kMaxDilations = 5;
constexpr int kMaxDepth = 40;
constexpr double kBoundaryRatio = 1e-6;
constexpr double kIntegerSlack = 1e-3;

struct ContourPass {
    std::complex<double> integral = 0.0;
    double min_abs = INFINITY;
    double max_abs = 0.0;
    long evaluations = 0;
    bool exhausted = false;
};

class LogDerivativeIntegrator {
public:
    LogDerivativeIntegrator(const ComplexFunction& f, double tol_per_length) : f_(f), tol_(tol_per_length) {}

    std::complex<double> panel(std::complex<double> a, std::complex<double> b, ContourPass& pass) const {
        const auto& rule = GaussLegendre20::get();
        const std::complex<double> mid = 0.5 * (a + b);
        const std::complex<double> half = 0.5 * (b - a);
        std::complex<double> sum = 0.0;
        for (int i = 0; i < GaussLegendre20::kPoints; ++i) {
            const auto [v, d] = f_(mid + rule.nodes[static_cast<std::size_t>(i)] * half);
            ++pass.evaluations;
            const double m = std::abs(v);
            pass.min_abs = std::min(pass.min_abs, m);
            pass.max_abs = std::max(pass.max_abs, m);
            if (m > 0.0 && std::isfinite(m)) {
                sum += rule.weights[static_cast<std::size_t>(i)] * (d / v);
            }
        }
        return sum * half;
    }

    std::complex<double> adapt(std::complex<double> a, std::complex<double> b, std::complex<double> whole, int depth,
                               ContourPass& pass) const {
        const std::complex<double> m = 0.5 * (a + b);
        const std::complex<double> left = panel(a, m, pass);
        const std::complex<double> right = panel(m, b, pass);
        const std::complex<double> refined = left + right;
        if (std::abs(refined - whole) <= tol_ * std::abs(b - a)) {
            return refined;
        }
        if (depth >= kMaxDepth) {
            pass.exhausted = true;
            return refined;
        }
        return adapt(a, m, left, depth + 1, pass) + adapt(m, b, right, depth + 1, pass);
    }

private:
    const ComplexFunction& f_;
    double tol_;
};

ContourPass integrate_boundary(const ComplexFunction& f, const Rectangle& r, int quadrature_points, double tol) {
    const std::array<std::complex<double>, 4> corners{{{r.x_lo, r.y_lo}, {r.x_hi, r.y_lo}, {r.x_hi, r.y_hi}, {r.x_lo, r.y_hi}}};
    const double perimeter = 2.0 * ((r.x_hi - r.x_lo) + (r.y_hi - r.y_lo));
    const LogDerivativeIntegrator integrator(f, tol / perimeter);
    const int panels_per_edge = std::max(1, (quadrature_points + GaussLegendre20::kPoints - 1) / GaussLegendre20::kPoints);
    ContourPass pass;
    for (std::size_t e = 0; e < 4; ++e) {
        const std::complex<double> a = corners[e];
        const std::complex<double> b = corners[(e + 1) % 4];
        const std::complex<double> step = (b - a) / static_cast<double>(panels_per_edge);
        for (int p = 0; p < panels_per_edge; ++p) {
            const std::complex<double> pa = a + static_cast<double>(p) * step;
            const std::complex<double> pb = (p + 1 == panels_per_edge) ? b : pa + step;
            pass.integral += integrator.adapt(pa, pb, integrator.panel(pa, pb, pass), 0, pass);
        }
    }
    return pass;
}

}  // namespace

ZeroReport count_zeros_rectangle(const ComplexFunction& f, const Rectangle& rect, int quadrature_points,
                                 std::uint64_t dilation_seed) {
    rect.validate();
    if (quadrature_points < 1) {
        throw ParameterError("quadrature_points must be positive");
    }
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    Rectangle current = rect;
    ZeroReport report;
    report.quadrature_points = quadrature_points;
    for (int attempt = 0; attempt <= kMaxDilations; ++attempt) {
        ContourPass pass = integrate_boundary(f, current, quadrature_points, 2.0 * std::numbers::pi * 1e-6);
        report.evaluations += pass.evaluations;
        const bool near_boundary = pass.exhausted || !(pass.min_abs >= kBoundaryRatio * pass.max_abs);
        if (near_boundary) {
            const auto bits = random_block(dilation_seed, static_cast<std::uint64_t>(attempt), RandomDomain::auxiliary, 0);
            current = rect.dilated(1.001 + 0.009 * to_unit_closed_open(bits[0]));
            report.dilation_retries = attempt + 1;
            continue;
        }
        std::complex<double> winding = pass.integral / two_pi_i;
        if (std::abs(winding - std::round(winding.real())) > kIntegerSlack) {
            pass = integrate_boundary(f, current, 4 * quadrature_points, 2.0 * std::numbers::pi * 1e-9);
            report.evaluations += pass.evaluations;
            winding = pass.integral / two_pi_i;
        }
        report.rectangle = current;
        report.winding = winding;
        if (std::abs(winding - std::round(winding.real())) > kIntegerSlack) {
            std::ostringstream msg;
            msg.precision(10);
            msg << "argument-principle value " << winding.real() << (winding.imag() < 0 ? " - " : " + ")
                << std::fabs(winding.imag()) << "i is not within " << kIntegerSlack << " of an integer ("
                << pass.evaluations << " evaluations, min |f| " << pass.min_abs << ", max |f| " << pass.max_abs << ")";
            throw NumericalError(msg.str());
        }
        const long count = std::lround(winding.real());
        if (count < 0) {
            throw NumericalError("argument principle returned a negative zero count for an analytic function");
        }
        report.count = count;
        return report;
    }
    throw ContourError("zero persists near the rectangle boundary after 5 dilations");
}

ZeroReport count_zeros_rectangle(const SeriesSample& sample, const Rectangle& rect, int quadrature_points,
                                 std::uint64_t dilation_seed) {
    const ComplexFunction f = [&sample](std::complex<double> z) {
        const SeriesValue v = eval_series(sample, z, true);
        return std::make_pair(v.value, *v.derivative);
    };
    return count_zeros_rectangle(f, rect, quadrature_points, dilation_seed);
}

}  // namespace sincgap
