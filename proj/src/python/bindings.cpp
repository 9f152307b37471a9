#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sincgap/cli.hpp"
#include "sincgap/errors.hpp"
#include "sincgap/gap_lab.hpp"
#include "sincgap/polytope_volume.hpp"
#include "sincgap/series_eval.hpp"
#include "sincgap/sinc_core.hpp"
#include "sincgap/zero_finder.hpp"

namespace py = pybind11;
using namespace sincgap;

namespace {

SeriesSample sample_from(const std::vector<double>& coefficients) {
    if (coefficients.size() % 2 == 0) {
        throw ParameterError("coefficient list must have odd length 2M + 1");
    }
    const int M = static_cast<int>(coefficients.size() / 2);
    return SeriesSample{CoefficientVector(M, coefficients), std::nullopt, "full"};
}

py::dict gap_dict(const GapEstimate& e) {
    py::dict d;
    d["r"] = e.r;
    d["trials"] = e.trials;
    d["method"] = std::string(to_string(e.method));
    d["p_hat"] = e.p_hat;
    d["ci_lo"] = e.ci_lo;
    d["ci_hi"] = e.ci_hi;
    d["ess"] = e.ess;
    d["window_m"] = e.window_m;
    d["suspect_rate"] = e.suspect_rate;
    d["hits"] = e.hits;
    return d;
}

}  // namespace

PYBIND11_MODULE(_sincgap, m) {
    m.doc() = "Random sinc series: zeros, gap probabilities and polytope volumes";
    m.attr("__version__") = cli::version();

    auto base = py::register_exception<Error>(m, "Error");
    auto param = py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", param.ptr());
    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<ContourError>(m, "ContourError", numerical.ptr());
    py::register_exception<SamplingError>(m, "SamplingError", numerical.ptr());

    m.def("sinc", py::overload_cast<double>(&sinc), py::arg("t"));
    m.def("feldheim_S", &feldheim_S, py::arg("y"));
    m.def("kac_rice_real_intensity", &kac_rice_real_intensity);

    m.def(
        "sample_coefficients",
        [](int half_width, std::uint64_t seed, std::uint64_t stream, const std::string& model) {
            CoefficientModel cm;
            cm.kind = parse_coefficient_kind(model);
            const auto a = sample_coefficients(cm, half_width, {seed, stream});
            return std::vector<double>(a.values().begin(), a.values().end());
        },
        py::arg("half_width"), py::arg("seed") = 1, py::arg("stream") = 0, py::arg("model") = "gaussian_real",
        "a_{-M..M} as a list of length 2M + 1.");

    m.def(
        "eval_series",
        [](const std::vector<double>& coefficients, std::complex<double> z) {
            return eval_series(sample_from(coefficients), z, false).value;
        },
        py::arg("coefficients"), py::arg("z"), "sum a_n sinc(z - n) over the window a_{-M..M}.");

    m.def(
        "find_real_zeros",
        [](const std::vector<double>& coefficients, double lo, double hi, double grid_step, double refine_tol) {
            const ZeroReport r = find_real_zeros(sample_from(coefficients), lo, hi, grid_step, refine_tol);
            return py::make_tuple(r.zeros, r.suspect_cells.size());
        },
        py::arg("coefficients"), py::arg("lo"), py::arg("hi"), py::arg("grid_step") = kDefaultGridStep,
        py::arg("refine_tol") = kDefaultRefineTol, "Returns (zeros, number of unresolved cells).");

    m.def(
        "count_zeros_rectangle",
        [](const std::vector<double>& coefficients, double x_lo, double x_hi, double y_lo, double y_hi, int points) {
            return *count_zeros_rectangle(sample_from(coefficients), {x_lo, x_hi, y_lo, y_hi}, points).count;
        },
        py::arg("coefficients"), py::arg("x_lo"), py::arg("x_hi"), py::arg("y_lo"), py::arg("y_hi"),
        py::arg("quadrature_points") = 80);

    m.def(
        "estimate_gap",
        [](double r, std::uint64_t trials, const std::string& method, std::uint64_t seed, double tilt_scale, int jobs) {
            GapOptions opts;
            opts.tilt_scale = tilt_scale;
            opts.jobs = jobs;
            const GapMethod m = parse_gap_method(method);
            GapEstimate e;
            {
                py::gil_scoped_release release;
                e = estimate_gap(r, trials, m, std::nullopt, {seed, 0}, opts);
            }
            return gap_dict(e);
        },
        py::arg("r"), py::arg("trials"), py::arg("method") = "naive", py::arg("seed") = 1, py::arg("tilt_scale") = 1.0,
        py::arg("jobs") = 1);

    m.def(
        "f0_profile",
        [](int N, double grid_step) {
            const F0Profile p = f0_profile(N, grid_step);
            return py::make_tuple(p.inf_val, p.sup_val, p.C_estimate);
        },
        py::arg("N"), py::arg("grid_step") = 0.01, "Returns (inf, sup, N * max |f0 - 1|).");

    m.def(
        "volume",
        [](int N, double epsilon, const std::string& method, std::uint64_t trials, std::uint64_t seed) {
            const VolumeResult v =
                method == "mc" ? volume_mc(N, epsilon, trials, {seed, 0}) : volume_recursion(N, epsilon);
            return py::make_tuple(v.volume, v.error_estimate);
        },
        py::arg("N"), py::arg("epsilon"), py::arg("method") = "recursion", py::arg("trials") = 1000000,
        py::arg("seed") = 1, "Returns (volume, error estimate).");

    m.def("tail_moment_exact", &tail_moment_exact, py::arg("N"), py::arg("L") = std::nullopt);

    m.def(
        "rademacher_zero_free",
        [](int N, int M) {
            const RademacherEnumeration e = rademacher_enumeration(N, M);
            return py::make_tuple(e.zero_free_patterns, e.mixed_core_missed);
        },
        py::arg("N"), py::arg("M"), "Returns (zero-free sign windows, mixed-core windows without a detected zero).");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "sincgap");
            return cli::run(args);
        },
        py::arg("args"), "Runs a subcommand as the command-line tool would; returns the exit code.");
}
