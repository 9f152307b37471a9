#include "sincgap/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "sincgap/errors.hpp"
#include "sincgap/gap_lab.hpp"
#include "sincgap/polytope_volume.hpp"
#include "sincgap/series_eval.hpp"
#include "sincgap/sinc_core.hpp"
#include "sincgap/zero_finder.hpp"

#ifndef SINCGAP_VERSION
#define SINCGAP_VERSION "0.0.0"
#endif

namespace sincgap::cli {

namespace {

using json = nlohmann::ordered_json;
using Value = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

struct Report {
    std::vector<Table> tables;
    json details = json::object();
};

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&v)) {
        return format_real(*d);
    }
    const auto& s = std::get<std::string>(v);
    return s.find_first_of(",\"\n") == std::string::npos ? s : "\"" + s + "\"";
}

json json_cell(const Value& v) {
    return std::visit([](const auto& x) { return json(x); }, v);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// "key=value" lines as produced by CLI11's config writer.
std::vector<std::pair<std::string, std::string>> config_entries(const CLI::App& sub) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(sub.config_to_str(true, false));
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (line.empty() || line[0] == '#' || line[0] == '[' || eq == std::string::npos) {
            continue;
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

void write_csv(std::ostream& os, const std::string& command, const std::string& timestamp,
               const std::vector<std::pair<std::string, std::string>>& config, const Report& report) {
    os << "# sincgap " << SINCGAP_VERSION << "\n";
    os << "# command: " << command << "\n";
    os << "# timestamp: " << timestamp << "\n";
    for (const auto& [k, v] : config) {
        os << "# config: " << k << "=" << v << "\n";
    }
    for (const auto& table : report.tables) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            os << (i ? "," : "") << table.columns[i];
        }
        os << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << csv_cell(row[i]);
            }
            os << "\n";
        }
    }
}

void write_json(std::ostream& os, const std::string& command, const std::string& timestamp,
                const std::vector<std::pair<std::string, std::string>>& config, const Report& report) {
    json doc;
    doc["command"] = command;
    doc["version"] = SINCGAP_VERSION;
    doc["timestamp"] = timestamp;
    json cfg = json::object();
    for (const auto& [k, v] : config) {
        cfg[k] = v;
    }
    doc["config"] = cfg;
    json results = json::object();
    for (const auto& table : report.tables) {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) {
                obj[table.columns[i]] = json_cell(row[i]);
            }
            rows.push_back(obj);
        }
        results[table.name] = rows;
    }
    doc["results"] = results;
    if (!report.details.empty()) {
        doc["details"] = report.details;
    }
    os << doc.dump(2) << "\n";
}

// Options shared by every subcommand.
struct Common {
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    int jobs = 1;
    std::string format = "csv";
    std::string out;
    double grid_step = kDefaultGridStep;
    double refine_tol = kDefaultRefineTol;
    int window_margin = kDefaultWindowMargin;

    StreamSeed stream_seed() const { return {seed, stream}; }
    GapOptions gap_options() const {
        GapOptions o;
        o.grid_step = grid_step;
        o.refine_tol = refine_tol;
        o.window_margin = window_margin;
        o.jobs = jobs;
        return o;
    }
};

struct Parameters {
    std::uint64_t trials = 0;
    int n = 0;
    int m = 0;
    double r = 1.0;
    std::vector<double> r_list;
    std::vector<double> y_list{0.3, 0.6, 1.0};
    std::vector<int> half_widths{1000, 10000, 100000, 1000000};
    double epsilon = 0.5;
    double tilt_scale = 1.0;
    double height = 0.0;
    double length = 20.0;
    double strip_width = 0.1;
    int quadrature_points = 80;
    std::int64_t l = 20000;
    std::string method;
    std::string model = "gaussian_real";
};

using Command = std::function<Report(const Common&, const Parameters&)>;

Report cmd_sample(const Common& c, const Parameters& p) {
    CoefficientModel model;
    model.kind = parse_coefficient_kind(p.model);
    const int M = p.m > 0 ? p.m : window_half_width(p.n, c.window_margin);
    const CoefficientVector a = sample_coefficients(model, M, c.stream_seed());
    Table t{"coefficients", {"n", "a_n"}, {}};
    for (int n = -M; n <= M; ++n) {
        t.rows.push_back({std::int64_t{n}, a[n]});
    }
    Report r;
    r.tables.push_back(std::move(t));
    r.details["window_m"] = M;
    r.details["model"] = std::string(to_string(model.kind));
    if (p.n >= 1 && M > p.n) {
        r.details["sup_tail_std"] = sup_tail_std(M, p.n);
    }
    return r;
}

Report cmd_zeros(const Common& c, const Parameters& p) {
    if (p.n < 1) {
        throw ParameterError("--n must be >= 1");
    }
    const int M = window_half_width(p.n, c.window_margin);
    const double radius = p.height > 0.0 ? 1.02 * std::hypot(p.n, p.height) : p.n;
    const SeriesSample sample = make_sample(CoefficientModel::gaussian(), M, c.stream_seed(), radius);
    const ZeroReport zr = find_real_zeros(sample, -p.n, p.n, c.grid_step, c.refine_tol);
    Table t{"zeros", {"index", "x"}, {}};
    for (std::size_t i = 0; i < zr.zeros.size(); ++i) {
        t.rows.push_back({static_cast<std::int64_t>(i), zr.zeros[i]});
    }
    Report r;
    r.tables.push_back(std::move(t));
    json suspects = json::array();
    for (const Cell& cell : zr.suspect_cells) {
        suspects.push_back({cell.lo, cell.hi});
    }
    r.details["window_m"] = M;
    r.details["suspect_cells"] = suspects;
    if (p.height > 0.0) {
        const ZeroReport rect = count_zeros_rectangle(sample, {-static_cast<double>(p.n), static_cast<double>(p.n), -p.height, p.height},
                                                      p.quadrature_points, c.seed);
        r.details["rectangle_count"] = *rect.count;
        r.details["winding_real"] = rect.winding.real();
        r.details["dilation_retries"] = rect.dilation_retries;
    }
    return r;
}

std::vector<Value> gap_row(const GapEstimate& e) {
    return {e.r, static_cast<std::int64_t>(e.trials), std::string(to_string(e.method)), std::int64_t{e.window_m},
            e.p_hat, e.ci_lo, e.ci_hi, e.ess, e.suspect_rate, static_cast<std::int64_t>(e.seed.master_seed)};
}

const std::vector<std::string> kGapColumns{"r", "trials", "method", "window_m", "p_hat", "ci_lo", "ci_hi", "ess", "suspect_rate", "seed"};

Report cmd_gap(const Common& c, const Parameters& p) {
    GapOptions opts = c.gap_options();
    opts.tilt_scale = p.tilt_scale;
    const GapMethod method = parse_gap_method(p.method.empty() ? "naive" : p.method);
    Table t{"gap", kGapColumns, {}};
    if (!p.r_list.empty()) {
        if (method != GapMethod::naive) {
            for (double r : p.r_list) {
                t.rows.push_back(gap_row(estimate_gap(r, p.trials, method, std::nullopt, c.stream_seed(), opts)));
            }
        } else {
            for (const auto& e : estimate_gap_curve(p.r_list, p.trials, c.stream_seed(), opts)) {
                t.rows.push_back(gap_row(e));
            }
        }
    } else {
        t.rows.push_back(gap_row(estimate_gap(p.r, p.trials, method, std::nullopt, c.stream_seed(), opts)));
    }
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_decay(const Common& c, const Parameters& p) {
    std::vector<double> radii = p.r_list;
    if (radii.empty()) {
        radii = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
    }
    const auto estimates = estimate_gap_curve(radii, p.trials, c.stream_seed(), c.gap_options());
    const DecayFit fit = fit_decay_rate(estimates);
    for (double r : fit.excluded) {
        std::cerr << "warning: r = " << r << " has no zero-free trials and was left out of the fit\n";
    }
    Table points{"points", {"r", "p_hat", "weight"}, {}};
    for (const auto& pt : fit.points) {
        points.rows.push_back({pt.r, pt.p_hat, pt.weight});
    }
    Table trailer{"fit", {"c_hat", "intercept", "r_squared"}, {{fit.c_hat, fit.intercept, fit.r_squared}}};
    Report r;
    r.tables.push_back(std::move(points));
    r.tables.push_back(std::move(trailer));
    r.details["c_se"] = fit.c_se;
    r.details["excluded"] = fit.excluded;
    return r;
}

Report cmd_density(const Common& c, const Parameters& p) {
    const GapOptions opts = c.gap_options();
    Table t{"density", {"y_lo", "y_hi", "samples", "empirical_intensity", "S_mid", "ratio"}, {}};
    const IntensityEstimate line = real_zero_intensity(p.length, p.trials, c.stream_seed(), opts);
    t.rows.push_back({0.0, 0.0, static_cast<std::int64_t>(line.samples), line.intensity, kRealLineAtom,
                      line.intensity / kRealLineAtom});
    for (double y : p.y_list) {
        const double lo = y - 0.5 * p.strip_width;
        const double hi = y + 0.5 * p.strip_width;
        const IntensityEstimate e = strip_intensity(lo, hi, p.length, p.trials, c.stream_seed(), p.quadrature_points, opts);
        const double s = feldheim_S(y);
        t.rows.push_back({lo, hi, static_cast<std::int64_t>(e.samples), e.intensity, s, e.intensity / s});
    }
    Report r;
    r.tables.push_back(std::move(t));
    r.details["kac_rice_real_intensity"] = kac_rice_real_intensity();
    r.details["real_line_se"] = line.se;
    return r;
}

Report cmd_volume(const Common& c, const Parameters& p) {
    const std::string method = p.method.empty() ? "recursion" : p.method;
    VolumeResult v;
    if (method == "recursion") {
        v = volume_recursion(p.n, p.epsilon);
    } else if (method == "mc") {
        v = volume_mc(p.n, p.epsilon, p.trials, c.stream_seed(), c.jobs);
    } else {
        throw ParameterError("volume --method must be recursion or mc");
    }
    Table t{"volume", {"n", "epsilon", "method", "volume", "error_estimate"},
            {{std::int64_t{v.N}, v.epsilon, std::string(to_string(v.method)), v.volume, v.error_estimate}}};
    Report r;
    r.tables.push_back(std::move(t));
    if (!v.stage_volumes.empty()) {
        r.details["stage_volumes"] = v.stage_volumes;
    }
    if (v.method == VolumeMethod::mc) {
        r.details["ci"] = {v.ci_lo, v.ci_hi};
        r.details["hits"] = v.hits;
    }
    return r;
}

Report cmd_lemma(const Common& c, const Parameters& p) {
    const double step = c.grid_step > 0.01 ? 0.01 : c.grid_step;
    const F0Profile f = f0_profile(p.n, step);
    Table t{"lemma", {"n", "grid_step", "inf_val", "sup_val", "C_estimate"},
            {{std::int64_t{f.N}, step, f.inf_val, f.sup_val, f.C_estimate}}};
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_event_e(const Common& c, const Parameters& p) {
    const EventEResult e = event_E_probability(p.n, p.epsilon, p.trials, c.stream_seed(), c.jobs);
    Table t{"event_e",
            {"n", "epsilon", "trials", "p_hat", "ci_lo", "ci_hi", "direct_hits", "direct_p", "analytic_lower", "paper_literal", "vol_used"},
            {{std::int64_t{e.N}, e.epsilon, static_cast<std::int64_t>(e.trials), e.p_hat, e.ci_lo, e.ci_hi,
              static_cast<std::int64_t>(e.direct_hits), e.direct_p, e.analytic_lower, e.paper_literal, e.vol_used}}};
    Report r;
    r.tables.push_back(std::move(t));
    r.details["sampled"] = e.sampled;
    return r;
}

Report cmd_tail(const Common& c, const Parameters& p) {
    const MomentEstimate mc = tail_moment_mc(p.n, p.l, p.trials, c.stream_seed(), c.jobs);
    const TailSupEstimate sup = tail_sup_probability(p.n, p.epsilon, p.trials, c.stream_seed(), c.gap_options());
    Table t{"tail",
            {"n", "epsilon", "l", "moment_exact_l", "moment_exact_inf", "moment_mc", "moment_mc_se", "p_sup", "ci_lo", "ci_hi", "floor"},
            {{std::int64_t{p.n}, p.epsilon, p.l, tail_moment_exact(p.n, p.l), tail_moment_exact(p.n, std::nullopt), mc.mean,
              mc.se, sup.p_hat, sup.ci_lo, sup.ci_hi, sup.floor}}};
    Report r;
    r.tables.push_back(std::move(t));
    r.details["window_m"] = sup.window_m;
    return r;
}

Report cmd_rademacher(const Common& c, const Parameters& p) {
    const RademacherEnumeration e = rademacher_enumeration(p.n, p.m, c.grid_step > 0.01 ? 0.01 : c.grid_step);
    Table summary{"summary",
                  {"n", "m", "total", "zero_free", "zero_free_fraction", "mixed_core", "mixed_core_missed", "constant_core", "heuristic"},
                  {{std::int64_t{e.N}, std::int64_t{e.M}, static_cast<std::int64_t>(e.total),
                    static_cast<std::int64_t>(e.zero_free_patterns.size()), e.zero_free_fraction,
                    static_cast<std::int64_t>(e.mixed_core), static_cast<std::int64_t>(e.mixed_core_missed),
                    static_cast<std::int64_t>(e.constant_core), e.heuristic}}};
    Table patterns{"zero_free_patterns", {"pattern"}, {}};
    for (const auto& signs : e.zero_free_patterns) {
        std::string s;
        for (int v : signs) {
            s += v > 0 ? '+' : '-';
        }
        patterns.rows.push_back({s});
    }
    Report r;
    r.tables.push_back(std::move(summary));
    r.tables.push_back(std::move(patterns));
    return r;
}

Report cmd_cauchy_probe(const Common& c, const Parameters& p) {
    CoefficientModel model;
    model.kind = parse_coefficient_kind(p.model);
    const auto rows = cauchy_probe(p.half_widths, static_cast<int>(p.trials), c.stream_seed(), model, c.jobs);
    Table t{"cauchy_probe", {"m", "median"}, {}};
    for (const auto& row : rows) {
        t.rows.push_back({std::int64_t{row.half_width}, row.median});
    }
    Report r;
    r.tables.push_back(std::move(t));
    r.details["model"] = std::string(to_string(model.kind));
    return r;
}

void add_common(CLI::App* sub, Common& c) {
    sub->set_config("--config", "", "Flat key=value file; command-line flags take precedence");
    sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
    sub->add_option("--stream", c.stream, "First stream index")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", c.out, "Output file (default: stdout)");
    sub->add_option("--grid-step", c.grid_step, "Zero-scan grid step")->capture_default_str();
    sub->add_option("--refine-tol", c.refine_tol, "Root refinement tolerance")->capture_default_str();
    sub->add_option("--window-margin", c.window_margin, "Explicit coefficients beyond 2N")->capture_default_str();
}

// CLI11 only reads config files registered on the top-level app, so the
// subcommand's --config file is applied here; explicit flags keep priority.
void apply_config_file(CLI::App& sub) {
    const CLI::Option* config = sub.get_config_ptr();
    if (config == nullptr || config->count() == 0) {
        return;
    }
    const std::string path = config->as<std::string>();
    for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
        if (item.name == "++" || item.name == "--") {
            continue;  // section open/close markers
        }
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents.front() == sub.get_name())) {
            continue;
        }
        CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
        if (opt == nullptr || opt == config) {
            throw CLI::ConfigError::Extras(item.fullname());
        }
        if (opt->count() > 0) {
            continue;
        }
        opt->add_result(item.inputs);
        opt->run_callback();
    }
}

}  // namespace

const char* version() {
    return SINCGAP_VERSION;
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Gap probabilities and zeros of random sinc series"};
    app.name(args.empty() ? "sincgap" : args.front());
    app.require_subcommand(1);
    app.set_version_flag("--version", SINCGAP_VERSION);

    Common common;
    // One Parameters per subcommand: CLI11 writes defaults into the bound variables at registration.
    std::map<std::string, Parameters> store;
    std::map<std::string, Command> commands;
    Parameters* current = nullptr;

    auto add = [&](const std::string& name, const std::string& help, Command fn, std::uint64_t default_trials) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, common);
        commands[name] = std::move(fn);
        current = &store[name];
        if (default_trials > 0) {
            sub->add_option("--trials", current->trials, "Monte Carlo trials")->default_val(default_trials);
        }
        return sub;
    };

    auto* sample = add("sample", "Draw one coefficient window", cmd_sample, 0);
    sample->add_option("--n", current->n, "Interval half-length N (window 2N + margin)")->default_val(5);
    sample->add_option("--m", current->m, "Explicit window half-width (overrides --n)")->default_val(0);
    sample->add_option("--model", current->model, "Coefficient law")
        ->check(CLI::IsMember({"gaussian_real", "gaussian", "rademacher", "cauchy"}))
        ->capture_default_str();

    auto* zeros = add("zeros", "Real zeros of one Gaussian sample on (-N, N)", cmd_zeros, 0);
    zeros->add_option("--n", current->n, "Interval half-length")->default_val(10);
    zeros->add_option("--height", current->height, "Also count zeros in (-N, N) x (-h, h)")->default_val(0.0);
    zeros->add_option("--quadrature-points", current->quadrature_points, "Initial nodes per edge")->default_val(80);

    auto* gap = add("gap", "Probability of no real zero in (-r, r)", cmd_gap, 100000);
    gap->add_option("--r", current->r, "Gap radius")->default_val(1.0);
    gap->add_option("--r-list", current->r_list, "Several radii (naive: common random numbers)")->delimiter(',');
    gap->add_option("--method", current->method, "naive or tilted")->check(CLI::IsMember({"naive", "tilted"}))->default_val("naive");
    gap->add_option("--tilt-scale", current->tilt_scale, "Scale of the tilt profile")->default_val(1.0);

    auto* decay = add("decay", "Exponential decay fit of the gap probability", cmd_decay, 100000);
    decay->add_option("--r-list", current->r_list, "Radii (default 0.5,1,...,4)")->delimiter(',');

    auto* density = add("density", "Real-line and strip zero intensities", cmd_density, 1000);
    density->add_option("--y-list", current->y_list, "Strip centres")->delimiter(',')->capture_default_str();
    density->add_option("--length", current->length, "Half-length of the window in x")->default_val(20.0);
    density->add_option("--strip-width", current->strip_width, "Strip height")->default_val(0.1);
    density->add_option("--quadrature-points", current->quadrature_points, "Initial nodes per edge")->default_val(80);

    auto* volume = add("volume", "Volume of the partial-sum polytope V_N", cmd_volume, 1000000);
    volume->add_option("--n", current->n, "Dimension N")->default_val(3);
    volume->add_option("--epsilon", current->epsilon, "Constraint half-width")->default_val(1.0);
    volume->add_option("--method", current->method, "recursion or mc")->check(CLI::IsMember({"recursion", "mc"}))->default_val("recursion");

    auto* lemma = add("lemma", "Profile of the all-ones series on [-N, N]", cmd_lemma, 0);
    lemma->add_option("--n", current->n, "N")->default_val(10);

    auto* event = add("event-e", "Probability of the partial-sum event E", cmd_event_e, 100000);
    event->add_option("--n", current->n, "N")->default_val(1);
    event->add_option("--epsilon", current->epsilon, "Constraint half-width")->default_val(0.5);

    auto* tail = add("tail", "Tail moment and sup-probability of the far coefficients", cmd_tail, 1000);
    tail->add_option("--n", current->n, "N")->default_val(10);
    tail->add_option("--epsilon", current->epsilon, "Threshold")->default_val(0.25);
    tail->add_option("--l", current->l, "Last index of the moment sum")->default_val(20000);

    auto* rad = add("rademacher", "Exhaustive sign windows", cmd_rademacher, 0);
    rad->add_option("--n", current->n, "N")->default_val(1);
    rad->add_option("--m", current->m, "Window half-width")->default_val(2);

    auto* cauchy = add("cauchy-probe", "Running maxima of sum a_n / n", cmd_cauchy_probe, 101);
    current->model = "cauchy";
    cauchy->add_option("--half-widths", current->half_widths, "Checkpoints M")->delimiter(',')->capture_default_str();
    cauchy->add_option("--model", current->model, "Coefficient law (default cauchy)")
        ->check(CLI::IsMember({"gaussian_real", "gaussian", "rademacher", "cauchy"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
        apply_config_file(*app.get_subcommands().front());
    } catch (const CLI::FileError& e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParameterError;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Report report;
    try {
        report = commands.at(name)(common, store.at(name));
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    }

    const auto config = config_entries(*chosen);
    const std::string timestamp = utc_timestamp();
    std::ostringstream buffer;
    if (common.format == "json") {
        write_json(buffer, name, timestamp, config, report);
    } else {
        write_csv(buffer, name, timestamp, config, report);
    }
    if (common.out.empty()) {
        std::cout << buffer.str();
        std::cout.flush();
        return std::cout ? kOk : kIoError;
    }
    std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "cannot open output file " << common.out << "\n";
        return kIoError;
    }
    file << buffer.str();
    file.close();
    if (!file) {
        std::cerr << "failed writing output file " << common.out << "\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace sincgap::cli
