#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sincgap/cli.hpp"

namespace fs = std::filesystem;
using sincgap::cli::run;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "sincgap_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Everything except comment lines.
std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            out.push_back(line);
        }
    }
    return out;
}

int run_to(const fs::path& out, std::vector<std::string> args) {
    args.insert(args.begin(), "sincgap");
    args.push_back("--out");
    args.push_back(out.string());
    return run(args);
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"sincgap"}) == sincgap::cli::kParameterError);
    CHECK(run({"sincgap", "nonsense"}) == sincgap::cli::kParameterError);
    CHECK(run({"sincgap", "gap", "--r", "abc"}) == sincgap::cli::kParameterError);
    CHECK(run({"sincgap", "gap", "--r", "0.1"}) == sincgap::cli::kParameterError);
    CHECK(run({"sincgap", "volume", "--n", "3", "--format", "xml"}) == sincgap::cli::kParameterError);
    CHECK(run({"sincgap", "volume", "--out", "/nonexistent-dir/x.csv"}) == sincgap::cli::kIoError);
    CHECK(run({"sincgap", "volume", "--config", "/nonexistent-dir/c.ini"}) == sincgap::cli::kIoError);
    // a tilt that kills the effective sample size is a numerical failure
    CHECK(run({"sincgap", "gap", "--r", "1", "--trials", "1000", "--method", "tilted", "--tilt-scale", "8", "--out",
               scratch("tilt.csv").string()}) == sincgap::cli::kNumericalError);
}

TEST_CASE("csv layout: comment header, then the schema") {
    const fs::path out = scratch("gap.csv");
    REQUIRE(run_to(out, {"gap", "--r", "1", "--trials", "2000", "--seed", "3"}) == 0);
    const std::string text = slurp(out);
    CHECK(text.rfind("# sincgap ", 0) == 0);
    CHECK(text.find("# command: gap") != std::string::npos);
    CHECK(text.find("# config: seed=3") != std::string::npos);
    const auto rows = data_lines(text);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "r,trials,method,window_m,p_hat,ci_lo,ci_hi,ess,suspect_rate,seed");
    CHECK(rows[1].rfind("1,2000,naive,18,", 0) == 0);
}

TEST_CASE("decay csv ends with the fit trailer") {
    const fs::path out = scratch("decay.csv");
    REQUIRE(run_to(out, {"decay", "--trials", "3000", "--r-list", "0.5,1,1.5,2"}) == 0);
    const auto rows = data_lines(slurp(out));
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "r,p_hat,weight");
    CHECK(rows[5] == "c_hat,intercept,r_squared");
}

TEST_CASE("volume json") {
    const fs::path out = scratch("volume.json");
    REQUIRE(run_to(out, {"volume", "--n", "3", "--epsilon", "1", "--format", "json"}) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["command"] == "volume");
    CHECK(doc["version"] == sincgap::cli::version());
    CHECK(doc["config"]["n"] == "3");
    const auto& row = doc["results"]["volume"][0];
    CHECK(row["volume"].get<double>() == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
    CHECK(row["method"] == "recursion");
}

TEST_CASE("lemma json carries inf and the constant") {
    const fs::path out = scratch("lemma.json");
    REQUIRE(run_to(out, {"lemma", "--n", "10", "--grid-step", "0.005", "--format", "json"}) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    const auto& row = doc["results"]["lemma"][0];
    CHECK(row["inf_val"].get<double>() > 0.0);
    CHECK(row.contains("C_estimate"));
}

TEST_CASE("every subcommand runs") {
    const std::vector<std::vector<std::string>> commands{
        {"sample", "--n", "3", "--model", "rademacher"},
        {"zeros", "--n", "5", "--height", "1"},
        {"density", "--trials", "20", "--length", "5", "--y-list", "0.6"},
        {"volume", "--n", "4", "--method", "mc", "--trials", "100000"},
        {"event-e", "--n", "1", "--trials", "10000"},
        {"tail", "--n", "4", "--trials", "1000", "--l", "500"},
        {"rademacher", "--n", "1", "--m", "2"},
        {"cauchy-probe", "--half-widths", "100,1000", "--trials", "5"},
    };
    for (const auto& c : commands) {
        CAPTURE(c.front());
        const fs::path out = scratch(c.front() + ".csv");
        CHECK(run_to(out, c) == 0);
        CHECK(data_lines(slurp(out)).size() >= 2);
    }
}

TEST_CASE("identical flags reproduce identical numbers, whatever --jobs says") {
    const fs::path a = scratch("det_a.csv");
    const fs::path b = scratch("det_b.csv");
    const fs::path c = scratch("det_c.csv");
    const std::vector<std::string> args{"gap", "--r-list", "0.5,1,2", "--trials", "3000", "--seed", "11"};
    REQUIRE(run_to(a, args) == 0);
    REQUIRE(run_to(b, args) == 0);
    auto with_jobs = args;
    with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
    REQUIRE(run_to(c, with_jobs) == 0);
    CHECK(data_lines(slurp(a)) == data_lines(slurp(b)));
    CHECK(data_lines(slurp(a)) == data_lines(slurp(c)));
}

TEST_CASE("config files fill in options that the command line leaves out") {
    const fs::path cfg = scratch("gap.ini");
    {
        std::ofstream f(cfg);
        f << "r=2\ntrials=2000\nseed=7\n";
    }
    const fs::path out = scratch("cfg.csv");
    REQUIRE(run_to(out, {"gap", "--config", cfg.string(), "--seed", "9"}) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("# config: seed=9") != std::string::npos);
    CHECK(text.find("# config: r=2") != std::string::npos);
    const auto rows = data_lines(text);
    CHECK(rows[1].rfind("2,2000,naive,", 0) == 0);
    CHECK(rows[1].substr(rows[1].rfind(',') + 1) == "9");

    {
        std::ofstream f(cfg);
        f << "[gap]\nr=1.5\nunknown_key=1\n";
    }
    CHECK(run_to(out, {"gap", "--config", cfg.string(), "--trials", "1000"}) == sincgap::cli::kParameterError);
}
