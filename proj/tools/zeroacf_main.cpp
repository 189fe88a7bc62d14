// zeroacf command line tool. Talks to the library exclusively through the
// public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeroacf/zeroacf.h"

namespace {

struct StringFree {
    void operator()(char* s) const { zacf_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

int fail(zacf_status status) {
    std::cerr << "error: " << zacf_last_error() << "\n";
    return static_cast<int>(status);
}

int fail_validation(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return static_cast<int>(ZACF_ERROR_VALIDATION);
}

bool parse_kernel(const std::string& name, int& out) {
    if (name == "epa" || name == "epanechnikov") {
        out = ZACF_KERNEL_EPANECHNIKOV;
    } else if (name == "rect" || name == "rectangular") {
        out = ZACF_KERNEL_RECTANGULAR;
    } else if (name == "tri" || name == "triangular") {
        out = ZACF_KERNEL_TRIANGULAR;
    } else {
        return false;
    }
    return true;
}

bool parse_case(const std::string& name, int& out) {
    if (name == "i" || name == "1") {
        out = ZACF_CASE_I;
    } else if (name == "ii" || name == "2") {
        out = ZACF_CASE_II;
    } else if (name == "iii" || name == "3") {
        out = ZACF_CASE_III;
    } else if (name == "iv" || name == "4") {
        out = ZACF_CASE_IV;
    } else {
        return false;
    }
    return true;
}

// "lo:hi:k"
bool parse_grid(const std::string& text, double& lo, double& hi, int& size) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) return false;
    try {
        lo = std::stod(parts[0]);
        hi = std::stod(parts[1]);
        size = std::stoi(parts[2]);
    } catch (...) {
        return false;
    }
    return true;
}

// "auto" or a number in (0, 1]
bool parse_bandwidth(const std::string& text, double& out) {
    if (text == "auto") {
        out = 0.0;
        return true;
    }
    try {
        out = std::stod(text);
    } catch (...) {
        return false;
    }
    return out > 0.0;
}

bool parse_lengths(const std::string& text, std::vector<int64_t>& out) {
    out.clear();
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoll(part));
        } catch (...) {
            return false;
        }
    }
    return !out.empty();
}

bool write_file(const std::string& path, const char* contents, std::string& error) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        error = "cannot open '" + path + "' for writing";
        return false;
    }
    out << contents;
    if (!out) {
        error = "write to '" + path + "' failed";
        return false;
    }
    return true;
}

std::map<std::string, std::string> read_config_file(const std::string& path, bool& ok) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    ok = static_cast<bool>(in);
    if (!ok) return kv;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

struct AnalyzeArgs {
    std::string input;
    int lags = 1;
    std::string kernel = "epa";
    std::string bandwidth = "auto";
    std::string grid;
    double level = 0.95;
    double zero_tol = 0.0;
    bool demean = false;
    bool paper_cv = false;
    double kappa_ref = std::numeric_limits<double>::quiet_NaN();
    std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
    zacf_analyze_options options;
    zacf_analyze_options_init(&options);
    options.max_lag = args.lags;
    options.level = args.level;
    options.demean = args.demean ? 1 : 0;
    options.paper_cv_target = args.paper_cv ? 1 : 0;
    options.kappa_ref = args.kappa_ref;
    if (!parse_kernel(args.kernel, options.kernel)) {
        return fail_validation("unknown kernel '" + args.kernel + "' (use epa, rect or tri)");
    }
    if (!parse_bandwidth(args.bandwidth, options.bandwidth)) {
        return fail_validation("bandwidth must be 'auto' or a positive number");
    }
    if (!args.grid.empty() &&
        !parse_grid(args.grid, options.grid_lo, options.grid_hi, options.grid_size)) {
        return fail_validation("grid must look like lo:hi:count");
    }

    zacf_series* series = nullptr;
    zacf_status status = zacf_series_read_csv(args.input.c_str(), args.zero_tol, &series);
    if (status != ZACF_OK) return fail(status);
    std::unique_ptr<zacf_series, decltype(&zacf_series_free)> series_guard(series,
                                                                           zacf_series_free);

    zacf_report* report = nullptr;
    status = zacf_analyze(series, &options, &report);
    if (status != ZACF_OK) return fail(status);
    std::unique_ptr<zacf_report, decltype(&zacf_report_free)> report_guard(report,
                                                                           zacf_report_free);

    CString json(zacf_report_json(report));
    if (!json) return fail_validation("out of memory");
    std::cout << json.get();

    if (!args.out.empty()) {
        CString csv(zacf_report_csv(report));
        if (!csv) return fail_validation("out of memory");
        std::string error;
        if (!write_file(args.out, csv.get(), error)) {
            std::cerr << "error: " << error << "\n";
            return static_cast<int>(ZACF_ERROR_IO);
        }
    }
    return 0;
}

struct BandwidthArgs {
    std::string input;
    int lag = 0;
    std::string kernel = "epa";
    std::string grid;
    double zero_tol = 0.0;
    bool paper_cv = false;
    std::string out;
};

int run_bandwidth(const BandwidthArgs& args) {
    zacf_analyze_options options;
    zacf_analyze_options_init(&options);
    options.paper_cv_target = args.paper_cv ? 1 : 0;
    if (!parse_kernel(args.kernel, options.kernel)) {
        return fail_validation("unknown kernel '" + args.kernel + "' (use epa, rect or tri)");
    }
    if (!args.grid.empty() &&
        !parse_grid(args.grid, options.grid_lo, options.grid_hi, options.grid_size)) {
        return fail_validation("grid must look like lo:hi:count");
    }

    zacf_series* series = nullptr;
    zacf_status status = zacf_series_read_csv(args.input.c_str(), args.zero_tol, &series);
    if (status != ZACF_OK) return fail(status);
    std::unique_ptr<zacf_series, decltype(&zacf_series_free)> series_guard(series,
                                                                           zacf_series_free);

    zacf_cv_curve* curve = nullptr;
    status = zacf_bandwidth_curve(series, args.lag, &options, &curve);
    if (status != ZACF_OK) return fail(status);
    std::unique_ptr<zacf_cv_curve, decltype(&zacf_cv_curve_free)> curve_guard(curve,
                                                                              zacf_cv_curve_free);

    CString csv(zacf_cv_curve_csv(curve));
    if (!csv) return fail_validation("out of memory");
    if (args.out.empty()) {
        std::cout << csv.get();
    } else {
        std::string error;
        if (!write_file(args.out, csv.get(), error)) {
            std::cerr << "error: " << error << "\n";
            return static_cast<int>(ZACF_ERROR_IO);
        }
    }
    return 0;
}

struct SimulateArgs {
    std::string config_path;
    std::string dgp_case = "iv";
    std::string lengths = "500";
    int64_t trials = 1000;
    bool trials_given = false;
    uint64_t seed = 0;
    double level = 0.95;
    std::string kernel = "epa";
    std::string bandwidth = "auto";
    std::string grid;
    std::string innovation = "uncorrelated";
    bool one_sided = false;
    int lags = 1;
    int threads = 0;
    std::string out = "mc_summary";
    std::string emit_series;
};

int run_simulate(SimulateArgs args, const CLI::App* cmd) {
    // Config file values fill in anything not given on the command line.
    if (!args.config_path.empty()) {
        bool ok = false;
        const auto kv = read_config_file(args.config_path, ok);
        if (!ok) {
            std::cerr << "error: cannot open config '" << args.config_path << "'\n";
            return static_cast<int>(ZACF_ERROR_IO);
        }
        auto take = [&](const char* key, const char* flag, std::string& slot) {
            if (kv.count(key) && cmd->count(flag) == 0) slot = kv.at(key);
        };
        take("case", "--case", args.dgp_case);
        take("n", "--n", args.lengths);
        take("kernel", "--kernel", args.kernel);
        take("bandwidth", "--bandwidth", args.bandwidth);
        take("grid", "--grid", args.grid);
        take("innovation", "--innovation", args.innovation);
        try {
            if ((kv.count("N") || kv.count("trials")) && cmd->count("--trials") == 0) {
                args.trials = std::stoll(kv.count("N") ? kv.at("N") : kv.at("trials"));
                args.trials_given = true;
            }
            if (kv.count("seed") && cmd->count("--seed") == 0)
                args.seed = std::stoull(kv.at("seed"));
            if (kv.count("level") && cmd->count("--level") == 0)
                args.level = std::stod(kv.at("level"));
            if (kv.count("lags") && cmd->count("--lags") == 0) args.lags = std::stoi(kv.at("lags"));
            if (kv.count("threads") && cmd->count("--threads") == 0)
                args.threads = std::stoi(kv.at("threads"));
            if (kv.count("one_sided_threshold") && cmd->count("--one-sided-threshold") == 0)
                args.one_sided = kv.at("one_sided_threshold") == "true" ||
                                 kv.at("one_sided_threshold") == "1";
        } catch (...) {
            return fail_validation("malformed numeric value in config '" + args.config_path + "'");
        }
    }

    zacf_mc_config config;
    int case_id = ZACF_CASE_IV;
    if (!parse_case(args.dgp_case, case_id)) {
        return fail_validation("unknown case '" + args.dgp_case + "' (use i, ii, iii or iv)");
    }
    zacf_mc_config_init(&config, case_id);
    std::vector<int64_t> lengths;
    if (!parse_lengths(args.lengths, lengths)) {
        return fail_validation("n must be a comma-separated list of lengths");
    }
    config.lengths = lengths.data();
    config.length_count = lengths.size();
    config.trials = args.trials;
    config.max_lag = args.lags;
    config.level = args.level;
    config.threads = args.threads;
    config.sim.seed = args.seed;
    config.sim.one_sided_threshold = args.one_sided ? 1 : 0;
    if (args.innovation == "correlated") {
        config.sim.innovation = ZACF_INNOVATION_CORRELATED;
    } else if (args.innovation == "uncorrelated") {
        config.sim.innovation = ZACF_INNOVATION_UNCORRELATED;
    } else {
        return fail_validation("innovation must be 'correlated' or 'uncorrelated'");
    }
    if (!parse_kernel(args.kernel, config.kernel)) {
        return fail_validation("unknown kernel '" + args.kernel + "' (use epa, rect or tri)");
    }
    if (!parse_bandwidth(args.bandwidth, config.bandwidth)) {
        return fail_validation("bandwidth must be 'auto' or a positive number");
    }
    if (!args.grid.empty() &&
        !parse_grid(args.grid, config.grid_lo, config.grid_hi, config.grid_size)) {
        return fail_validation("grid must look like lo:hi:count");
    }

    if (!args.emit_series.empty()) {
        zacf_sim_config sim = config.sim;
        sim.n = lengths.front();
        zacf_series* series = nullptr;
        zacf_status status = zacf_simulate(&sim, &series);
        if (status != ZACF_OK) return fail(status);
        status = zacf_series_write_csv(series, args.emit_series.c_str());
        zacf_series_free(series);
        if (status != ZACF_OK) return fail(status);
        std::cout << "wrote " << args.emit_series << "\n";
        if (!args.trials_given) return 0; // trajectory only, no Monte Carlo pass
    }

    zacf_mc_result* result = nullptr;
    zacf_status status = zacf_mc_run(&config, &result);
    if (status != ZACF_OK) return fail(status);
    std::unique_ptr<zacf_mc_result, decltype(&zacf_mc_result_free)> result_guard(
        result, zacf_mc_result_free);

    CString csv(zacf_mc_result_csv(result));
    CString json(zacf_mc_result_json(result));
    if (!csv || !json) return fail_validation("out of memory");
    std::string error;
    if (!write_file(args.out + ".csv", csv.get(), error) ||
        !write_file(args.out + ".json", json.get(), error)) {
        std::cerr << "error: " << error << "\n";
        return static_cast<int>(ZACF_ERROR_IO);
    }
    std::cout << "wrote " << args.out << ".csv and " << args.out << ".json\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial correlations of non-zero returns, with zero-probability and "
                 "heteroscedasticity corrections"};
    app.set_version_flag("--version", std::string("zeroacf ") + zacf_version());
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "estimate corrected autocorrelations from a CSV");
    analyze_cmd->add_option("--input", analyze_args.input, "CSV file (date,close or return)")
        ->required();
    analyze_cmd->add_option("--lags", analyze_args.lags, "maximum lag (default 1)");
    analyze_cmd->add_option("--kernel", analyze_args.kernel, "epa, rect or tri");
    analyze_cmd->add_option("--bandwidth", analyze_args.bandwidth, "'auto' (LOOCV) or fixed b");
    analyze_cmd->add_option("--grid", analyze_args.grid, "LOOCV grid lo:hi:count");
    analyze_cmd->add_option("--level", analyze_args.level, "confidence level (default 0.95)");
    analyze_cmd->add_option("--zero-tol", analyze_args.zero_tol, "zero-return tolerance");
    analyze_cmd->add_flag("--demean", analyze_args.demean, "subtract the sample mean");
    analyze_cmd->add_flag("--paper-cv", analyze_args.paper_cv,
                          "use the printed CV target a_t a_{t-1} for b0");
    analyze_cmd->add_option("--kappa-ref", analyze_args.kappa_ref,
                            "null reference quantile for the kappa advisory");
    analyze_cmd->add_option("--out", analyze_args.out, "also write a per-lag CSV table here");

    BandwidthArgs bandwidth_args;
    CLI::App* bandwidth_cmd =
        app.add_subcommand("bandwidth", "LOOCV criterion curve over a bandwidth grid");
    bandwidth_cmd->add_option("--input", bandwidth_args.input, "CSV file")->required();
    bandwidth_cmd->add_option("--lags", bandwidth_args.lag,
                              "lag of the smoothed curve (0 = marginal)");
    bandwidth_cmd->add_option("--kernel", bandwidth_args.kernel, "epa, rect or tri");
    bandwidth_cmd->add_option("--grid", bandwidth_args.grid, "grid lo:hi:count");
    bandwidth_cmd->add_option("--zero-tol", bandwidth_args.zero_tol, "zero-return tolerance");
    bandwidth_cmd->add_flag("--paper-cv", bandwidth_args.paper_cv,
                            "use the printed CV target for lag 0");
    bandwidth_cmd->add_option("--out", bandwidth_args.out, "write the CSV here (default stdout)");

    SimulateArgs simulate_args;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo experiments on the synthetic DGP");
    simulate_cmd->add_option("--config", simulate_args.config_path,
                             "key=value config file (flags win)");
    simulate_cmd->add_option("--case", simulate_args.dgp_case, "i, ii, iii or iv");
    simulate_cmd->add_option("--n", simulate_args.lengths, "trajectory length(s), comma separated");
    simulate_cmd->add_option("--trials", simulate_args.trials, "Monte Carlo trials per length");
    simulate_cmd->add_option("--seed", simulate_args.seed, "base seed (trial t uses seed^t)");
    simulate_cmd->add_option("--level", simulate_args.level, "confidence level");
    simulate_cmd->add_option("--kernel", simulate_args.kernel, "epa, rect or tri");
    simulate_cmd->add_option("--bandwidth", simulate_args.bandwidth,
                             "'auto' (per-trial LOOCV) or fixed b");
    simulate_cmd->add_option("--grid", simulate_args.grid, "LOOCV grid lo:hi:count");
    simulate_cmd->add_option("--innovation", simulate_args.innovation,
                             "correlated or uncorrelated");
    simulate_cmd->add_flag("--one-sided-threshold", simulate_args.one_sided,
                           "uncorrelated variant: threshold x_t > 0.01 as printed");
    simulate_cmd->add_option("--lags", simulate_args.lags, "maximum lag (default 1)");
    simulate_cmd->add_option("--threads", simulate_args.threads, "worker cap (0 = auto)");
    simulate_cmd->add_option("--out", simulate_args.out,
                             "output prefix for .csv/.json (default mc_summary)");
    simulate_cmd->add_option("--emit-series", simulate_args.emit_series,
                             "write one simulated trajectory as a return CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ZACF_ERROR_VALIDATION);
    }

    if (analyze_cmd->parsed()) return run_analyze(analyze_args);
    if (bandwidth_cmd->parsed()) return run_bandwidth(bandwidth_args);
    simulate_args.trials_given = simulate_cmd->count("--trials") > 0;
    return run_simulate(simulate_args, simulate_cmd);
}
