// End-to-end checks of the installed command line surface. Takes the CLI
// binary path as argv[1]; fixture files live under tests/data in the
// source tree.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_cli;

#define CHECK_MSG(cond, msg)                                                                     \
    do {                                                                                         \
        if (!(cond)) {                                                                           \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << " " << msg << "\n";           \
            ++g_failures;                                                                        \
        }                                                                                        \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    RunResult result;
    const std::string command = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.stdout_text.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
}

const std::string kData = std::string(ZEROACF_SOURCE_DIR) + "/tests/data";

void test_golden_analyze() {
    const RunResult r = run("analyze --input " + kData + "/case_iv_seed42_n1500.csv");
    CHECK_MSG(r.exit_code == 0, "golden analyze exit code " << r.exit_code);
    const std::string golden = read_file(kData + "/case_iv_seed42_n1500.golden.json");
    CHECK_MSG(!golden.empty(), "golden file missing");
    CHECK_MSG(r.stdout_text == golden, "golden analyze output drifted");
}

void test_molymet_like_advisory() {
    // 0.024 is the simulated case-(iv) null 95th percentile at this sample
    // size; the case-(i) fixture lands far above it.
    const RunResult r =
        run("analyze --input " + kData + "/molymet_like.csv --kappa-ref 0.024");
    CHECK_MSG(r.exit_code == 0, "molymet-like analyze exit code " << r.exit_code);
    CHECK_MSG(r.stdout_text.find("vpr correction is advisable") != std::string::npos,
              "advisory should recommend vpr");
    // kappa itself is large
    const auto pos = r.stdout_text.find("\"kappa\":");
    CHECK_MSG(pos != std::string::npos, "kappa missing from report");
    const double kappa = std::strtod(r.stdout_text.c_str() + pos + 8, nullptr);
    CHECK_MSG(kappa > 0.05, "kappa " << kappa << " not large");
}

void test_two_row_csv() {
    write_file("cli_two_row.csv", "date,close\n2020-01-01,100\n2020-01-02,101\n");
    const RunResult r = run("analyze --input cli_two_row.csv");
    CHECK_MSG(r.exit_code == 0, "two-row analyze exit code " << r.exit_code);
    CHECK_MSG(r.stdout_text.find("\"max_lag\": 0") != std::string::npos, "m should clamp to 0");
    CHECK_MSG(r.stdout_text.find("clamped") != std::string::npos, "expected a clamp warning");
    std::remove("cli_two_row.csv");
}

void test_exit_codes() {
    CHECK_MSG(run("analyze --input does_not_exist.csv").exit_code == 3, "missing input => 3");

    write_file("cli_bad_price.csv", "date,close\n2020-01-01,100\n2020-01-02,-5\n");
    CHECK_MSG(run("analyze --input cli_bad_price.csv").exit_code == 2, "bad price => 2");
    std::remove("cli_bad_price.csv");

    write_file("cli_zeros.csv", "return\n0\n0\n0\n0\n0\n0\n0\n0\n");
    CHECK_MSG(run("analyze --input cli_zeros.csv --bandwidth 1.0").exit_code == 4,
              "all zero returns => 4");
    std::remove("cli_zeros.csv");

    CHECK_MSG(run("analyze").exit_code == 2, "missing required flag => 2");
    CHECK_MSG(run("simulate --case nope").exit_code == 2, "bad case => 2");
}

void test_zero_tolerance_flag() {
    write_file("cli_tol.csv", "return\n1e-9\n0.02\n-0.01\n0.015\n-0.02\n0.01\n0.03\n-0.015\n");
    RunResult r = run("analyze --input cli_tol.csv --bandwidth 1.0 --kernel rect");
    CHECK_MSG(r.exit_code == 0, "tolerance analyze exit code");
    CHECK_MSG(r.stdout_text.find("\"zero_fraction\": 0.0") != std::string::npos,
              "1e-9 counts as non-zero without a tolerance");
    r = run("analyze --input cli_tol.csv --bandwidth 1.0 --kernel rect --zero-tol 1e-8");
    CHECK_MSG(r.stdout_text.find("\"zero_fraction\": 0.125") != std::string::npos,
              "1e-9 counts as zero under --zero-tol 1e-8");
    std::remove("cli_tol.csv");
}

void test_bandwidth_curve() {
    std::string ones = "return\n";
    for (int i = 0; i < 80; ++i) ones += "0.01\n";
    write_file("cli_ones.csv", ones);

    RunResult r = run("bandwidth --input cli_ones.csv --grid 0.1:0.5:4");
    CHECK_MSG(r.exit_code == 0, "bandwidth exit code " << r.exit_code);
    std::istringstream lines(r.stdout_text);
    std::string line;
    std::getline(lines, line);
    CHECK_MSG(line == "bandwidth,cv,selected", "curve header");
    int selected = 0;
    std::string selected_line;
    while (std::getline(lines, line)) {
        if (line.size() >= 2 && line.substr(line.size() - 2) == ",1") {
            ++selected;
            selected_line = line;
        }
        CHECK_MSG(line.find(",0,") != std::string::npos || line.find("inf") != std::string::npos,
                  "constant series should have zero CV: " << line);
    }
    CHECK_MSG(selected == 1, "exactly one selected row");
    CHECK_MSG(selected_line.rfind("0.5,", 0) == 0, "largest bandwidth wins ties");

    // singleton grid is a forced choice
    r = run("bandwidth --input cli_ones.csv --grid 0.3:0.3:1");
    CHECK_MSG(r.exit_code == 0, "singleton grid exit code");
    CHECK_MSG(r.stdout_text.find("0.3,0,1") != std::string::npos, "singleton selected");

    // a sub-minimal bandwidth shows the inf sentinel
    r = run("bandwidth --input cli_ones.csv --grid 0.005:0.5:3");
    CHECK_MSG(r.stdout_text.find("0.005,inf,0") != std::string::npos, "inf sentinel row");

    std::remove("cli_ones.csv");
}

void test_simulate_determinism_and_exceedance() {
    const std::string flags =
        "simulate --case iv --n 500 --trials 500 --seed 1 --level 0.95 --bandwidth 0.1";
    RunResult r = run(flags + " --out cli_mc_a");
    CHECK_MSG(r.exit_code == 0, "simulate exit code " << r.exit_code);
    r = run(flags + " --out cli_mc_b");
    CHECK_MSG(r.exit_code == 0, "simulate rerun exit code");
    CHECK_MSG(read_file("cli_mc_a.csv") == read_file("cli_mc_b.csv"), "csv determinism");
    CHECK_MSG(read_file("cli_mc_a.json") == read_file("cli_mc_b.json"), "json determinism");

    // Table-2 cell (iv, 500) is 2.9%; at N=500 allow +-1.5pp.
    const std::string csv = read_file("cli_mc_a.csv");
    std::istringstream lines(csv);
    std::string line;
    double exceedance = -1.0;
    while (std::getline(lines, line)) {
        if (line.find(",pr,") != std::string::npos) {
            const auto comma = line.rfind(',');
            exceedance = std::strtod(line.c_str() + comma + 1, nullptr);
        }
    }
    CHECK_MSG(exceedance >= 0.0, "pr exceedance row present");
    CHECK_MSG(std::fabs(100.0 * exceedance - 2.9) <= 1.5,
              "exceedance " << 100.0 * exceedance << "% vs 2.9% +-1.5pp");

    std::remove("cli_mc_a.csv");
    std::remove("cli_mc_b.csv");
    std::remove("cli_mc_a.json");
    std::remove("cli_mc_b.json");
}

void test_simulate_config_file() {
    write_file("cli_mc.conf", "case=iv\nn=200\nN=50\nseed=9\nlevel=0.95\nkernel=epa\n"
                              "bandwidth=0.2\n");
    const RunResult r = run("simulate --config cli_mc.conf --out cli_mc_c");
    CHECK_MSG(r.exit_code == 0, "config-file simulate exit code " << r.exit_code);
    const std::string csv = read_file("cli_mc_c.csv");
    CHECK_MSG(csv.find("iv,200,pr,50,") != std::string::npos, "config values applied: " << csv);
    std::remove("cli_mc.conf");
    std::remove("cli_mc_c.csv");
    std::remove("cli_mc_c.json");
}

void test_emit_series() {
    const RunResult r =
        run("simulate --case ii --n 300 --seed 4 --emit-series cli_traj.csv");
    CHECK_MSG(r.exit_code == 0, "emit-series exit code " << r.exit_code);
    const std::string csv = read_file("cli_traj.csv");
    CHECK_MSG(csv.rfind("return\n", 0) == 0, "trajectory header");
    // no Monte Carlo files when --trials is not given
    CHECK_MSG(read_file("mc_summary.csv").empty(), "no mc files without --trials");
    const RunResult r2 = run("analyze --input cli_traj.csv --bandwidth 0.2");
    CHECK_MSG(r2.exit_code == 0, "emitted trajectory analyzes cleanly");
    std::remove("cli_traj.csv");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-zeroacf>\n";
        return 2;
    }
    g_cli = argv[1];

    test_golden_analyze();
    test_molymet_like_advisory();
    test_two_row_csv();
    test_exit_codes();
    test_zero_tolerance_flag();
    test_bandwidth_curve();
    test_simulate_determinism_and_exceedance();
    test_simulate_config_file();
    test_emit_series();

    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli checks failed\n";
    return 1;
}
