#include "mc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "acf.hpp"
#include "errors.hpp"
#include "format_util.hpp"
#include "inference.hpp"
#include "parallel.hpp"
#include "stat_index.hpp"

namespace zeroacf {

void McConfig::validate() const {
    if (trials < 1) {
        throw_validation("trial count must be at least 1");
    }
    if (lengths.empty()) {
        throw_validation("at least one trajectory length is required");
    }
    for (std::int64_t n : lengths) {
        if (n < 8) {
            throw_validation("trajectory lengths below 8 are not meaningful here");
        }
        if (max_lag < 1 || max_lag >= n) {
            throw_validation("max lag must satisfy 1 <= m < n");
        }
    }
    if (!(level > 0.0) || !(level < 1.0)) {
        throw_validation("confidence level must lie in (0, 1)");
    }
    if (bandwidth > 1.0) {
        throw_validation("bandwidths must lie in (0, 1]");
    }
    DgpConfig probe = dgp;
    probe.n = lengths.front();
    probe.validate();
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (sorted.size() == 1) return sorted.front();
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

struct TrialResult {
    double rho0 = 0.0;
    double pr = 0.0;
    double vpr = 0.0;
    double kappa = 0.0;
    bool pr_exceeds = false;
    bool vpr_exceeds = false;
    bool failed = false;
};

MethodSummary summarize(const std::vector<double>& values) {
    MethodSummary s;
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.max = sorted.back();
    return s;
}

} // namespace

McSummary run_monte_carlo(const McConfig& config) {
    config.validate();
    McSummary summary;
    summary.config = config;

    const int threads = resolve_threads(config.threads);

    for (std::int64_t n : config.lengths) {
        const std::size_t trials = static_cast<std::size_t>(config.trials);
        std::vector<TrialResult> results(trials);

        BandwidthGrid grid = config.grid;
        if (config.bandwidth <= 0.0 && grid.size <= 0) {
            grid = BandwidthGrid::default_for(static_cast<std::size_t>(n));
        }

        parallel_for(trials, threads, [&](std::size_t trial) {
            TrialResult& out = results[trial];
            try {
                DgpConfig dgp = config.dgp;
                dgp.n = n;
                dgp.seed = config.dgp.seed ^ static_cast<std::uint64_t>(trial);
                const ReturnSeries series = simulate(dgp);
                const auto a = series.indicator();

                KernelPlan plan;
                if (config.bandwidth > 0.0) {
                    plan.kernel = config.kernel;
                    plan.b0 = config.bandwidth;
                    plan.bh.assign(static_cast<std::size_t>(config.max_lag), config.bandwidth);
                } else {
                    plan = select_plan_loocv(a, config.max_lag, config.kernel, grid,
                                             config.paper_cv_target);
                }
                const ProbabilityCurves probs =
                    smooth_probabilities(a, config.max_lag, plan);
                const AcfEstimates acf = estimate_acf(series, config.max_lag, probs);
                const CovarianceEstimate cov = upsilon_covariance(series, acf);
                const std::vector<double> hw_pr =
                    ci_halfwidth_pr(cov, series.size(), config.level);
                const std::vector<double> hw_vpr =
                    ci_halfwidth_vpr(cov, acf.gamma0[0], series.size(), config.level);
                const IndexReport index = kappa_index(series, config.max_lag, probs);

                out.rho0 = acf.rho0[0];
                out.pr = acf.rho_pr[0];
                out.vpr = acf.rho_vpr[0];
                out.kappa = index.kappa;
                out.pr_exceeds = std::fabs(acf.rho_pr[0]) > hw_pr[0];
                out.vpr_exceeds = std::fabs(acf.rho_vpr[0]) > hw_vpr[0];
            } catch (const Error&) {
                out.failed = true;
            }
        });

        McRun run;
        run.n = n;
        run.trials = config.trials;
        std::vector<double> rho0s, prs, vprs, kappas;
        rho0s.reserve(trials);
        prs.reserve(trials);
        vprs.reserve(trials);
        kappas.reserve(trials);
        std::size_t pr_exceed = 0;
        std::size_t vpr_exceed = 0;
        for (const TrialResult& t : results) {
            if (t.failed) {
                ++run.error_trials;
                continue;
            }
            rho0s.push_back(t.rho0);
            prs.push_back(t.pr);
            vprs.push_back(t.vpr);
            kappas.push_back(t.kappa);
            pr_exceed += t.pr_exceeds ? 1 : 0;
            vpr_exceed += t.vpr_exceeds ? 1 : 0;
        }
        if (rho0s.empty()) {
            throw_degenerate("every Monte Carlo trial failed for n = " + std::to_string(n));
        }
        run.rho0 = summarize(rho0s);
        run.pr = summarize(prs);
        run.vpr = summarize(vprs);
        run.kappa = summarize(kappas);
        run.pr.exceedance = static_cast<double>(pr_exceed) / static_cast<double>(prs.size());
        run.vpr.exceedance = static_cast<double>(vpr_exceed) / static_cast<double>(vprs.size());
        summary.runs.push_back(std::move(run));
    }
    return summary;
}

namespace {

void csv_method_row(std::ostringstream& out, const McSummary& summary, const McRun& run,
                    const char* method, const MethodSummary& s) {
    out << dgp_case_name(summary.config.dgp.dgp_case) << ',' << run.n << ',' << method << ','
        << run.trials << ',' << run.error_trials << ',' << format_double(s.mean) << ','
        << format_double(s.sd) << ',' << format_double(s.min) << ',' << format_double(s.q1) << ','
        << format_double(s.median) << ',' << format_double(s.q3) << ',' << format_double(s.max)
        << ',';
    if (s.exceedance.has_value()) out << format_double(*s.exceedance);
    out << '\n';
}

nlohmann::json method_json(const MethodSummary& s) {
    nlohmann::json j{{"mean", s.mean}, {"sd", s.sd},     {"min", s.min}, {"q1", s.q1},
                     {"median", s.median}, {"q3", s.q3}, {"max", s.max}};
    if (s.exceedance.has_value()) j["exceedance"] = *s.exceedance;
    return j;
}

} // namespace

std::string mc_summary_csv(const McSummary& summary) {
    std::ostringstream out;
    out << "case,n,method,trials,errors,mean,sd,min,q1,median,q3,max,exceedance\n";
    for (const McRun& run : summary.runs) {
        csv_method_row(out, summary, run, "rho0", run.rho0);
        csv_method_row(out, summary, run, "pr", run.pr);
        csv_method_row(out, summary, run, "vpr", run.vpr);
        csv_method_row(out, summary, run, "kappa", run.kappa);
    }
    return out.str();
}

std::string mc_summary_json(const McSummary& summary) {
    const McConfig& config = summary.config;
    nlohmann::json j;
    j["schema"] = "zeroacf.mc/1";
    j["config"] = {
        {"case", dgp_case_name(config.dgp.dgp_case)},
        {"innovation", innovation_name(config.dgp.innovation)},
        {"one_sided_threshold", config.dgp.one_sided_threshold},
        {"deltas", config.dgp.deltas},
        {"trials", config.trials},
        {"max_lag", config.max_lag},
        {"level", config.level},
        {"kernel", kernel_name(config.kernel)},
        {"seed", config.dgp.seed},
    };
    if (config.bandwidth > 0.0) {
        j["config"]["bandwidth"] = config.bandwidth;
    } else {
        j["config"]["bandwidth"] = "loocv";
    }
    j["runs"] = nlohmann::json::array();
    for (const McRun& run : summary.runs) {
        nlohmann::json r;
        r["n"] = run.n;
        r["trials"] = run.trials;
        r["error_trials"] = run.error_trials;
        r["rho0"] = method_json(run.rho0);
        r["pr"] = method_json(run.pr);
        r["vpr"] = method_json(run.vpr);
        r["kappa"] = method_json(run.kappa);
        j["runs"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

} // namespace zeroacf
