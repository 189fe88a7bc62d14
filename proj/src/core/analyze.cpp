#include "analyze.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "format_util.hpp"

namespace zeroacf {

namespace {

std::string advisory_line(const IndexReport& index, double kappa_ref) {
    std::ostringstream out;
    out << "kappa_" << index.m << " = " << format_double(index.kappa);
    if (std::isfinite(kappa_ref)) {
        if (index.kappa > kappa_ref) {
            out << " exceeds the null reference " << format_double(kappa_ref)
                << ": the vpr correction is advisable for this series";
        } else {
            out << " is within the null reference " << format_double(kappa_ref)
                << ": the simpler pr correction appears adequate";
        }
    } else {
        out << "; compare against null quantiles from a matched 'simulate' run"
               " (values far from zero favor the vpr correction)";
    }
    return out.str();
}

} // namespace

AnalysisReport analyze(const ReturnSeries& input, const AnalyzeOptions& options) {
    if (!(options.level > 0.0) || !(options.level < 1.0)) {
        throw_validation("confidence level must lie in (0, 1)");
    }
    if (options.max_lag < 0) {
        throw_validation("max lag must be non-negative");
    }
    if (options.bandwidth > 1.0) {
        throw_validation("bandwidths must lie in (0, 1]");
    }

    AnalysisReport report;
    const ReturnSeries series = options.demean ? input.demeaned() : input;
    report.n = series.size();
    report.zero_fraction = series.zero_fraction();
    report.zero_tolerance = series.zero_tolerance();
    report.demeaned = options.demean;
    report.level = options.level;

    const int lag_cap = static_cast<int>(series.size() / 4);
    int m = options.max_lag;
    if (m > lag_cap) {
        report.warnings.push_back("max lag " + std::to_string(m) + " clamped to " +
                                  std::to_string(lag_cap) + " (= n/4 for n = " +
                                  std::to_string(series.size()) + ")");
        m = lag_cap;
    }
    report.m = m;

    ProbabilityCurves probs;
    if (m >= 1) {
        KernelPlan plan;
        if (options.bandwidth > 0.0) {
            plan.kernel = options.kernel;
            plan.b0 = options.bandwidth;
            plan.bh.assign(static_cast<std::size_t>(m), options.bandwidth);
        } else {
            BandwidthGrid grid = options.grid;
            if (grid.size <= 0) grid = BandwidthGrid::default_for(series.size());
            plan = select_plan_loocv(series.indicator(), m, options.kernel, grid,
                                     options.paper_cv_target);
        }
        probs = smooth_probabilities(series.indicator(), m, plan);
        report.plan = probs.plan;
        report.plan_used = true;
    }

    report.acf = estimate_acf(series, m, probs);
    report.cov = upsilon_covariance(series, report.acf);
    if (m >= 1) {
        report.ci_halfwidth_pr = ci_halfwidth_pr(report.cov, series.size(), options.level);
        report.ci_halfwidth_vpr =
            ci_halfwidth_vpr(report.cov, report.acf.gamma0[0], series.size(), options.level);
        report.index = kappa_index(series, m, probs);
    } else {
        report.index.m = 0;
        report.index.kappa = 0.0;
        report.warnings.push_back("series too short for any lag; only lag-0 statistics reported");
    }
    report.advisory = advisory_line(report.index, options.kappa_ref);
    return report;
}

namespace {

nlohmann::json matrix_json(const CovarianceEstimate& cov) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < cov.m; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cov.m; ++j) row.push_back(cov.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string analysis_report_json(const AnalysisReport& report) {
    nlohmann::json j;
    j["schema"] = "zeroacf.analysis/1";
    j["series"] = {
        {"n", report.n},
        {"zero_fraction", report.zero_fraction},
        {"zero_tolerance", report.zero_tolerance},
        {"demeaned", report.demeaned},
    };
    j["max_lag"] = report.m;
    j["level"] = report.level;
    if (report.plan_used) {
        nlohmann::json plan{
            {"kernel", kernel_name(report.plan.kernel)},
            {"b0", report.plan.b0},
            {"bh", report.plan.bh},
            {"selection", report.plan.loocv ? "loocv" : "fixed"},
        };
        if (report.plan.loocv) {
            plan["grid"] = {{"lo", report.plan.grid.lo},
                            {"hi", report.plan.grid.hi},
                            {"size", report.plan.grid.size}};
            plan["cv_target"] = report.plan.paper_cv_target ? "paper" : "marginal";
        }
        j["kernel_plan"] = std::move(plan);
    } else {
        j["kernel_plan"] = nullptr;
    }
    j["gamma0"] = report.acf.gamma0;
    j["gamma_a"] = report.acf.gamma_a;
    j["gamma_ar2"] = report.acf.gamma_ar2;
    j["rho0"] = report.acf.rho0;
    j["rho_pr"] = report.acf.rho_pr;
    j["rho_vpr"] = report.acf.rho_vpr;
    j["ci_halfwidth_pr"] = report.ci_halfwidth_pr;
    j["ci_halfwidth_vpr"] = report.ci_halfwidth_vpr;
    j["sigma_r2"] = report.cov.sigma_r2;
    j["sigma_upsilon"] = matrix_json(report.cov);
    j["delta"] = report.index.delta;
    j["kappa"] = report.index.kappa;
    j["advisory"] = report.advisory;
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string analysis_report_csv(const AnalysisReport& report) {
    std::ostringstream out;
    out << "lag,gamma0,gamma_a,gamma_ar2,rho0,rho_pr,rho_vpr,ci_halfwidth_pr,ci_halfwidth_vpr,"
           "delta\n";
    out << "0," << format_double(report.acf.gamma0[0]) << ',' << format_double(report.acf.gamma_a[0])
        << ",,,,,,,\n";
    for (int h = 1; h <= report.m; ++h) {
        const std::size_t i = static_cast<std::size_t>(h) - 1;
        out << h << ',' << format_double(report.acf.gamma0[static_cast<std::size_t>(h)]) << ','
            << format_double(report.acf.gamma_a[static_cast<std::size_t>(h)]) << ','
            << format_double(report.acf.gamma_ar2[i]) << ',' << format_double(report.acf.rho0[i])
            << ',' << format_double(report.acf.rho_pr[i]) << ','
            << format_double(report.acf.rho_vpr[i]) << ','
            << format_double(report.ci_halfwidth_pr[i]) << ','
            << format_double(report.ci_halfwidth_vpr[i]) << ','
            << format_double(report.index.delta[i]) << '\n';
    }
    return out.str();
}

} // namespace zeroacf
