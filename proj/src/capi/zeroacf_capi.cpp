#include "zeroacf/zeroacf.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "analyze.hpp"
#include "csv_io.hpp"
#include "dgp.hpp"
#include "errors.hpp"
#include "format_util.hpp"
#include "mc.hpp"
#include "version.hpp"

using namespace zeroacf;

struct zacf_series {
    ReturnSeries series;
};

struct zacf_report {
    AnalysisReport report;
};

struct zacf_cv_curve {
    std::vector<double> bandwidths;
    std::vector<double> cv;
    std::size_t selected = 0;
};

struct zacf_mc_result {
    McSummary summary;
};

namespace {

thread_local std::string g_last_error;

zacf_status set_error(const Error& e) {
    g_last_error = e.what();
    return static_cast<zacf_status>(static_cast<int>(e.code()));
}

zacf_status set_error(const std::exception& e) {
    g_last_error = e.what();
    return ZACF_ERROR_VALIDATION;
}

zacf_status invalid_argument(const char* what) {
    g_last_error = what;
    return ZACF_ERROR_VALIDATION;
}

template <typename Fn>
zacf_status guarded(Fn&& fn) {
    try {
        fn();
        return ZACF_OK;
    } catch (const Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error(e);
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

KernelShape kernel_from_int(int kernel) {
    switch (kernel) {
    case ZACF_KERNEL_RECTANGULAR: return KernelShape::rectangular;
    case ZACF_KERNEL_TRIANGULAR: return KernelShape::triangular;
    case ZACF_KERNEL_EPANECHNIKOV: return KernelShape::epanechnikov;
    default: throw_validation("unknown kernel id " + std::to_string(kernel));
    }
}

DgpCase case_from_int(int c) {
    switch (c) {
    case ZACF_CASE_I: return DgpCase::i;
    case ZACF_CASE_II: return DgpCase::ii;
    case ZACF_CASE_III: return DgpCase::iii;
    case ZACF_CASE_IV: return DgpCase::iv;
    default: throw_validation("unknown DGP case id " + std::to_string(c));
    }
}

AnalyzeOptions to_core(const zacf_analyze_options& o) {
    AnalyzeOptions options;
    options.max_lag = o.max_lag;
    options.kernel = kernel_from_int(o.kernel);
    options.bandwidth = o.bandwidth;
    if (o.grid_lo > 0.0 && o.grid_hi > 0.0 && o.grid_size > 0) {
        options.grid.lo = o.grid_lo;
        options.grid.hi = o.grid_hi;
        options.grid.size = o.grid_size;
    }
    options.level = o.level;
    options.demean = o.demean != 0;
    options.paper_cv_target = o.paper_cv_target != 0;
    options.kappa_ref = o.kappa_ref;
    return options;
}

DgpConfig to_core(const zacf_sim_config& c) {
    DgpConfig config;
    config.n = c.n;
    config.dgp_case = case_from_int(c.dgp_case);
    config.innovation = c.innovation == ZACF_INNOVATION_CORRELATED ? Innovation::correlated_ar
                                                                   : Innovation::uncorrelated;
    config.one_sided_threshold = c.one_sided_threshold != 0;
    config.deltas = {c.deltas[0], c.deltas[1], c.deltas[2], c.deltas[3]};
    config.seed = c.seed;
    return config;
}

} // namespace

extern "C" {

const char* zacf_version(void) { return ZEROACF_VERSION; }

const char* zacf_last_error(void) { return g_last_error.c_str(); }

void zacf_string_free(char* s) { std::free(s); }

zacf_status zacf_series_from_returns(const double* returns, size_t n, double zero_tolerance,
                                     zacf_series** out) {
    if (!returns || !out) return invalid_argument("null pointer argument");
    return guarded([&] {
        std::vector<double> values(returns, returns + n);
        *out = new zacf_series{ReturnSeries::from_returns(std::move(values), zero_tolerance)};
    });
}

zacf_status zacf_series_from_prices(const double* closes, size_t n, double zero_tolerance,
                                    zacf_series** out) {
    if (!closes || !out) return invalid_argument("null pointer argument");
    return guarded([&] {
        std::vector<PriceRow> rows(n);
        for (size_t i = 0; i < n; ++i) {
            // Synthetic ascending dates keep PriceTable's ordering check happy.
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%010zu", i);
            rows[i].date = buf;
            rows[i].close = closes[i];
        }
        *out = new zacf_series{
            ReturnSeries::from_prices(PriceTable(std::move(rows)), zero_tolerance)};
    });
}

zacf_status zacf_series_read_csv(const char* path, double zero_tolerance, zacf_series** out) {
    if (!path || !out) return invalid_argument("null pointer argument");
    return guarded([&] { *out = new zacf_series{read_series_csv(path, zero_tolerance)}; });
}

size_t zacf_series_length(const zacf_series* series) { return series ? series->series.size() : 0; }

double zacf_series_zero_fraction(const zacf_series* series) {
    return series ? series->series.zero_fraction() : std::numeric_limits<double>::quiet_NaN();
}

zacf_status zacf_series_value(const zacf_series* series, size_t index, double* out) {
    if (!series || !out) return invalid_argument("null pointer argument");
    if (index >= series->series.size()) return invalid_argument("series index out of range");
    *out = series->series.values()[index];
    return ZACF_OK;
}

zacf_status zacf_series_write_csv(const zacf_series* series, const char* path) {
    if (!series || !path) return invalid_argument("null pointer argument");
    return guarded([&] { write_returns_csv(path, series->series.values()); });
}

void zacf_series_free(zacf_series* series) { delete series; }

void zacf_analyze_options_init(zacf_analyze_options* options) {
    if (!options) return;
    options->max_lag = 1;
    options->kernel = ZACF_KERNEL_EPANECHNIKOV;
    options->bandwidth = 0.0;
    options->grid_lo = 0.0;
    options->grid_hi = 0.0;
    options->grid_size = 0;
    options->level = 0.95;
    options->demean = 0;
    options->paper_cv_target = 0;
    options->kappa_ref = std::numeric_limits<double>::quiet_NaN();
}

zacf_status zacf_analyze(const zacf_series* series, const zacf_analyze_options* options,
                         zacf_report** out) {
    if (!series || !options || !out) return invalid_argument("null pointer argument");
    return guarded([&] { *out = new zacf_report{analyze(series->series, to_core(*options))}; });
}

int zacf_report_max_lag(const zacf_report* report) { return report ? report->report.m : -1; }

double zacf_report_kappa(const zacf_report* report) {
    return report ? report->report.index.kappa : std::numeric_limits<double>::quiet_NaN();
}

zacf_status zacf_report_value(const zacf_report* report, zacf_stat stat, int lag, double* out) {
    if (!report || !out) return invalid_argument("null pointer argument");
    const AnalysisReport& r = report->report;
    const auto lag0_based = [&](const std::vector<double>& v) -> zacf_status {
        if (lag < 0 || lag > r.m) return invalid_argument("lag out of range");
        *out = v[static_cast<std::size_t>(lag)];
        return ZACF_OK;
    };
    const auto lag1_based = [&](const std::vector<double>& v) -> zacf_status {
        if (lag < 1 || lag > r.m) return invalid_argument("lag out of range");
        *out = v[static_cast<std::size_t>(lag) - 1];
        return ZACF_OK;
    };
    switch (stat) {
    case ZACF_STAT_GAMMA0: return lag0_based(r.acf.gamma0);
    case ZACF_STAT_GAMMA_A: return lag0_based(r.acf.gamma_a);
    case ZACF_STAT_GAMMA_AR2: return lag1_based(r.acf.gamma_ar2);
    case ZACF_STAT_RHO0: return lag1_based(r.acf.rho0);
    case ZACF_STAT_RHO_PR: return lag1_based(r.acf.rho_pr);
    case ZACF_STAT_RHO_VPR: return lag1_based(r.acf.rho_vpr);
    case ZACF_STAT_CI_PR: return lag1_based(r.ci_halfwidth_pr);
    case ZACF_STAT_CI_VPR: return lag1_based(r.ci_halfwidth_vpr);
    case ZACF_STAT_DELTA: return lag1_based(r.index.delta);
    }
    return invalid_argument("unknown statistic id");
}

zacf_status zacf_report_bandwidth(const zacf_report* report, int lag, double* out) {
    if (!report || !out) return invalid_argument("null pointer argument");
    const AnalysisReport& r = report->report;
    if (!r.plan_used) return invalid_argument("no kernel plan: report has max lag 0");
    if (lag == 0) {
        *out = r.plan.b0;
        return ZACF_OK;
    }
    if (lag < 1 || lag > r.m) return invalid_argument("lag out of range");
    *out = r.plan.bh[static_cast<std::size_t>(lag) - 1];
    return ZACF_OK;
}

char* zacf_report_json(const zacf_report* report) {
    if (!report) return nullptr;
    return copy_string(analysis_report_json(report->report));
}

char* zacf_report_csv(const zacf_report* report) {
    if (!report) return nullptr;
    return copy_string(analysis_report_csv(report->report));
}

void zacf_report_free(zacf_report* report) { delete report; }

zacf_status zacf_bandwidth_curve(const zacf_series* series, int lag,
                                 const zacf_analyze_options* options, zacf_cv_curve** out) {
    if (!series || !options || !out) return invalid_argument("null pointer argument");
    return guarded([&] {
        const AnalyzeOptions core = to_core(*options);
        BandwidthGrid grid = core.grid;
        if (grid.size <= 0) grid = BandwidthGrid::default_for(series->series.size());
        auto curve = new zacf_cv_curve;
        curve->bandwidths = grid.points();
        curve->cv = loocv_curve(series->series.indicator(), lag, curve->bandwidths, core.kernel,
                                core.paper_cv_target);
        double best_cv = std::numeric_limits<double>::infinity();
        std::size_t best = curve->bandwidths.size();
        for (std::size_t i = 0; i < curve->bandwidths.size(); ++i) {
            if (std::isinf(curve->cv[i])) continue;
            if (best == curve->bandwidths.size() || curve->cv[i] < best_cv ||
                (curve->cv[i] == best_cv && curve->bandwidths[i] > curve->bandwidths[best])) {
                best_cv = curve->cv[i];
                best = i;
            }
        }
        if (best == curve->bandwidths.size()) {
            delete curve;
            throw_degenerate("every grid bandwidth yields an empty kernel window");
        }
        curve->selected = best;
        *out = curve;
    });
}

size_t zacf_cv_curve_size(const zacf_cv_curve* curve) {
    return curve ? curve->bandwidths.size() : 0;
}

zacf_status zacf_cv_curve_point(const zacf_cv_curve* curve, size_t index, double* bandwidth,
                                double* cv, int* selected) {
    if (!curve) return invalid_argument("null pointer argument");
    if (index >= curve->bandwidths.size()) return invalid_argument("curve index out of range");
    if (bandwidth) *bandwidth = curve->bandwidths[index];
    if (cv) *cv = curve->cv[index];
    if (selected) *selected = index == curve->selected ? 1 : 0;
    return ZACF_OK;
}

char* zacf_cv_curve_csv(const zacf_cv_curve* curve) {
    if (!curve) return nullptr;
    std::string out = "bandwidth,cv,selected\n";
    for (std::size_t i = 0; i < curve->bandwidths.size(); ++i) {
        out += format_double(curve->bandwidths[i]);
        out += ',';
        out += std::isinf(curve->cv[i]) ? "inf" : format_double(curve->cv[i]);
        out += ',';
        out += i == curve->selected ? '1' : '0';
        out += '\n';
    }
    return copy_string(out);
}

void zacf_cv_curve_free(zacf_cv_curve* curve) { delete curve; }

void zacf_sim_config_init(zacf_sim_config* config, int dgp_case) {
    if (!config) return;
    config->n = 500;
    config->dgp_case = dgp_case;
    config->innovation = ZACF_INNOVATION_UNCORRELATED;
    config->one_sided_threshold = 0;
    std::array<double, 4> deltas{1.0, 1.0, 0.6, 0.6};
    try {
        deltas = DgpConfig::case_deltas(case_from_int(dgp_case));
    } catch (const Error&) {
        // leave the case-(iv) defaults; zacf_simulate will reject the id
    }
    for (int i = 0; i < 4; ++i) config->deltas[i] = deltas[static_cast<std::size_t>(i)];
    config->seed = 0;
}

zacf_status zacf_simulate(const zacf_sim_config* config, zacf_series** out) {
    if (!config || !out) return invalid_argument("null pointer argument");
    return guarded([&] { *out = new zacf_series{simulate(to_core(*config))}; });
}

void zacf_mc_config_init(zacf_mc_config* config, int dgp_case) {
    if (!config) return;
    zacf_sim_config_init(&config->sim, dgp_case);
    config->lengths = nullptr;
    config->length_count = 0;
    config->trials = 1000;
    config->max_lag = 1;
    config->level = 0.95;
    config->kernel = ZACF_KERNEL_EPANECHNIKOV;
    config->bandwidth = 0.0;
    config->grid_lo = 0.0;
    config->grid_hi = 0.0;
    config->grid_size = 0;
    config->paper_cv_target = 0;
    config->threads = 0;
}

zacf_status zacf_mc_run(const zacf_mc_config* config, zacf_mc_result** out) {
    if (!config || !out) return invalid_argument("null pointer argument");
    if (!config->lengths || config->length_count == 0) {
        return invalid_argument("mc config needs at least one trajectory length");
    }
    return guarded([&] {
        McConfig core;
        core.dgp = to_core(config->sim);
        core.lengths.assign(config->lengths, config->lengths + config->length_count);
        core.trials = config->trials;
        core.max_lag = config->max_lag;
        core.level = config->level;
        core.kernel = kernel_from_int(config->kernel);
        core.bandwidth = config->bandwidth;
        if (config->grid_lo > 0.0 && config->grid_hi > 0.0 && config->grid_size > 0) {
            core.grid.lo = config->grid_lo;
            core.grid.hi = config->grid_hi;
            core.grid.size = config->grid_size;
        }
        core.paper_cv_target = config->paper_cv_target != 0;
        core.threads = config->threads;
        *out = new zacf_mc_result{run_monte_carlo(core)};
    });
}

size_t zacf_mc_result_runs(const zacf_mc_result* result) {
    return result ? result->summary.runs.size() : 0;
}

zacf_status zacf_mc_result_n(const zacf_mc_result* result, size_t run, int64_t* out) {
    if (!result || !out) return invalid_argument("null pointer argument");
    if (run >= result->summary.runs.size()) return invalid_argument("run index out of range");
    *out = result->summary.runs[run].n;
    return ZACF_OK;
}

zacf_status zacf_mc_result_error_trials(const zacf_mc_result* result, size_t run, int64_t* out) {
    if (!result || !out) return invalid_argument("null pointer argument");
    if (run >= result->summary.runs.size()) return invalid_argument("run index out of range");
    *out = result->summary.runs[run].error_trials;
    return ZACF_OK;
}

zacf_status zacf_mc_result_stat(const zacf_mc_result* result, size_t run, zacf_method method,
                                zacf_mc_stat stat, double* out) {
    if (!result || !out) return invalid_argument("null pointer argument");
    if (run >= result->summary.runs.size()) return invalid_argument("run index out of range");
    const McRun& r = result->summary.runs[run];
    const MethodSummary* s = nullptr;
    switch (method) {
    case ZACF_METHOD_RHO0: s = &r.rho0; break;
    case ZACF_METHOD_PR: s = &r.pr; break;
    case ZACF_METHOD_VPR: s = &r.vpr; break;
    case ZACF_METHOD_KAPPA: s = &r.kappa; break;
    default: return invalid_argument("unknown method id");
    }
    switch (stat) {
    case ZACF_MC_MEAN: *out = s->mean; return ZACF_OK;
    case ZACF_MC_SD: *out = s->sd; return ZACF_OK;
    case ZACF_MC_MIN: *out = s->min; return ZACF_OK;
    case ZACF_MC_Q1: *out = s->q1; return ZACF_OK;
    case ZACF_MC_MEDIAN: *out = s->median; return ZACF_OK;
    case ZACF_MC_Q3: *out = s->q3; return ZACF_OK;
    case ZACF_MC_MAX: *out = s->max; return ZACF_OK;
    case ZACF_MC_EXCEEDANCE:
        if (!s->exceedance.has_value()) {
            return invalid_argument("exceedance is defined for pr and vpr only");
        }
        *out = *s->exceedance;
        return ZACF_OK;
    }
    return invalid_argument("unknown statistic id");
}

char* zacf_mc_result_csv(const zacf_mc_result* result) {
    if (!result) return nullptr;
    return copy_string(mc_summary_csv(result->summary));
}

char* zacf_mc_result_json(const zacf_mc_result* result) {
    if (!result) return nullptr;
    return copy_string(mc_summary_json(result->summary));
}

void zacf_mc_result_free(zacf_mc_result* result) { delete result; }

} // extern "C"
