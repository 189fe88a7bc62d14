/*
 * zeroacf - serial correlations of non-zero price changes for illiquid
 * assets, with corrections for time-varying zero-return probability and
 * unconditional heteroscedasticity.
 *
 * C API: opaque handles plus integer status codes. Every function that can
 * fail returns zacf_status; on failure zacf_last_error() describes the
 * problem for the calling thread. Handles are freed with their matching
 * _free function; strings returned as char* are freed with
 * zacf_string_free.
 */
#ifndef ZEROACF_H
#define ZEROACF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zacf_status {
    ZACF_OK = 0,
    ZACF_ERROR_VALIDATION = 2,
    ZACF_ERROR_IO = 3,
    ZACF_ERROR_DEGENERATE = 4,
} zacf_status;

typedef enum zacf_kernel {
    ZACF_KERNEL_RECTANGULAR = 0,
    ZACF_KERNEL_EPANECHNIKOV = 1,
    ZACF_KERNEL_TRIANGULAR = 2,
} zacf_kernel;

typedef enum zacf_case {
    ZACF_CASE_I = 1,
    ZACF_CASE_II = 2,
    ZACF_CASE_III = 3,
    ZACF_CASE_IV = 4,
} zacf_case;

typedef enum zacf_innovation {
    ZACF_INNOVATION_CORRELATED = 0,
    ZACF_INNOVATION_UNCORRELATED = 1,
} zacf_innovation;

typedef struct zacf_series zacf_series;
typedef struct zacf_report zacf_report;
typedef struct zacf_cv_curve zacf_cv_curve;
typedef struct zacf_mc_result zacf_mc_result;

const char* zacf_version(void);

/* Message for the most recent failure on the calling thread. */
const char* zacf_last_error(void);

void zacf_string_free(char* s);

/* ---- return series ---------------------------------------------------- */

zacf_status zacf_series_from_returns(const double* returns, size_t n, double zero_tolerance,
                                     zacf_series** out);

/* closes[0..n) are consecutive daily closing prices; yields n-1 returns. */
zacf_status zacf_series_from_prices(const double* closes, size_t n, double zero_tolerance,
                                    zacf_series** out);

/* CSV with either `date,close` columns or a single `return` column. */
zacf_status zacf_series_read_csv(const char* path, double zero_tolerance, zacf_series** out);

size_t zacf_series_length(const zacf_series* series);
double zacf_series_zero_fraction(const zacf_series* series);
zacf_status zacf_series_value(const zacf_series* series, size_t index, double* out);
zacf_status zacf_series_write_csv(const zacf_series* series, const char* path);
void zacf_series_free(zacf_series* series);

/* ---- analysis --------------------------------------------------------- */

typedef struct zacf_analyze_options {
    int max_lag;        /* default 1; clamped to n/4 with a warning     */
    int kernel;         /* zacf_kernel                                  */
    double bandwidth;   /* > 0 fixed; <= 0 LOOCV selection              */
    double grid_lo;     /* LOOCV grid; <= 0 picks the default grid      */
    double grid_hi;
    int grid_size;
    double level;       /* confidence level, default 0.95               */
    int demean;         /* 0/1                                          */
    int paper_cv_target;/* LOOCV b0 target a_t a_{t-1} instead of a_t   */
    double kappa_ref;   /* null reference for the advisory; NaN = none  */
} zacf_analyze_options;

void zacf_analyze_options_init(zacf_analyze_options* options);

zacf_status zacf_analyze(const zacf_series* series, const zacf_analyze_options* options,
                         zacf_report** out);

typedef enum zacf_stat {
    ZACF_STAT_GAMMA0 = 0,      /* lag 0..m */
    ZACF_STAT_GAMMA_A = 1,     /* lag 0..m */
    ZACF_STAT_GAMMA_AR2 = 2,   /* lag 1..m */
    ZACF_STAT_RHO0 = 3,        /* lag 1..m */
    ZACF_STAT_RHO_PR = 4,      /* lag 1..m */
    ZACF_STAT_RHO_VPR = 5,     /* lag 1..m */
    ZACF_STAT_CI_PR = 6,       /* lag 1..m */
    ZACF_STAT_CI_VPR = 7,      /* lag 1..m */
    ZACF_STAT_DELTA = 8,       /* lag 1..m */
} zacf_stat;

int zacf_report_max_lag(const zacf_report* report);
double zacf_report_kappa(const zacf_report* report);
zacf_status zacf_report_value(const zacf_report* report, zacf_stat stat, int lag, double* out);
/* Selected bandwidths; lag 0 returns b0. */
zacf_status zacf_report_bandwidth(const zacf_report* report, int lag, double* out);
char* zacf_report_json(const zacf_report* report);
char* zacf_report_csv(const zacf_report* report);
void zacf_report_free(zacf_report* report);

/* ---- LOOCV bandwidth curve -------------------------------------------- */

zacf_status zacf_bandwidth_curve(const zacf_series* series, int lag,
                                 const zacf_analyze_options* options, zacf_cv_curve** out);
size_t zacf_cv_curve_size(const zacf_cv_curve* curve);
/* cv is +infinity for bandwidths whose kernel window is empty. */
zacf_status zacf_cv_curve_point(const zacf_cv_curve* curve, size_t index, double* bandwidth,
                                double* cv, int* selected);
char* zacf_cv_curve_csv(const zacf_cv_curve* curve);
void zacf_cv_curve_free(zacf_cv_curve* curve);

/* ---- simulator and Monte Carlo ---------------------------------------- */

typedef struct zacf_sim_config {
    int64_t n;
    int dgp_case;           /* zacf_case                                   */
    int innovation;         /* zacf_innovation                             */
    int one_sided_threshold;/* uncorrelated variant: threshold x_t > 0.01
                               as printed instead of |x_t| > 0.01          */
    double deltas[4];       /* profile parameters; case presets by default */
    uint64_t seed;
} zacf_sim_config;

void zacf_sim_config_init(zacf_sim_config* config, int dgp_case);

zacf_status zacf_simulate(const zacf_sim_config* config, zacf_series** out);

typedef struct zacf_mc_config {
    zacf_sim_config sim;    /* sim.n is ignored; lengths below apply       */
    const int64_t* lengths; /* one Monte Carlo run per trajectory length   */
    size_t length_count;
    int64_t trials;
    int max_lag;
    double level;
    int kernel;             /* zacf_kernel                                 */
    double bandwidth;       /* > 0 fixed; <= 0 per-trial LOOCV             */
    double grid_lo;
    double grid_hi;
    int grid_size;
    int paper_cv_target;
    int threads;            /* <= 0 auto; ZEROACF_THREADS caps             */
} zacf_mc_config;

void zacf_mc_config_init(zacf_mc_config* config, int dgp_case);

zacf_status zacf_mc_run(const zacf_mc_config* config, zacf_mc_result** out);

typedef enum zacf_method {
    ZACF_METHOD_RHO0 = 0,
    ZACF_METHOD_PR = 1,
    ZACF_METHOD_VPR = 2,
    ZACF_METHOD_KAPPA = 3,
} zacf_method;

typedef enum zacf_mc_stat {
    ZACF_MC_MEAN = 0,
    ZACF_MC_SD = 1,
    ZACF_MC_MIN = 2,
    ZACF_MC_Q1 = 3,
    ZACF_MC_MEDIAN = 4,
    ZACF_MC_Q3 = 5,
    ZACF_MC_MAX = 6,
    ZACF_MC_EXCEEDANCE = 7, /* defined for PR and VPR only */
} zacf_mc_stat;

size_t zacf_mc_result_runs(const zacf_mc_result* result);
zacf_status zacf_mc_result_n(const zacf_mc_result* result, size_t run, int64_t* out);
zacf_status zacf_mc_result_error_trials(const zacf_mc_result* result, size_t run, int64_t* out);
zacf_status zacf_mc_result_stat(const zacf_mc_result* result, size_t run, zacf_method method,
                                zacf_mc_stat stat, double* out);
char* zacf_mc_result_csv(const zacf_mc_result* result);
char* zacf_mc_result_json(const zacf_mc_result* result);
void zacf_mc_result_free(zacf_mc_result* result);

#ifdef __cplusplus
}
#endif

#endif /* ZEROACF_H */
