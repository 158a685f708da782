/* C interface to the peak-AoI analysis library. All entry points are
 * exception-safe: failures surface as status codes, never by unwinding
 * across the boundary. */
#ifndef AOICR_H
#define AOICR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    AOICR_OK = 0,
    AOICR_EINVAL = 2,   /* invalid parameter / malformed input */
    AOICR_ENUMERIC = 3, /* numerical failure */
    AOICR_EIO = 4       /* file I/O failure */
} aoicr_status;

typedef enum {
    AOICR_SCHEME_OVERLAY = 0,
    AOICR_SCHEME_UNDERLAY = 1
} aoicr_scheme;

typedef enum {
    AOICR_SYSTEM_PRIMARY = 0,
    AOICR_SYSTEM_SECONDARY = 1
} aoicr_system;

typedef enum {
    AOICR_MODE_FADING = 0,
    AOICR_MODE_ABSTRACT = 1
} aoicr_mode;

/* Opaque configuration handle. Created with defaults; fields are
 * addressed by the same names the key=value config files use. */
typedef struct aoicr_config aoicr_config;

aoicr_config* aoicr_config_new(void);
void aoicr_config_free(aoicr_config* cfg);
aoicr_status aoicr_config_set(aoicr_config* cfg, const char* key, double value);
aoicr_status aoicr_config_get(const aoicr_config* cfg, const char* key,
                              double* out);
/* Replaces the handle's contents with the parsed file. */
aoicr_status aoicr_config_load(aoicr_config* cfg, const char* path);
aoicr_status aoicr_config_validate(const aoicr_config* cfg);

typedef struct {
    double phi_op, phi_os;
    double phi_up, phi_us;
    double phi_up_hat, phi_us_hat;
} aoicr_outage_set;

aoicr_status aoicr_outages(const aoicr_config* cfg, aoicr_outage_set* out);

typedef struct {
    double e_w, e_k, e_y, e_s;
    double avg_peak;
} aoicr_breakdown;

/* Closed-form average peak AoI for one system under one scheme. */
aoicr_status aoicr_peak_aoi(const aoicr_config* cfg, aoicr_scheme scheme,
                            aoicr_system system, aoicr_breakdown* out);

/* High-SNR approximation of the same quantity. */
aoicr_status aoicr_peak_aoi_asymptotic(const aoicr_config* cfg,
                                       aoicr_scheme scheme,
                                       aoicr_system system,
                                       aoicr_breakdown* out);

/* Primary generation rate at which the asymptotic secondary curves of
 * the two schemes cross. */
aoicr_status aoicr_critical_rate(const aoicr_config* cfg, double* p_star);

typedef struct {
    aoicr_breakdown breakdown; /* sample means */
    double peak_stderr;
    uint64_t deliveries;
    double interference_fraction;
} aoicr_sim_result;

/* Slot-level Monte Carlo run. Pass warmup = UINT64_MAX for the default
 * warm-up. event_log_path may be NULL; otherwise one CSV record per
 * delivered update is written there. */
aoicr_status aoicr_simulate(const aoicr_config* cfg, aoicr_scheme scheme,
                            aoicr_mode mode, uint64_t slots, uint64_t warmup,
                            uint64_t seed, const char* event_log_path,
                            aoicr_sim_result* primary,
                            aoicr_sim_result* secondary);

typedef struct {
    const char* param; /* p_p_dbm, p_s_dbm, p, q, ic_over_n0, d_sp, d_ps */
    double min, max;
    int steps;
    int overlay, underlay;                                 /* booleans */
    int engine_analytic, engine_asymptotic, engine_simulate;
    aoicr_mode mode;
    uint64_t slots, warmup, seed;
} aoicr_sweep_spec;

/* Runs the grid sweep and writes the CSV table (header included) to
 * out_csv_path. Output is byte-stable for a fixed spec. */
aoicr_status aoicr_run_sweep(const aoicr_config* base,
                             const aoicr_sweep_spec* spec,
                             const char* out_csv_path);

const char* aoicr_strerror(aoicr_status status);

#ifdef __cplusplus
}
#endif

#endif
