/*
 * connmass — connectivity scaling laws for bounded ad hoc wireless networks.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * destroyed through the functions below; every fallible call returns a
 * cm_status and writes its result through out-parameters. On failure
 * cm_last_error() describes the problem for the calling thread. Handles are
 * immutable after creation and safe to share across threads.
 *
 * All Monte Carlo entry points take explicit seeds and are bit-reproducible
 * for a given seed, independent of the worker thread count.
 */

#ifndef CONNMASS_H
#define CONNMASS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CM_API __declspec(dllexport)
#else
#define CM_API __attribute__((visibility("default")))
#endif

#define CM_VERSION_STRING "1.0.0"

typedef enum cm_status {
    CM_OK = 0,
    CM_ERR_INVALID = 1,            /* bad argument or handle mismatch */
    CM_ERR_OUT_OF_DOMAIN = 2,      /* point not inside the domain */
    CM_ERR_UNSUPPORTED_DOMAIN = 3, /* operation undefined for this domain kind */
    CM_ERR_NUMERIC = 4,            /* quadrature failure; partial value written */
    CM_ERR_IO = 5,                 /* file could not be written */
    CM_ERR_INTERNAL = 6
} cm_status;

typedef enum cm_scheme_kind {
    CM_SCHEME_SISO = 0,
    CM_SCHEME_DIVERSITY = 1,  /* orthogonal STBC, gain ~ chi-squared(2mn) */
    CM_SCHEME_BEAMFORMING = 2 /* MIMO-MRC, gain ~ largest Wishart eigenvalue */
} cm_scheme_kind;

typedef enum cm_metric {
    CM_METRIC_SNR = 0, /* outage against the configured SNR threshold */
    CM_METRIC_RATE = 1 /* mutual-information outage against a target rate */
} cm_metric;

typedef enum cm_mass_method {
    CM_MASS_SPATIAL_MC = 0,
    CM_MASS_RADIAL_QUAD = 1,
    CM_MASS_CLOSED_FORM_DC = 2,
    CM_MASS_ASYMPTOTIC_DC = 3,
    CM_MASS_ASYMPTOTIC_BF = 4,
    CM_MASS_LEADING_POWER = 5
} cm_mass_method;

typedef enum cm_pfc_method { CM_PFC_ANALYTIC = 0, CM_PFC_SIMULATION = 1 } cm_pfc_method;

typedef struct cm_domain cm_domain;   /* convex deployment region */
typedef struct cm_params cm_params;   /* path-loss / threshold parameters */
typedef struct cm_conn cm_conn;       /* evaluable pair connection function */
typedef struct cm_network cm_network; /* one soft random-geometric-graph draw */

typedef struct cm_mass_result {
    double value;          /* length^d units */
    int method;            /* cm_mass_method */
    double error_estimate; /* std error for MC-backed values, quadrature bound otherwise */
} cm_mass_result;

typedef struct cm_pfc_estimate {
    double value;     /* clamped to [0, 1] */
    double raw_value; /* pre-clamp diagnostic */
    int method;       /* cm_pfc_method */
    long long trials; /* trials or outer integration samples */
    double std_error;
} cm_pfc_estimate;

typedef struct cm_compare_report {
    cm_mass_result dc_mass;
    cm_mass_result bf_mass;
    int preferred;              /* cm_scheme_kind, by the computed masses */
    double margin_sigmas;       /* |dc-bf| over the combined error estimate */
    double leading_order_ratio; /* asymptotic dc mass over asymptotic bf mass */
    int preferred_leading;      /* cm_scheme_kind, by leading order */
} cm_compare_report;

CM_API const char* cm_version(void);
/* Message for the most recent failure on this thread; empty string if none. */
CM_API const char* cm_last_error(void);

/* ---- geometry ---- */

CM_API cm_status cm_domain_create_box(const double* side_lengths, int dim, cm_domain** out);
CM_API cm_status cm_domain_create_ball(double radius, int dim, cm_domain** out);
/* Infinite cone of opening solid angle omega; radial-mass bookkeeping only:
 * volume and sampling calls report CM_ERR_UNSUPPORTED_DOMAIN. */
CM_API cm_status cm_domain_create_wedge(int dim, double omega, cm_domain** out);
CM_API void cm_domain_free(cm_domain* domain);

CM_API cm_status cm_domain_dim(const cm_domain* domain, int* out);
CM_API cm_status cm_domain_volume(const cm_domain* domain, double* out);
CM_API cm_status cm_full_solid_angle(int dim, double* out);
CM_API cm_status cm_corner_solid_angle_ngon(int n_sides, double* out);
/* point: dim coordinates. Full angle for interior points, Omega/2^k on k
 * orthogonal box faces, Omega/2 on the sphere surface. */
CM_API cm_status cm_boundary_solid_angle(const cm_domain* domain, const double* point, int dim,
                                         double* out);
/* Writes count*dim coordinates (point-major) into out_coords. */
CM_API cm_status cm_sample_uniform(const cm_domain* domain, long long count, uint64_t seed,
                                   double* out_coords);

/* ---- channel ---- */

CM_API cm_status cm_params_create(double eta, double epsilon, double beta, double threshold,
                                  int dim, cm_params** out);
CM_API void cm_params_free(cm_params* params);
CM_API cm_status cm_connectivity_exponent(const cm_params* params, double* out);

CM_API cm_status cm_path_gain(double r, const cm_params* params, double* out);
CM_API cm_status cm_reg_lower_gamma(double a, double x, double* out);
CM_API cm_status cm_gain_cdf_stbc(double x, int m, int n, double* out);
/* count draws of the largest eigenvalue of H^dagger H (n x m complex
 * Gaussian H, unit total variance per entry). */
CM_API cm_status cm_sample_lambda_max(int m, int n, uint64_t seed, long long count,
                                      double* out_values);
/* Tabulates the lambda_max law (>= 1e4 samples) and writes it as
 * "x,cdf" CSV rows with %.12g formatting. */
CM_API cm_status cm_mrc_cdf_write_csv(int m, int n, long long samples, uint64_t seed,
                                      const char* path);

/* ---- pairwise connectivity ---- */

/* For CM_SCHEME_BEAMFORMING a lambda_max table is built (and process-cached)
 * from mrc_cdf_samples draws under mrc_seed; other schemes ignore those two
 * arguments. rate is used only under CM_METRIC_RATE. */
CM_API cm_status cm_conn_create(cm_scheme_kind kind, int m, int n, const cm_params* params,
                                cm_metric metric, double rate, long long mrc_cdf_samples,
                                uint64_t mrc_seed, cm_conn** out);
CM_API void cm_conn_free(cm_conn* conn);
CM_API cm_status cm_conn_eval(const cm_conn* conn, double r, double* out);
CM_API cm_status cm_conn_effective_threshold(const cm_conn* conn, double* out);
/* Large-n step approximation of the beamforming link (epsilon-free). */
CM_API cm_status cm_conn_step_eval(double r, int m, int n, const cm_params* params, double* out);

/* ---- connectivity mass ---- */

CM_API cm_status cm_mass_spatial(const cm_conn* conn, const cm_domain* domain,
                                 const double* origin, int dim, long long samples,
                                 uint64_t seed, cm_mass_result* out);
/* On CM_ERR_NUMERIC the best partial value and its error bound are written. */
CM_API cm_status cm_mass_radial(const cm_conn* conn, double omega, int d, double rel_tol,
                                cm_mass_result* out);
CM_API cm_status cm_mass_leading_siso(double omega, int d, double eta, double threshold_beta,
                                      cm_mass_result* out);
CM_API cm_status cm_mass_dc_closed(double omega, int d, double eta, double threshold_beta,
                                   int m, int n, cm_mass_result* out);
CM_API cm_status cm_mass_dc_asymptotic(double omega, int d, double eta, double threshold_beta,
                                       int m, double n, cm_mass_result* out);
CM_API cm_status cm_mass_bf_asymptotic(double omega, int d, double eta, double threshold_beta,
                                       double n, double y, cm_mass_result* out);
/* Exact radial MRC mass minus the step integral at y = m/n. */
CM_API cm_status cm_mass_bf_error_term(int n, int m, const cm_params* params, double omega,
                                       int d, long long cdf_samples, uint64_t seed,
                                       cm_mass_result* out);

/* ---- global connectivity ---- */

CM_API cm_status cm_pfc_analytic(double rho, const cm_domain* domain, const cm_conn* conn,
                                 long long outer_samples, long long inner_samples,
                                 uint64_t seed, cm_pfc_estimate* out);
CM_API cm_status cm_simulate_pfc(int n_nodes, const cm_domain* domain, const cm_conn* conn,
                                 long long trials, uint64_t seed, cm_pfc_estimate* out);
CM_API cm_status cm_isolation_probability(int n_nodes, const cm_domain* domain,
                                          const cm_conn* conn, long long trials, uint64_t seed,
                                          cm_pfc_estimate* out);

CM_API cm_status cm_network_create(int n_nodes, const cm_domain* domain, const cm_conn* conn,
                                   uint64_t seed, cm_network** out);
CM_API void cm_network_free(cm_network* net);
CM_API cm_status cm_network_node_count(const cm_network* net, int* out);
CM_API cm_status cm_network_edge_count(const cm_network* net, long long* out);
CM_API cm_status cm_network_degree(const cm_network* net, int node, int* out);
CM_API cm_status cm_network_mean_degree(const cm_network* net, double* out);
CM_API cm_status cm_network_node_position(const cm_network* net, int node, double* coords,
                                          int dim);
CM_API cm_status cm_network_is_fully_connected(const cm_network* net, int* out);

/* ---- design rules ---- */

CM_API cm_status cm_power_for_boundary(double omega, int d, double c_exp, double p_t0,
                                       double* out);
/* y_or_zeta: zeta (1 or 2) for diversity coding, the antenna ratio y for
 * beamforming. Returns the real-valued count; round up for deployment. */
CM_API cm_status cm_antennas_for_boundary(double omega, int d, double c_exp,
                                          cm_scheme_kind kind, double y_or_zeta, double* out);
CM_API double cm_critical_ratio(void);
/* y_leading < 0 means use m/n; pass 0 for the fixed-m regime. */
CM_API cm_status cm_compare_schemes(int m, int n, const cm_params* params, cm_metric metric,
                                    double rate, long long cdf_samples, double quad_tol,
                                    uint64_t seed, double y_leading, cm_compare_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CONNMASS_H */
