#ifndef WARINGLAB_H
#define WARINGLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WL_API __declspec(dllexport)
#else
#define WL_API __attribute__((visibility("default")))
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_INVALID_ARGUMENT = 1,
  WL_BUDGET_EXCEEDED = 2,
  WL_MESH_TOO_COARSE = 3,
  WL_NOT_CONVERGED = 4,
  WL_HYPOTHESIS = 5,
  WL_INTERNAL = 6,
  WL_NOT_FOUND = 7 /* approx_coeffs: no admissible q */
} wl_status;

/* Message for the most recent failure on the calling thread ("" if none). */
WL_API const char* wl_last_error(void);
WL_API const char* wl_version(void);
WL_API const char* wl_status_name(wl_status s);

typedef struct wl_instance wl_instance;
typedef struct wl_kernel wl_kernel;
typedef struct wl_dissection wl_dissection;

/* ---- instances ---- */
WL_API wl_status wl_instance_create(int k, const double* theta, int s, double eta, wl_instance** out);
/* theta entries are preset names (sqrt2, golden, e2) or decimal literals. */
WL_API wl_status wl_instance_create_named(int k, const char* const* theta, int s, double eta,
                                          wl_instance** out);
WL_API void wl_instance_free(wl_instance* inst);
WL_API int wl_instance_k(const wl_instance* inst);
WL_API int wl_instance_s(const wl_instance* inst);
WL_API double wl_instance_eta(const wl_instance* inst);
WL_API double wl_instance_theta(const wl_instance* inst, int i);

WL_API wl_status wl_parse_shift(const char* text, double* out);

/* ---- counting ---- */
typedef struct wl_options {
  int64_t max_tuples;      /* <= 0: default 1e8 */
  int64_t max_table_bytes; /* <= 0: default 2 GiB */
  int workers;             /* <= 0: 1 */
} wl_options;

typedef enum wl_count_kind { WL_COUNT_N = 0, WL_COUNT_NSTAR = 1, WL_COUNT_WEIGHTED = 2 } wl_count_kind;
typedef enum wl_count_method { WL_BRUTE = 0, WL_MITM = 1 } wl_count_method;

typedef struct wl_count_result {
  double value;
  int64_t tuples_examined;
  wl_count_method method;
} wl_count_result;

WL_API wl_status wl_count(const wl_instance* inst, double tau, wl_count_kind kind, wl_count_method method,
                          const wl_options* opts, wl_count_result* out);
WL_API wl_status wl_count_j(int s, int k, int64_t P, const wl_options* opts, int64_t* out);
WL_API wl_status wl_count_j_shifted(int s, int k, int64_t P, double theta, double eta, const wl_options* opts,
                                    int64_t* out);
WL_API wl_status wl_main_term(const wl_instance* inst, double tau, double* out);
WL_API wl_status wl_main_term_ks(int k, int s, double eta, double tau, double* out);

/* ---- exponential sums ---- */
WL_API wl_status wl_f_theta(double alpha, double theta, double P, int k, double* re, double* im);
WL_API wl_status wl_f_bold(double alpha, const wl_instance* inst, double P, double* re, double* im);
/* a[j-1] holds a_j, j = 1..len */
WL_API wl_status wl_weyl_sum(int64_t q, const int64_t* a, int len, double* re, double* im);
WL_API wl_status wl_osc_integral(const double* beta, int len, double P, double* re, double* im, double* err);
WL_API wl_status wl_major_approx(double alpha, double theta, double P, int k, int64_t q, const int64_t* a,
                                 double* re, double* im);
/* a_out must hold k entries; WL_NOT_FOUND when no q <= P^{1-zeta} qualifies. */
WL_API wl_status wl_approx_coeffs(double alpha, double theta, double P, int k, double zeta, int64_t* q_out,
                                  int64_t* a_out, int64_t* d_out);
WL_API wl_status wl_psi_avg(double mu, double alpha_last, double P, int k, double* out);

/* ---- kernels ---- */
/* kind: dh, plus, minus, k1, k2plus, k2minus; t_choice: logP, sqrtP, identity, fixed.
   dh ignores P and t_choice. */
WL_API wl_status wl_kernel_create(const char* kind, double eta, double P, const char* t_choice, double t_fixed,
                                  wl_kernel** out);
WL_API void wl_kernel_free(wl_kernel* k);
WL_API wl_status wl_kernel_eval(const wl_kernel* k, double alpha, double* out);
WL_API wl_status wl_kernel_fourier(const wl_kernel* k, double t, double* out);
WL_API wl_status wl_kernel_numeric_transform(const wl_kernel* k, double t, double A, double* value,
                                             double* tail_bound);
WL_API wl_status wl_kernel_info(const wl_kernel* k, double* delta, double* L, double* T, double* support_radius);

/* ---- dissection ---- */
WL_API wl_status wl_dissection_create(double P, int k, double xi, double q_scale, const char* t_choice,
                                      double t_fixed, double t_exp, wl_dissection** out);
WL_API void wl_dissection_free(wl_dissection* d);
WL_API wl_status wl_dissection_info(const wl_dissection* d, double* Q, double* T, double* major_radius,
                                    double* hl_radius, double* hl_measure_bound);
WL_API wl_status wl_in_frak_v(const wl_dissection* d, double alpha, int* out);
/* label is written as e.g. "minor:N:3/7:B"; class_index in [0, 7). */
WL_API wl_status wl_classify(const wl_dissection* d, const wl_instance* inst, int theta3_index, double alpha,
                             char* label, size_t label_len, int* class_index);
WL_API const char* wl_arc_class_name(int index);
WL_API wl_status wl_dirichlet_approx(double alpha, int64_t q_max, int64_t* a, int64_t* q, double* err);

/* ---- integrals ---- */
typedef struct wl_quad_result {
  double re;
  double im;
  double tail_bound;
  double disc_error;
  int64_t panels;
  double mesh;
} wl_quad_result;

/* mesh <= 0 selects the automatic alias-free spacing. */
WL_API wl_status wl_dh_integral(const wl_instance* inst, double tau, const wl_kernel* k, double A, double mesh,
                                int workers, wl_quad_result* out);
/* parts must hold 7 results, indexed as wl_arc_class_name. */
WL_API wl_status wl_arc_contributions(const wl_instance* inst, double tau, const wl_kernel* k,
                                      const wl_dissection* d, double A, double mesh, int workers,
                                      wl_quad_result* parts, wl_quad_result* total);
WL_API wl_status wl_minor_moment(double theta, int s2, int k, double P, const wl_kernel* kern,
                                 const wl_dissection* d, double A, double mesh, int workers, int whole_line,
                                 wl_quad_result* out);
WL_API wl_status wl_hua_moment(double theta, int j, int k, double P, double zeta, double A, double mesh,
                               int workers, wl_quad_result* out);
WL_API double wl_minor_moment_envelope(int s, int k);
WL_API wl_status wl_slope_estimate(const double* P, const double* value, int n, double* exponent,
                                   double* intercept, double* residual);

/* ---- invariant suite ---- */
/* *json receives a malloc'd report; release with wl_free_string. */
WL_API wl_status wl_verify(int workers, int inject_k1_sign_error, char** json, int* all_pass);
WL_API wl_status wl_verify_csv(int workers, int inject_k1_sign_error, char** csv, int* all_pass);
WL_API void wl_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
