/* C interface to the fockspec library.
 *
 * Every fallible call returns an fs_status; on failure fs_last_error() holds a
 * message for the calling thread. Handles are opaque and owned by the caller,
 * who releases them with the matching *_free function (NULL is accepted).
 * Radial domains and symbols are given in sigma = pi r^2 coordinates.
 */
#ifndef FOCKSPEC_H
#define FOCKSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(FOCKSPEC_BUILDING)
#define FS_API __attribute__((visibility("default")))
#else
#define FS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FS_OK = 0,
  FS_ERR_DOMAIN = 1,
  FS_ERR_DEGENERATE = 2,
  FS_ERR_PRECONDITION = 3,
  FS_ERR_CONVERGENCE = 4,
  FS_ERR_OVERLAP = 5,
  FS_ERR_EMPTY_SET = 6,
  FS_ERR_PARSE = 7,
  FS_ERR_NULL = 8,
  FS_ERR_INTERNAL = 99
} fs_status;

FS_API const char* fs_last_error(void);
FS_API const char* fs_version(void);

/* Scalar special functions. */
FS_API fs_status fs_reg_lower_gamma(int k, double s, double* out);
FS_API fs_status fs_poisson_term(int k, double s, double* out);
FS_API fs_status fs_g_K(int K, double s, double* out);
FS_API fs_status fs_g_K_prime(int K, double s, double* out);

/* Radial domains: unions of sigma-intervals [a, b). */
typedef struct fs_domain fs_domain;

/* ab holds n_pairs (a, b) pairs; the union is normalized. */
FS_API fs_status fs_domain_create(const double* ab, size_t n_pairs, fs_domain** out);
FS_API fs_status fs_domain_ball(double area, fs_domain** out);
FS_API fs_status fs_domain_random(uint64_t seed, double area, int max_pieces, double b_max,
                                  fs_domain** out);
FS_API fs_status fs_domain_optimal_annulus(double area, fs_domain** out);
FS_API fs_status fs_domain_counterexample_annulus(double area, fs_domain** out);
FS_API void fs_domain_free(fs_domain* d);
FS_API size_t fs_domain_piece_count(const fs_domain* d);
FS_API fs_status fs_domain_piece(const fs_domain* d, size_t i, double* a, double* b);
FS_API double fs_domain_measure(const fs_domain* d);
FS_API fs_status fs_domain_symmetric_difference(const fs_domain* x, const fs_domain* y, double* out);

/* Spectra of radial localization operators. */
typedef struct fs_spectrum fs_spectrum;

FS_API fs_status fs_spectrum_top(const fs_domain* d, int n, double tol, fs_spectrum** out);
FS_API size_t fs_spectrum_size(const fs_spectrum* sp);
FS_API fs_status fs_spectrum_entry(const fs_spectrum* sp, size_t rank, double* lambda, int* mode_index);
FS_API double fs_spectrum_tail_bound(const fs_spectrum* sp);
FS_API int fs_spectrum_truncated(const fs_spectrum* sp);
FS_API void fs_spectrum_free(fs_spectrum* sp);

FS_API fs_status fs_mode_mass(const fs_domain* d, int k, double* out);
FS_API fs_status fs_sum_top(const fs_domain* d, int K, double* out);
FS_API fs_status fs_weighted_sum(const fs_domain* d, const double* weights, size_t n, double* out);
FS_API fs_status fs_schatten(const fs_domain* d, double p, double tol, double* out);

/* |phi(t)| <= scale * t^power on (0, 1) must hold; it bounds the neglected tail. */
typedef double (*fs_phi_fn)(double t, void* user);
FS_API fs_status fs_trace_phi(const fs_domain* d, fs_phi_fn phi, void* user, double scale,
                              double power, double tol, double* out);

/* Inequality checks. satisfied means lhs <= rhs + 1e-9 and margin = rhs - lhs. */
typedef struct {
  char name[96];
  double lhs;
  double rhs;
  double margin;
  int satisfied;
  int equality_case_detected;
} fs_report;

FS_API fs_status fs_lambda2_bound(double area, double* out);
FS_API fs_status fs_check_krahn_szego(const fs_domain* d, fs_report* out);
FS_API fs_status fs_check_sum_topk(const fs_domain* d, int K, fs_report* out);
/* With require_monotone == 0 the weights are not validated. */
FS_API fs_status fs_check_weighted_sum(const fs_domain* d, const double* weights, size_t n,
                                       int require_monotone, fs_report* out);
FS_API fs_status fs_karamata_check(const double* x, size_t nx, const double* y, size_t ny,
                                   fs_phi_fn phi, void* user, fs_report* out);
FS_API fs_status fs_two_disk_lambda2_lower_bound(double area, double w, double* out);

/* Superlevel sets of u_alpha; alpha is a strictly increasing array of length K. */
FS_API fs_status fs_u_alpha(const int* alpha, size_t K, double sigma, double* out);
FS_API fs_status fs_superlevel_at(const int* alpha, size_t K, double t, fs_domain** out);
FS_API fs_status fs_superlevel_of_measure(const int* alpha, size_t K, double area, double* level_t,
                                          fs_domain** out);
FS_API fs_status fs_bathtub_integral(const int* alpha, size_t K, double area, double* out);
/* Writes K entries to out. */
FS_API fs_status fs_move(const int* alpha, size_t K, int* out);

typedef struct fs_chain fs_chain;

FS_API fs_status fs_reduce_chain(const int* alpha, size_t K, double area, fs_chain** out);
FS_API size_t fs_chain_length(const fs_chain* c);
/* alpha_out receives K entries; any output pointer may be NULL. */
FS_API fs_status fs_chain_step(const fs_chain* c, size_t i, int* alpha_out, double* level_t,
                               double* integral, double* gain, int* leading);
FS_API void fs_chain_free(fs_chain* c);

/* Unions of disjoint disks and their truncated Toeplitz matrices. */
typedef struct fs_disks fs_disks;

/* disks holds n (cx, cy, r) triples. */
FS_API fs_status fs_disks_create(const double* disks, size_t n, fs_disks** out);
FS_API void fs_disks_free(fs_disks* d);
FS_API double fs_disks_area(const fs_disks* d);
FS_API int fs_disks_truncation_size(const fs_disks* d);
/* Writes N eigenvalues in decreasing order. quad_order <= 0 picks a default. */
FS_API fs_status fs_disks_eigenvalues(const fs_disks* d, int N, int quad_order, double* out);

typedef struct {
  fs_report report;
  int N;
  int quad_order;
  double lambda1;
  double lambda2;
  double lambda2_refined;
  int truncation_stable;
  double analytic_lower_bound;
  double limit_value;
} fs_symmetry_report;

FS_API fs_status fs_symmetry_breaking(double area, double w, int N, int quad_order,
                                      fs_symmetry_report* out);
FS_API fs_status fs_weighted_monomial(int k, double re, double im, double* out_re, double* out_im);
FS_API fs_status fs_kernel_inner_product(double a_re, double a_im, double b_re, double b_im, int N,
                                         double* out_re, double* out_im);

/* Radial symbols. */
typedef struct fs_symbol fs_symbol;

/* pieces holds n (a, b, value) triples. */
FS_API fs_status fs_symbol_piecewise(const double* pieces, size_t n, fs_symbol** out);
FS_API fs_status fs_symbol_sigma_p(int K, double p, double B, fs_symbol** out);
FS_API fs_status fs_symbol_random(uint64_t seed, int max_pieces, double b_max, fs_symbol** out);
FS_API fs_status fs_symbol_scaled(const fs_symbol* s, double factor, fs_symbol** out);
FS_API fs_status fs_symbol_rearrange(const fs_symbol* s, fs_symbol** out);
FS_API void fs_symbol_free(fs_symbol* s);
/* 0 for analytic symbols. */
FS_API size_t fs_symbol_piece_count(const fs_symbol* s);
FS_API fs_status fs_symbol_piece(const fs_symbol* s, size_t i, double* a, double* b, double* value);
FS_API fs_status fs_symbol_eval(const fs_symbol* s, double sigma, double* out);
FS_API fs_status fs_symbol_mode_mass(const fs_symbol* s, int k, double* out);
FS_API fs_status fs_symbol_top_sum(const fs_symbol* s, int K, double* out);
FS_API fs_status fs_symbol_lp_norm(const fs_symbol* s, double p, double* out);
FS_API fs_status fs_symbol_distribution(const fs_symbol* s, double t, double* out);
FS_API fs_status fs_symbol_layer_cake_top_sum(const fs_symbol* s, int K, double* out);
FS_API fs_status fs_c_p_constant(int K, double p, double* out);
FS_API fs_status fs_mu_p(int K, double p, double B, double t, double* out);
FS_API fs_status fs_check_rearrangement(const fs_symbol* s, int K, fs_report* out,
                                        double* rhs_layer_cake);
FS_API fs_status fs_check_optimal_symbol(const fs_symbol* s, int K, double p, double B,
                                         fs_report* out);

/* Randomized verification suites. */
typedef struct fs_report_list fs_report_list;

FS_API size_t fs_suite_count(void);
FS_API const char* fs_suite_name(size_t i);
/* suite is a name from fs_suite_name or "all". */
FS_API fs_status fs_verify(const char* suite, uint64_t seed, int instances, fs_report_list** out);
FS_API size_t fs_report_list_size(const fs_report_list* l);
FS_API fs_status fs_report_list_get(const fs_report_list* l, size_t i, fs_report* out);
FS_API void fs_report_list_free(fs_report_list* l);

#ifdef __cplusplus
}
#endif

#endif
