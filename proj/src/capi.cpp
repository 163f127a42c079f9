#include "fockspec/fockspec.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "fockspec/error.hpp"
#include "fockspec/extremal.hpp"
#include "fockspec/nonradial.hpp"
#include "fockspec/radial_domain.hpp"
#include "fockspec/radial_spectrum.hpp"
#include "fockspec/specfun.hpp"
#include "fockspec/superlevel.hpp"
#include "fockspec/symbols.hpp"
#include "fockspec/verify.hpp"

using namespace fockspec;

struct fs_domain {
  AnnulusUnion value;
};
struct fs_spectrum {
  Spectrum value;
};
struct fs_chain {
  std::vector<ChainStep> steps;
};
struct fs_disks {
  DiskUnion value;
};
struct fs_symbol {
  RadialSymbol value;
};
struct fs_report_list {
  std::vector<CheckReport> reports;
};

namespace {

thread_local std::string g_last_error;

fs_status set_error(fs_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs body, translating exceptions into status codes.
template <class F>
fs_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FS_OK;
  } catch (const Error& e) {
    return set_error(static_cast<fs_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FS_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FS_ERR_INTERNAL, "unknown failure");
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(static_cast<ErrorCode>(FS_ERR_NULL), std::string(what) + " is NULL");
}

void copy_report(const CheckReport& r, fs_report* out) {
  std::memset(out, 0, sizeof *out);
  std::strncpy(out->name, r.name.c_str(), sizeof out->name - 1);
  out->lhs = r.lhs;
  out->rhs = r.rhs;
  out->margin = r.margin;
  out->satisfied = r.satisfied ? 1 : 0;
  out->equality_case_detected = r.equality_case_detected ? 1 : 0;
}

IndexVector make_alpha(const int* alpha, size_t K) {
  need(alpha, "alpha");
  return IndexVector(std::vector<int>(alpha, alpha + K));
}

std::function<double(double)> wrap(fs_phi_fn phi, void* user) {
  need(reinterpret_cast<const void*>(phi), "phi");
  return [phi, user](double t) { return phi(t, user); };
}

template <class T>
fs_status scalar(double* out, T&& compute) {
  return guard([&] {
    need(out, "out");
    *out = compute();
  });
}

}  // namespace

extern "C" {

const char* fs_last_error(void) { return g_last_error.c_str(); }
const char* fs_version(void) { return "1.0.0"; }

fs_status fs_reg_lower_gamma(int k, double s, double* out) {
  return scalar(out, [&] { return specfun::reg_lower_gamma(k, s); });
}
fs_status fs_poisson_term(int k, double s, double* out) {
  return scalar(out, [&] { return specfun::poisson_term(k, s); });
}
fs_status fs_g_K(int K, double s, double* out) {
  return scalar(out, [&] { return specfun::g_K(K, s); });
}
fs_status fs_g_K_prime(int K, double s, double* out) {
  return scalar(out, [&] { return specfun::g_K_prime(K, s); });
}

fs_status fs_domain_create(const double* ab, size_t n_pairs, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    if (n_pairs > 0) need(ab, "ab");
    std::vector<std::pair<double, double>> raw;
    for (size_t i = 0; i < n_pairs; ++i) raw.emplace_back(ab[2 * i], ab[2 * i + 1]);
    *out = new fs_domain{AnnulusUnion::normalize(std::move(raw))};
  });
}
fs_status fs_domain_ball(double area, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_domain{AnnulusUnion::ball(area)};
  });
}
fs_status fs_domain_random(uint64_t seed, double area, int max_pieces, double b_max, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_domain{random_radial_set(seed, area, max_pieces, b_max)};
  });
}
fs_status fs_domain_optimal_annulus(double area, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_domain{optimal_annulus(area)};
  });
}
fs_status fs_domain_counterexample_annulus(double area, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_domain{weight_counterexample_annulus(area)};
  });
}
void fs_domain_free(fs_domain* d) { delete d; }
size_t fs_domain_piece_count(const fs_domain* d) { return d ? d->value.pieces().size() : 0; }
fs_status fs_domain_piece(const fs_domain* d, size_t i, double* a, double* b) {
  return guard([&] {
    need(d, "domain");
    if (i >= d->value.pieces().size()) fail(ErrorCode::kDomain, "piece index out of range");
    if (a) *a = d->value.pieces()[i].a;
    if (b) *b = d->value.pieces()[i].b;
  });
}
double fs_domain_measure(const fs_domain* d) { return d ? d->value.measure() : 0.0; }
fs_status fs_domain_symmetric_difference(const fs_domain* x, const fs_domain* y, double* out) {
  return scalar(out, [&] {
    need(x, "x");
    need(y, "y");
    return symmetric_difference(x->value, y->value);
  });
}

fs_status fs_spectrum_top(const fs_domain* d, int n, double tol, fs_spectrum** out) {
  return guard([&] {
    need(d, "domain");
    need(out, "out");
    *out = new fs_spectrum{spectrum_top(d->value, n, tol > 0.0 ? tol : 1e-15)};
  });
}
size_t fs_spectrum_size(const fs_spectrum* sp) { return sp ? sp->value.entries.size() : 0; }
fs_status fs_spectrum_entry(const fs_spectrum* sp, size_t rank, double* lambda, int* mode_index) {
  return guard([&] {
    need(sp, "spectrum");
    if (rank >= sp->value.entries.size()) fail(ErrorCode::kDomain, "rank out of range");
    if (lambda) *lambda = sp->value.entries[rank].lambda;
    if (mode_index) *mode_index = sp->value.entries[rank].mode_index;
  });
}
double fs_spectrum_tail_bound(const fs_spectrum* sp) { return sp ? sp->value.tail_bound : 0.0; }
int fs_spectrum_truncated(const fs_spectrum* sp) { return sp && sp->value.truncated ? 1 : 0; }
void fs_spectrum_free(fs_spectrum* sp) { delete sp; }

fs_status fs_mode_mass(const fs_domain* d, int k, double* out) {
  return scalar(out, [&] {
    need(d, "domain");
    return mode_mass(d->value, k);
  });
}
fs_status fs_sum_top(const fs_domain* d, int K, double* out) {
  return scalar(out, [&] {
    need(d, "domain");
    return sum_top(d->value, K);
  });
}
fs_status fs_weighted_sum(const fs_domain* d, const double* weights, size_t n, double* out) {
  return scalar(out, [&] {
    need(d, "domain");
    need(weights, "weights");
    return weighted_sum(d->value, std::span<const double>(weights, n));
  });
}
fs_status fs_schatten(const fs_domain* d, double p, double tol, double* out) {
  return scalar(out, [&] {
    need(d, "domain");
    return schatten(d->value, p, tol > 0.0 ? tol : 1e-13);
  });
}
fs_status fs_trace_phi(const fs_domain* d, fs_phi_fn phi, void* user, double scale, double power,
                       double tol, double* out) {
  return scalar(out, [&] {
    need(d, "domain");
    return trace_phi(d->value, wrap(phi, user), PhiModulus{scale, power}, tol > 0.0 ? tol : 1e-13);
  });
}

fs_status fs_lambda2_bound(double area, double* out) {
  return scalar(out, [&] { return lambda2_bound(area); });
}
fs_status fs_check_krahn_szego(const fs_domain* d, fs_report* out) {
  return guard([&] {
    need(d, "domain");
    need(out, "out");
    copy_report(check_krahn_szego(d->value), out);
  });
}
fs_status fs_check_sum_topk(const fs_domain* d, int K, fs_report* out) {
  return guard([&] {
    need(d, "domain");
    need(out, "out");
    copy_report(check_sum_topk(d->value, K), out);
  });
}
fs_status fs_check_weighted_sum(const fs_domain* d, const double* weights, size_t n, int require_monotone,
                                fs_report* out) {
  return guard([&] {
    need(d, "domain");
    need(weights, "weights");
    need(out, "out");
    const std::span<const double> w(weights, n);
    copy_report(require_monotone ? check_weighted_sum(d->value, w) : weighted_sum_comparison(d->value, w), out);
  });
}
fs_status fs_karamata_check(const double* x, size_t nx, const double* y, size_t ny, fs_phi_fn phi, void* user,
                            fs_report* out) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(out, "out");
    copy_report(karamata_check(std::span<const double>(x, nx), std::span<const double>(y, ny), wrap(phi, user)),
                out);
  });
}
fs_status fs_two_disk_lambda2_lower_bound(double area, double w, double* out) {
  return scalar(out, [&] { return two_disk_lambda2_lower_bound(area, w); });
}

fs_status fs_u_alpha(const int* alpha, size_t K, double sigma, double* out) {
  return scalar(out, [&] { return u_alpha(make_alpha(alpha, K), sigma); });
}
fs_status fs_superlevel_at(const int* alpha, size_t K, double t, fs_domain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_domain{superlevel_at(make_alpha(alpha, K), t)};
  });
}
fs_status fs_superlevel_of_measure(const int* alpha, size_t K, double area, double* level_t, fs_domain** out) {
  return guard([&] {
    LevelSetResult r = superlevel_of_measure(make_alpha(alpha, K), area);
    if (level_t) *level_t = r.level_t;
    if (out) *out = new fs_domain{std::move(r.set)};
  });
}
fs_status fs_bathtub_integral(const int* alpha, size_t K, double area, double* out) {
  return scalar(out, [&] { return bathtub_integral(make_alpha(alpha, K), area); });
}
fs_status fs_move(const int* alpha, size_t K, int* out) {
  return guard([&] {
    need(out, "out");
    const IndexVector next = move(make_alpha(alpha, K));
    std::copy(next.indices().begin(), next.indices().end(), out);
  });
}
fs_status fs_reduce_chain(const int* alpha, size_t K, double area, fs_chain** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_chain{reduce_chain(make_alpha(alpha, K), area)};
  });
}
size_t fs_chain_length(const fs_chain* c) { return c ? c->steps.size() : 0; }
fs_status fs_chain_step(const fs_chain* c, size_t i, int* alpha_out, double* level_t, double* integral,
                        double* gain, int* leading) {
  return guard([&] {
    need(c, "chain");
    if (i >= c->steps.size()) fail(ErrorCode::kDomain, "chain step out of range");
    const ChainStep& s = c->steps[i];
    if (alpha_out) std::copy(s.alpha.indices().begin(), s.alpha.indices().end(), alpha_out);
    if (level_t) *level_t = s.level_t;
    if (integral) *integral = s.integral;
    if (gain) *gain = s.gain;
    if (leading) *leading = s.leading;
  });
}
void fs_chain_free(fs_chain* c) { delete c; }

fs_status fs_disks_create(const double* disks, size_t n, fs_disks** out) {
  return guard([&] {
    need(out, "out");
    if (n > 0) need(disks, "disks");
    std::vector<Disk> v;
    for (size_t i = 0; i < n; ++i) v.push_back({Complex(disks[3 * i], disks[3 * i + 1]), disks[3 * i + 2]});
    *out = new fs_disks{DiskUnion(std::move(v))};
  });
}
void fs_disks_free(fs_disks* d) { delete d; }
double fs_disks_area(const fs_disks* d) { return d ? d->value.area() : 0.0; }
int fs_disks_truncation_size(const fs_disks* d) { return d ? truncation_size(d->value) : 0; }
fs_status fs_disks_eigenvalues(const fs_disks* d, int N, int quad_order, double* out) {
  return guard([&] {
    need(d, "disks");
    need(out, "out");
    const int order = quad_order > 0 ? quad_order : default_quad_order(N);
    const auto ev = hermitian_eigenvalues(toeplitz_matrix(d->value, N, order));
    std::copy(ev.begin(), ev.end(), out);
  });
}
fs_status fs_symmetry_breaking(double area, double w, int N, int quad_order, fs_symmetry_report* out) {
  return guard([&] {
    need(out, "out");
    const SymmetryBreakingReport r = symmetry_breaking_experiment(area, w, N, quad_order);
    copy_report(r.report, &out->report);
    out->N = r.N;
    out->quad_order = r.quad_order;
    out->lambda1 = r.lambda1;
    out->lambda2 = r.lambda2;
    out->lambda2_refined = r.lambda2_refined;
    out->truncation_stable = r.truncation_stable ? 1 : 0;
    out->analytic_lower_bound = r.analytic_lower_bound;
    out->limit_value = r.limit_value;
  });
}
fs_status fs_weighted_monomial(int k, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    const Complex v = weighted_monomial(k, Complex(re, im));
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}
fs_status fs_kernel_inner_product(double a_re, double a_im, double b_re, double b_im, int N, double* out_re,
                                  double* out_im) {
  return guard([&] {
    const Complex v = kernel_inner_product(Complex(a_re, a_im), Complex(b_re, b_im), N);
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}

fs_status fs_symbol_piecewise(const double* pieces, size_t n, fs_symbol** out) {
  return guard([&] {
    need(out, "out");
    if (n > 0) need(pieces, "pieces");
    std::vector<SymbolPiece> v;
    for (size_t i = 0; i < n; ++i) v.push_back({pieces[3 * i], pieces[3 * i + 1], pieces[3 * i + 2]});
    *out = new fs_symbol{RadialSymbol::piecewise(std::move(v))};
  });
}
fs_status fs_symbol_sigma_p(int K, double p, double B, fs_symbol** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_symbol{sigma_p(K, p, B)};
  });
}
fs_status fs_symbol_random(uint64_t seed, int max_pieces, double b_max, fs_symbol** out) {
  return guard([&] {
    need(out, "out");
    *out = new fs_symbol{random_piecewise_symbol(seed, max_pieces, b_max)};
  });
}
fs_status fs_symbol_scaled(const fs_symbol* s, double factor, fs_symbol** out) {
  return guard([&] {
    need(s, "symbol");
    need(out, "out");
    *out = new fs_symbol{s->value.scaled(factor)};
  });
}
fs_status fs_symbol_rearrange(const fs_symbol* s, fs_symbol** out) {
  return guard([&] {
    need(s, "symbol");
    need(out, "out");
    *out = new fs_symbol{rearrange(s->value)};
  });
}
void fs_symbol_free(fs_symbol* s) { delete s; }
size_t fs_symbol_piece_count(const fs_symbol* s) {
  return s && s->value.is_piecewise() ? s->value.pieces().size() : 0;
}
fs_status fs_symbol_piece(const fs_symbol* s, size_t i, double* a, double* b, double* value) {
  return guard([&] {
    need(s, "symbol");
    if (!s->value.is_piecewise() || i >= s->value.pieces().size())
      fail(ErrorCode::kDomain, "piece index out of range");
    const SymbolPiece& p = s->value.pieces()[i];
    if (a) *a = p.a;
    if (b) *b = p.b;
    if (value) *value = p.value;
  });
}
fs_status fs_symbol_eval(const fs_symbol* s, double sigma, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return s->value(sigma);
  });
}
fs_status fs_symbol_mode_mass(const fs_symbol* s, int k, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return symbol_mode_mass(s->value, k);
  });
}
fs_status fs_symbol_top_sum(const fs_symbol* s, int K, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return symbol_top_sum(s->value, K);
  });
}
fs_status fs_symbol_lp_norm(const fs_symbol* s, double p, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return lp_norm(s->value, p);
  });
}
fs_status fs_symbol_distribution(const fs_symbol* s, double t, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return distribution_function(s->value, t);
  });
}
fs_status fs_symbol_layer_cake_top_sum(const fs_symbol* s, int K, double* out) {
  return scalar(out, [&] {
    need(s, "symbol");
    return layer_cake_top_sum(s->value, K);
  });
}
fs_status fs_c_p_constant(int K, double p, double* out) {
  return scalar(out, [&] { return c_p_constant(K, p); });
}
fs_status fs_mu_p(int K, double p, double B, double t, double* out) {
  return scalar(out, [&] { return mu_p(K, p, B, t); });
}
fs_status fs_check_rearrangement(const fs_symbol* s, int K, fs_report* out, double* rhs_layer_cake) {
  return guard([&] {
    need(s, "symbol");
    need(out, "out");
    const RearrangementReport r = check_rearrangement(s->value, K);
    copy_report(r.report, out);
    if (rhs_layer_cake) *rhs_layer_cake = r.rhs_layer_cake;
  });
}
fs_status fs_check_optimal_symbol(const fs_symbol* s, int K, double p, double B, fs_report* out) {
  return guard([&] {
    need(s, "symbol");
    need(out, "out");
    copy_report(check_optimal_symbol(s->value, K, p, B), out);
  });
}

size_t fs_suite_count(void) { return suite_names().size(); }
const char* fs_suite_name(size_t i) {
  // Suite names are string literals, so the views are NUL-terminated.
  return i < suite_names().size() ? suite_names()[i].data() : nullptr;
}
fs_status fs_verify(const char* suite, uint64_t seed, int instances, fs_report_list** out) {
  return guard([&] {
    need(suite, "suite");
    need(out, "out");
    VerifyOptions options;
    options.seed = seed;
    if (instances > 0) options.instances = instances;
    *out = new fs_report_list{run_suite(suite, options)};
  });
}
size_t fs_report_list_size(const fs_report_list* l) { return l ? l->reports.size() : 0; }
fs_status fs_report_list_get(const fs_report_list* l, size_t i, fs_report* out) {
  return guard([&] {
    need(l, "list");
    need(out, "out");
    if (i >= l->reports.size()) fail(ErrorCode::kDomain, "report index out of range");
    copy_report(l->reports[i], out);
  });
}
void fs_report_list_free(fs_report_list* l) { delete l; }

}  // extern "C"
