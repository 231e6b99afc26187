#include "waringlab/waringlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "waringlab/counting.hpp"
#include "waringlab/dissection.hpp"
#include "waringlab/expsum.hpp"
#include "waringlab/integrator.hpp"
#include "waringlab/kernels.hpp"
#include "waringlab/verify.hpp"

using namespace waringlab;

struct wl_instance {
  Instance inst;
};
struct wl_kernel {
  KernelSpec spec;
};
struct wl_dissection {
  DissectionParams params;
};

namespace {

thread_local std::string g_last_error;

wl_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return WL_INVALID_ARGUMENT;
    case ErrorKind::BudgetExceeded: return WL_BUDGET_EXCEEDED;
    case ErrorKind::MeshTooCoarse: return WL_MESH_TOO_COARSE;
    case ErrorKind::NotConverged: return WL_NOT_CONVERGED;
    case ErrorKind::HypothesisViolated: return WL_HYPOTHESIS;
  }
  return WL_INTERNAL;
}

template <class Fn>
wl_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return WL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WL_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WL_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return WL_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

CountBudget budget_of(const wl_options* o) {
  CountBudget b;
  if (o && o->max_tuples > 0) b.max_tuples = o->max_tuples;
  if (o && o->max_table_bytes > 0) b.max_table_bytes = o->max_table_bytes;
  return b;
}

Exec exec_of(int workers) { return Exec{workers > 0 ? workers : 1}; }

void put(const cplx& z, double* re, double* im) {
  need(re, "re");
  need(im, "im");
  *re = z.real();
  *im = z.imag();
}

void put(const QuadratureResult& r, wl_quad_result* out) {
  out->re = r.value.real();
  out->im = r.value.imag();
  out->tail_bound = r.tail_bound;
  out->disc_error = r.disc_error;
  out->panels = r.panels;
  out->mesh = r.mesh;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

TChoice tchoice_or_default(const char* t) { return t && *t ? parse_tchoice(t) : TChoice::LogP; }

}  // namespace

extern "C" {

const char* wl_last_error(void) { return g_last_error.c_str(); }
const char* wl_version(void) { return "1.0.0"; }

const char* wl_status_name(wl_status s) {
  switch (s) {
    case WL_OK: return "ok";
    case WL_INVALID_ARGUMENT: return "invalid_argument";
    case WL_BUDGET_EXCEEDED: return "budget_exceeded";
    case WL_MESH_TOO_COARSE: return "mesh_too_coarse";
    case WL_NOT_CONVERGED: return "not_converged";
    case WL_HYPOTHESIS: return "hypothesis_violated";
    case WL_INTERNAL: return "internal";
    case WL_NOT_FOUND: return "not_found";
  }
  return "unknown";
}

wl_status wl_instance_create(int k, const double* theta, int s, double eta, wl_instance** out) {
  return guarded([&] {
    need(out, "out");
    need(theta, "theta");
    require(s >= 1, "s must be positive");
    std::vector<real_ext> th(theta, theta + s);
    *out = new wl_instance{Instance(k, std::move(th), eta)};
  });
}

wl_status wl_instance_create_named(int k, const char* const* theta, int s, double eta, wl_instance** out) {
  return guarded([&] {
    need(out, "out");
    need(theta, "theta");
    require(s >= 1, "s must be positive");
    std::vector<real_ext> th;
    for (int i = 0; i < s; ++i) {
      need(theta[i], "theta entry");
      th.push_back(ShiftPreset::parse(theta[i]).value);
    }
    *out = new wl_instance{Instance(k, std::move(th), eta)};
  });
}

void wl_instance_free(wl_instance* inst) { delete inst; }
int wl_instance_k(const wl_instance* inst) { return inst ? inst->inst.k() : 0; }
int wl_instance_s(const wl_instance* inst) { return inst ? inst->inst.s() : 0; }
double wl_instance_eta(const wl_instance* inst) { return inst ? inst->inst.eta() : 0; }
double wl_instance_theta(const wl_instance* inst, int i) {
  if (!inst || i < 0 || i >= inst->inst.s()) return 0;
  return static_cast<double>(inst->inst.theta(i));
}

wl_status wl_parse_shift(const char* text, double* out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = static_cast<double>(ShiftPreset::parse(text).value);
  });
}

wl_status wl_count(const wl_instance* inst, double tau, wl_count_kind kind, wl_count_method method,
                   const wl_options* opts, wl_count_result* out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    const CountBudget b = budget_of(opts);
    CountResult r;
    if (method == WL_MITM) {
      switch (kind) {
        case WL_COUNT_N: r = count_mitm(inst->inst, tau, false, b, Box::Unbounded); break;
        case WL_COUNT_NSTAR: r = count_mitm(inst->inst, tau, false, b, Box::Nstar); break;
        case WL_COUNT_WEIGHTED: r = count_mitm(inst->inst, tau, true, b, Box::Nstar); break;
        default: fail(ErrorKind::InvalidArgument, "unknown count kind");
      }
    } else if (method == WL_BRUTE) {
      switch (kind) {
        case WL_COUNT_N: r = count_N(inst->inst, tau, b); break;
        case WL_COUNT_NSTAR: r = count_Nstar(inst->inst, tau, b); break;
        case WL_COUNT_WEIGHTED: r = weighted_count(inst->inst, tau, b); break;
        default: fail(ErrorKind::InvalidArgument, "unknown count kind");
      }
    } else {
      fail(ErrorKind::InvalidArgument, "unknown count method");
    }
    out->value = r.value;
    out->tuples_examined = r.tuples_examined;
    out->method = r.method == CountMethod::Mitm ? WL_MITM : WL_BRUTE;
  });
}

wl_status wl_count_j(int s, int k, int64_t P, const wl_options* opts, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = count_J(s, k, P, budget_of(opts));
  });
}

wl_status wl_count_j_shifted(int s, int k, int64_t P, double theta, double eta, const wl_options* opts,
                             int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = count_J_shifted(s, k, P, theta, eta, budget_of(opts));
  });
}

wl_status wl_main_term(const wl_instance* inst, double tau, double* out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    *out = main_term(inst->inst, tau);
  });
}

wl_status wl_main_term_ks(int k, int s, double eta, double tau, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = main_term(k, s, eta, tau);
  });
}

wl_status wl_f_theta(double alpha, double theta, double P, int k, double* re, double* im) {
  return guarded([&] { put(f_theta(alpha, theta, P, k), re, im); });
}

wl_status wl_f_bold(double alpha, const wl_instance* inst, double P, double* re, double* im) {
  return guarded([&] {
    need(inst, "instance");
    put(f_bold(alpha, inst->inst, P), re, im);
  });
}

wl_status wl_weyl_sum(int64_t q, const int64_t* a, int len, double* re, double* im) {
  return guarded([&] {
    require(len >= 0 && (len == 0 || a), "weyl_sum: bad coefficient array");
    put(weyl_sum(q, std::span<const std::int64_t>(a, static_cast<std::size_t>(len))), re, im);
  });
}

wl_status wl_osc_integral(const double* beta, int len, double P, double* re, double* im, double* err) {
  return guarded([&] {
    require(len >= 0 && (len == 0 || beta), "osc_integral: bad coefficient array");
    const OscResult r = osc_integral(std::span<const double>(beta, static_cast<std::size_t>(len)), P);
    put(r.value, re, im);
    if (err) *err = r.error;
  });
}

wl_status wl_major_approx(double alpha, double theta, double P, int k, int64_t q, const int64_t* a, double* re,
                          double* im) {
  return guarded([&] {
    need(a, "a");
    require(k >= 1, "k must be positive");
    RationalCoeffs rc;
    rc.q = q;
    rc.a.assign(a, a + k);
    put(major_approx(alpha, theta, P, k, rc), re, im);
  });
}

wl_status wl_approx_coeffs(double alpha, double theta, double P, int k, double zeta, int64_t* q_out,
                           int64_t* a_out, int64_t* d_out) {
  bool found = false;
  const wl_status st = guarded([&] {
    need(q_out, "q_out");
    need(a_out, "a_out");
    const auto rc = approx_coeffs(alpha, theta, P, k, zeta);
    if (!rc) return;
    found = true;
    *q_out = rc->q;
    std::copy(rc->a.begin(), rc->a.end(), a_out);
    if (d_out) *d_out = rc->d;
  });
  if (st == WL_OK && !found) {
    g_last_error = "no q <= P^{1-zeta} approximates every coefficient";
    return WL_NOT_FOUND;
  }
  return st;
}

wl_status wl_psi_avg(double mu, double alpha_last, double P, int k, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = psi_avg(mu, alpha_last, P, k);
  });
}

wl_status wl_kernel_create(const char* kind, double eta, double P, const char* t_choice, double t_fixed,
                           wl_kernel** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    const KernelKind kk = parse_kernel_kind(kind);
    if (kk == KernelKind::DH) {
      *out = new wl_kernel{KernelSpec::dh(eta)};
      return;
    }
    *out = new wl_kernel{KernelSpec::of(kk, KernelParams::make(eta, P, tchoice_or_default(t_choice), t_fixed))};
  });
}

void wl_kernel_free(wl_kernel* k) { delete k; }

wl_status wl_kernel_eval(const wl_kernel* k, double alpha, double* out) {
  return guarded([&] {
    need(k, "kernel");
    need(out, "out");
    *out = eval_kernel(k->spec, alpha);
  });
}

wl_status wl_kernel_fourier(const wl_kernel* k, double t, double* out) {
  return guarded([&] {
    need(k, "kernel");
    need(out, "out");
    *out = fourier_K(k->spec, t);
  });
}

wl_status wl_kernel_numeric_transform(const wl_kernel* k, double t, double A, double* value, double* tail_bound) {
  return guarded([&] {
    need(k, "kernel");
    need(value, "value");
    const TransformEstimate e = numeric_transform(k->spec, t, A);
    *value = e.value();
    if (tail_bound) *tail_bound = e.tail_bound;
  });
}

wl_status wl_kernel_info(const wl_kernel* k, double* delta, double* L, double* T, double* support_radius) {
  return guarded([&] {
    need(k, "kernel");
    if (delta) *delta = k->spec.params.delta;
    if (L) *L = k->spec.params.L;
    if (T) *T = k->spec.params.T;
    if (support_radius) *support_radius = k->spec.support_radius();
  });
}

wl_status wl_dissection_create(double P, int k, double xi, double q_scale, const char* t_choice, double t_fixed,
                               double t_exp, wl_dissection** out) {
  return guarded([&] {
    need(out, "out");
    *out = new wl_dissection{
        DissectionParams::make(P, k, xi, q_scale, tchoice_or_default(t_choice), t_fixed, t_exp)};
  });
}

void wl_dissection_free(wl_dissection* d) { delete d; }

wl_status wl_dissection_info(const wl_dissection* d, double* Q, double* T, double* major_radius,
                             double* hl_radius, double* hl_measure) {
  return guarded([&] {
    need(d, "dissection");
    if (Q) *Q = d->params.Q;
    if (T) *T = d->params.T;
    if (major_radius) *major_radius = d->params.major_radius();
    if (hl_radius) *hl_radius = d->params.hl_radius();
    if (hl_measure) *hl_measure = hl_measure_bound(d->params);
  });
}

wl_status wl_in_frak_v(const wl_dissection* d, double alpha, int* out) {
  return guarded([&] {
    need(d, "dissection");
    need(out, "out");
    *out = in_frak_v(alpha, d->params) ? 1 : 0;
  });
}

wl_status wl_classify(const wl_dissection* d, const wl_instance* inst, int theta3_index, double alpha,
                      char* label, size_t label_len, int* class_index) {
  return guarded([&] {
    need(d, "dissection");
    need(inst, "instance");
    const ArcLabel lab = classify(alpha, d->params, inst->inst, theta3_index);
    if (label && label_len > 0) {
      const std::string s = lab.to_string();
      require(s.size() < label_len, "classify: label buffer too small");
      std::memcpy(label, s.c_str(), s.size() + 1);
    }
    if (class_index) *class_index = lab.class_index();
  });
}

const char* wl_arc_class_name(int index) {
  if (index < 0 || index >= kArcClassCount) return "";
  return arc_class_name(index);
}

wl_status wl_dirichlet_approx(double alpha, int64_t q_max, int64_t* a, int64_t* q, double* err) {
  return guarded([&] {
    const RationalApprox r = dirichlet_approx(alpha, q_max);
    if (a) *a = r.a;
    if (q) *q = r.q;
    if (err) *err = r.err;
  });
}

wl_status wl_dh_integral(const wl_instance* inst, double tau, const wl_kernel* k, double A, double mesh,
                         int workers, wl_quad_result* out) {
  return guarded([&] {
    need(inst, "instance");
    need(k, "kernel");
    need(out, "out");
    put(dh_integral(inst->inst, tau, k->spec, A, mesh, exec_of(workers)), out);
  });
}

wl_status wl_arc_contributions(const wl_instance* inst, double tau, const wl_kernel* k, const wl_dissection* d,
                               double A, double mesh, int workers, wl_quad_result* parts,
                               wl_quad_result* total) {
  return guarded([&] {
    need(inst, "instance");
    need(k, "kernel");
    need(d, "dissection");
    need(parts, "parts");
    const ArcBreakdown br = arc_contributions(inst->inst, tau, k->spec, d->params, A, mesh, exec_of(workers));
    for (int i = 0; i < kArcClassCount; ++i) put(br.parts[static_cast<std::size_t>(i)], &parts[i]);
    if (total) put(br.total, total);
  });
}

wl_status wl_minor_moment(double theta, int s2, int k, double P, const wl_kernel* kern, const wl_dissection* d,
                          double A, double mesh, int workers, int whole_line, wl_quad_result* out) {
  return guarded([&] {
    need(kern, "kernel");
    need(d, "dissection");
    need(out, "out");
    put(minor_moment(theta, s2, k, P, kern->spec, d->params, A, mesh, exec_of(workers), whole_line != 0), out);
  });
}

wl_status wl_hua_moment(double theta, int j, int k, double P, double zeta, double A, double mesh, int workers,
                        wl_quad_result* out) {
  return guarded([&] {
    need(out, "out");
    put(hua_moment(theta, j, k, P, zeta, A, mesh, exec_of(workers)), out);
  });
}

double wl_minor_moment_envelope(int s, int k) { return minor_moment_envelope(s, k); }

wl_status wl_slope_estimate(const double* P, const double* value, int n, double* exponent, double* intercept,
                            double* residual) {
  return guarded([&] {
    need(P, "P");
    need(value, "value");
    require(n >= 0, "n must be non-negative");
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(P[i], value[i]);
    const SlopeFit f = slope_estimate(pts);
    if (exponent) *exponent = f.exponent;
    if (intercept) *intercept = f.intercept;
    if (residual) *residual = f.residual;
  });
}

wl_status wl_verify(int workers, int inject_k1_sign_error, char** json, int* all_pass) {
  return guarded([&] {
    need(json, "json");
    const VerifyReport r = run_verify({workers > 0 ? workers : 1, inject_k1_sign_error != 0});
    *json = dup_string(r.to_json());
    if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
  });
}

wl_status wl_verify_csv(int workers, int inject_k1_sign_error, char** csv, int* all_pass) {
  return guarded([&] {
    need(csv, "csv");
    const VerifyReport r = run_verify({workers > 0 ? workers : 1, inject_k1_sign_error != 0});
    *csv = dup_string(r.to_csv());
    if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
  });
}

void wl_free_string(char* s) { std::free(s); }

}  // extern "C"
