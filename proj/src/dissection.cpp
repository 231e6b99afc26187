#include "waringlab/dissection.hpp"

#include <cmath>
#include <numeric>

#include "waringlab/expsum.hpp"

namespace waringlab {

DissectionParams DissectionParams::make(double P, int k, double xi, double q_scale, TChoice t_choice,
                                        double T_fixed, double t_exp) {
  require(k >= 2, "dissection: k must be at least 2");
  require(std::isfinite(P) && P > 1, "dissection: P must exceed 1");
  require(xi > 0 && xi < 1, "dissection: xi must lie in (0,1)");
  DissectionParams d;
  d.P = P;
  d.k = k;
  d.xi = xi;
  d.q_scale = q_scale > 0 ? q_scale : 1.0 / (2.0 * k);
  d.Q = d.q_scale * std::pow(P, 0.25);
  require(d.Q >= 1, "dissection: Q = " + std::to_string(d.Q) + " < 1 (P too small for this Q scale)");
  d.t_choice = t_choice;
  d.T_fixed = T_fixed;
  d.T = T_of_P(t_choice, P, T_fixed);
  require(std::isfinite(d.T) && d.T > d.major_radius(), "dissection: T(P) must exceed P^{xi-k}");
  const double kk = k;
  d.t_exp = t_exp > 0 ? t_exp : 0.9 / (2 * kk * (kk - 1));
  require(d.t_exp > 0 && 2 * kk * (kk - 1) * d.t_exp < 1, "dissection: need 2k(k-1) t < 1");
  return d;
}

double DissectionParams::major_radius() const { return std::pow(P, xi - k); }
double DissectionParams::hl_radius() const { return Q * std::pow(P, -k); }

namespace {

const char* const kClassNames[kArcClassCount] = {
    "major", "minor:N:B", "minor:N:Bbar", "minor:n", "trivial:N:B", "trivial:N:Bbar", "trivial:n",
};

// Convergents p_n / q_n of alpha with q_n <= q_max, in increasing q.
template <class Fn>
void for_each_convergent(double alpha, std::int64_t q_max, Fn&& fn) {
  long double x = alpha;
  long double a = std::floor(x);
  long double frac = x - a;
  std::int64_t pm1 = 1, qm1 = 0;
  auto p0 = static_cast<std::int64_t>(a);
  std::int64_t q0 = 1;
  if (!fn(p0, q0)) return;
  for (int guard = 0; guard < 96 && frac > 0; ++guard) {
    x = 1.0L / frac;
    if (x > static_cast<long double>(q_max) + 1) return;  // next q exceeds q_max
    a = std::floor(x);
    frac = x - a;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p = ai * p0 + pm1;
    const std::int64_t q = ai * q0 + qm1;
    if (q > q_max) return;
    pm1 = p0;
    qm1 = q0;
    p0 = p;
    q0 = q;
    if (!fn(p0, q0)) return;
  }
}

}  // namespace

const char* arc_class_name(int index) {
  require(index >= 0 && index < kArcClassCount, "arc class index out of range");
  return kClassNames[index];
}

std::string ArcLabel::to_string() const {
  std::string s = dh == DhArc::Major ? "major" : dh == DhArc::Minor ? "minor" : "trivial";
  if (hl == HlArc::N) {
    s += ":N:" + std::to_string(a) + "/" + std::to_string(q);
    s += b == BArc::B ? ":B" : ":Bbar";
  } else if (hl == HlArc::LittleN) {
    s += ":n";
  }
  return s;
}

int ArcLabel::class_index() const {
  if (dh == DhArc::Major) return 0;
  const int base = dh == DhArc::Minor ? 1 : 4;
  if (hl == HlArc::N) return base + (b == BArc::B ? 0 : 1);
  return base + 2;
}

RationalApprox dirichlet_approx(double alpha, std::int64_t q_max) {
  require(q_max >= 1, "dirichlet_approx: q_max must be positive");
  require(std::isfinite(alpha), "dirichlet_approx: alpha must be finite");
  RationalApprox best;
  long double best_err = -1;
  for_each_convergent(alpha, q_max, [&](std::int64_t p, std::int64_t q) {
    const long double err = std::fabs(static_cast<long double>(q) * alpha - static_cast<long double>(p));
    if (best_err < 0 || err < best_err) {
      best_err = err;
      best = {p, q, static_cast<double>(err)};
    }
    return true;
  });
  return best;
}

std::optional<RationalApprox> least_q_witness(double alpha, std::int64_t q_max, double eps) {
  std::optional<RationalApprox> out;
  if (q_max < 1) return out;
  for_each_convergent(alpha, q_max, [&](std::int64_t, std::int64_t q) {
    const long double v = static_cast<long double>(q) * alpha;
    const long double a = std::nearbyint(v);
    const long double err = std::fabs(v - a);
    if (err <= eps) {
      out = RationalApprox{static_cast<std::int64_t>(a), q, static_cast<double>(err)};
      return false;
    }
    return true;
  });
  return out;
}

bool in_frak_v(double alpha, const DissectionParams& params) {
  const auto qmax = static_cast<std::int64_t>(std::floor(params.Q));
  return !least_q_witness(alpha, qmax, params.hl_radius()).has_value();
}

namespace {

ArcLabel classify_impl(double alpha, const DissectionParams& params, auto&& f3_abs) {
  ArcLabel lab;
  const double mag = std::fabs(alpha);
  lab.unit = static_cast<std::int64_t>(std::floor(mag));
  if (mag < params.major_radius()) return lab;
  lab.dh = mag > params.T ? DhArc::Trivial : DhArc::Minor;
  const auto qmax = static_cast<std::int64_t>(std::floor(params.Q));
  const auto w = least_q_witness(alpha, qmax, params.hl_radius());
  if (!w) {
    lab.hl = HlArc::LittleN;
    return lab;
  }
  lab.hl = HlArc::N;
  lab.a = w->a;
  lab.q = w->q;
  lab.b = f3_abs() >= std::pow(params.P, 1.0 - params.t_exp) ? BArc::B : BArc::BBar;
  return lab;
}

}  // namespace

ArcLabel classify(double alpha, const DissectionParams& params, const Instance& inst, int theta3_index) {
  require(inst.k() == params.k, "classify: instance and dissection degrees differ");
  require(theta3_index >= 0 && theta3_index < inst.s(), "classify: theta3_index out of range");
  return classify_impl(alpha, params, [&] {
    return std::abs(f_theta(alpha, inst.theta(theta3_index), params.P, params.k));
  });
}

ArcLabel classify_with_magnitude(double alpha, const DissectionParams& params, double f3_abs) {
  return classify_impl(alpha, params, [&] { return f3_abs; });
}

double hl_measure_bound(const DissectionParams& params) {
  return 2.0 * std::floor(params.Q) * params.hl_radius();
}

}  // namespace waringlab
