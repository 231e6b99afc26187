#include "waringlab/kernels.hpp"

#include <gsl/gsl_sf_expint.h>

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

namespace waringlab {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

double wide_width(const KernelSpec& s) {
  const auto& p = s.params;
  switch (s.kind) {
    case KernelKind::K2Plus:
    case KernelKind::Plus: return 2 * p.eta + p.delta;
    case KernelKind::K2Minus:
    case KernelKind::Minus: return 2 * p.eta - p.delta;
    default: return 0;
  }
}

void require_full_params(const KernelSpec& s) {
  if (s.kind != KernelKind::DH)
    require(s.params.delta > 0 && s.params.L > 0, "kernel parameters not initialised (need P)");
}

// int_A^inf cos(w a) / a^2 da for w >= 0.
double cos_over_sq_tail(double w, double A) {
  if (w == 0) return 1.0 / A;
  const double x = w * A;
  return std::cos(x) / A - w * (kPi / 2 - gsl_sf_Si(x));
}

}  // namespace

TChoice parse_tchoice(std::string_view text) {
  if (text == "logP" || text == "log") return TChoice::LogP;
  if (text == "sqrtP" || text == "sqrt") return TChoice::SqrtP;
  if (text == "P" || text == "identity") return TChoice::Identity;
  if (text == "fixed") return TChoice::Fixed;
  fail(ErrorKind::InvalidArgument, "unknown T(P) choice '" + std::string(text) +
                                       "' (expected logP, sqrtP, identity or fixed)");
}

std::string tchoice_name(TChoice c) {
  switch (c) {
    case TChoice::LogP: return "logP";
    case TChoice::SqrtP: return "sqrtP";
    case TChoice::Identity: return "identity";
    case TChoice::Fixed: return "fixed";
  }
  return "?";
}

double T_of_P(TChoice c, double P, double fixed_value) {
  switch (c) {
    case TChoice::LogP: return std::log(P);
    case TChoice::SqrtP: return std::sqrt(P);
    case TChoice::Identity: return P;
    case TChoice::Fixed: return fixed_value;
  }
  return 0;
}

KernelParams KernelParams::make(double eta, double P, TChoice t_choice, double T_fixed) {
  require(eta > 0 && eta <= 1, "eta must lie in (0,1]");
  require(std::isfinite(P) && P >= 2, "kernel parameters need P >= 2");
  require(P > std::numbers::e, "L(P) > 0 needs P > e");
  KernelParams p;
  p.eta = eta;
  p.P = P;
  p.t_choice = t_choice;
  p.T_fixed = T_fixed;
  p.T = T_of_P(t_choice, P, T_fixed);
  require(std::isfinite(p.T) && p.T > 1, "L(P) > 0 needs T(P) > 1");
  p.L = std::min(std::log(p.T), std::log(P));
  p.delta = eta / p.L;
  return p;
}

KernelKind parse_kernel_kind(std::string_view text) {
  if (text == "dh") return KernelKind::DH;
  if (text == "plus") return KernelKind::Plus;
  if (text == "minus") return KernelKind::Minus;
  if (text == "k1") return KernelKind::K1;
  if (text == "k2plus") return KernelKind::K2Plus;
  if (text == "k2minus") return KernelKind::K2Minus;
  fail(ErrorKind::InvalidArgument, "unknown kernel '" + std::string(text) +
                                       "' (expected dh, plus, minus, k1, k2plus or k2minus)");
}

std::string kernel_kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::DH: return "dh";
    case KernelKind::Plus: return "plus";
    case KernelKind::Minus: return "minus";
    case KernelKind::K1: return "k1";
    case KernelKind::K2Plus: return "k2plus";
    case KernelKind::K2Minus: return "k2minus";
  }
  return "?";
}

KernelSpec KernelSpec::dh(double eta) {
  require(eta > 0 && eta <= 1, "eta must lie in (0,1]");
  KernelSpec s;
  s.kind = KernelKind::DH;
  s.params.eta = eta;
  return s;
}

KernelSpec KernelSpec::of(KernelKind kind, const KernelParams& params) {
  KernelSpec s;
  s.kind = kind;
  s.params = params;
  require_full_params(s);
  return s;
}

double KernelSpec::support_radius() const {
  const auto& p = params;
  switch (kind) {
    case KernelKind::DH: return p.eta;
    case KernelKind::K1: return p.delta;
    case KernelKind::K2Plus:
    case KernelKind::K2Minus: return wide_width(*this);
    case KernelKind::Plus: return p.eta + p.delta;
    case KernelKind::Minus: return p.eta;
  }
  return 0;
}

double KernelSpec::peak() const {
  switch (kind) {
    case KernelKind::DH: return params.eta;
    case KernelKind::K1: return 1.0;
    case KernelKind::K2Plus:
    case KernelKind::K2Minus: return wide_width(*this) * wide_width(*this);
    case KernelKind::Plus:
    case KernelKind::Minus: return wide_width(*this);
  }
  return 0;
}

double KernelSpec::decay_constant() const {
  const double pi2 = kPi * kPi;
  switch (kind) {
    case KernelKind::DH: return 1.0 / (pi2 * params.eta);
    case KernelKind::K1: return 1.0 / (pi2 * params.delta * params.delta);
    case KernelKind::K2Plus:
    case KernelKind::K2Minus: return 1.0 / pi2;
    case KernelKind::Plus:
    case KernelKind::Minus: return 1.0 / (pi2 * params.delta);
  }
  return 0;
}

double KernelSpec::tail_mass_bound(double A) const {
  require(A > 0, "truncation A must be positive");
  return 2.0 * decay_constant() / A;
}

double KernelSpec::sampled_tail_bound(double A, double h) const {
  require(A > 0 && h > 0, "truncation A and mesh must be positive");
  const double n = std::floor(A / h);
  require(n >= 1, "mesh larger than the truncation window");
  return 2.0 * decay_constant() / (h * n);
}

double eval_kernel(const KernelSpec& spec, double alpha) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case KernelKind::DH: {
      const double s = sinc(kPi * p.eta * alpha);
      return p.eta * s * s;
    }
    case KernelKind::K1: {
      const double s = sinc(kPi * p.delta * alpha);
      return s * s;
    }
    case KernelKind::K2Plus:
    case KernelKind::K2Minus: {
      const double w = wide_width(spec);
      const double s = w * sinc(kPi * w * alpha);
      return s * s;
    }
    case KernelKind::Plus:
    case KernelKind::Minus: {
      const double w = wide_width(spec);
      return w * sinc(kPi * p.delta * alpha) * sinc(kPi * w * alpha);
    }
  }
  return 0;
}

double fourier_K(const KernelSpec& spec, double t) {
  const auto& p = spec.params;
  const double at = std::fabs(t);
  switch (spec.kind) {
    case KernelKind::DH: return std::max(0.0, 1.0 - at / p.eta);
    case KernelKind::K1: return at < p.delta ? (1.0 - at / p.delta) / p.delta : 0.0;
    case KernelKind::K2Plus:
    case KernelKind::K2Minus: {
      const double w = wide_width(spec);
      return at < w ? w - at : 0.0;
    }
    case KernelKind::Plus:
    case KernelKind::Minus: break;
  }
  fail(ErrorKind::InvalidArgument,
       "fourier_K: the transforms of K+ and K- are only known through sandwich_bounds");
}

Sandwich sandwich_bounds(const KernelParams& params, double t) {
  auto U = [&](double c) { return std::fabs(t) < c ? 1.0 : 0.0; };
  Sandwich s;
  s.minus = {U(params.eta - params.delta), U(params.eta)};
  s.plus = {U(params.eta), U(params.eta + params.delta)};
  return s;
}

double decay_bound(const KernelParams& params, double alpha) {
  if (alpha == 0) return 1.0;
  return std::min(1.0, params.L / (alpha * alpha));
}

double transform_tail(const KernelSpec& spec, double t, double A) {
  require(A > 0, "truncation A must be positive");
  const auto& p = spec.params;
  const double pi2 = kPi * kPi;
  // K(alpha) = sum_i c_i cos(w_i alpha) / alpha^2 for alpha != 0.
  std::array<std::pair<double, double>, 2> terms{};
  switch (spec.kind) {
    case KernelKind::DH:
      terms = {{{1 / (2 * pi2 * p.eta), 0.0}, {-1 / (2 * pi2 * p.eta), 2 * kPi * p.eta}}};
      break;
    case KernelKind::K1: {
      const double c = 1 / (2 * pi2 * p.delta * p.delta);
      terms = {{{c, 0.0}, {-c, 2 * kPi * p.delta}}};
      break;
    }
    case KernelKind::K2Plus:
    case KernelKind::K2Minus:
      terms = {{{1 / (2 * pi2), 0.0}, {-1 / (2 * pi2), 2 * kPi * wide_width(spec)}}};
      break;
    case KernelKind::Plus:
    case KernelKind::Minus: {
      const double w = wide_width(spec);
      const double c = 1 / (2 * pi2 * p.delta);
      terms = {{{c, kPi * (w - p.delta)}, {-c, kPi * (w + p.delta)}}};
      break;
    }
  }
  const double nu = 2 * kPi * t;
  double acc = 0;
  for (const auto& [c, w] : terms)
    acc += c * (cos_over_sq_tail(std::fabs(w + nu), A) + cos_over_sq_tail(std::fabs(w - nu), A));
  return acc;  // 2 * int_A^inf, with the 1/2 from the product-to-sum identity
}

TransformEstimate numeric_transform(const KernelSpec& spec, double t, double A) {
  require(A > 0, "truncation A must be positive");
  using GL = boost::math::quadrature::gauss<double, 20>;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  const double freq = spec.support_radius() + std::fabs(t);
  const double width = 0.5 / std::max(1.0, freq);
  const auto panels = static_cast<long long>(std::ceil(A / width));
  const double hw = A / static_cast<double>(panels) / 2;
  CompensatedSum<double> acc;
  long long nodes = 0;
  auto g = [&](double a) { return eval_kernel(spec, a) * std::cos(2 * kPi * t * a); };
  for (long long i = 0; i < panels; ++i) {
    const double mid = (2 * static_cast<double>(i) + 1) * hw;
    double part = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] == 0) {
        part += w[j] * g(mid);
        ++nodes;
      } else {
        part += w[j] * (g(mid - hw * x[j]) + g(mid + hw * x[j]));
        nodes += 2;
      }
    }
    acc.add(part * hw);
  }
  TransformEstimate e;
  e.truncated = 2 * acc.value();
  e.tail = transform_tail(spec, t, A);
  e.tail_bound = spec.tail_mass_bound(A);
  e.nodes = 2 * nodes;
  return e;
}

}  // namespace waringlab
