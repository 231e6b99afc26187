#include "waringlab/expsum.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace waringlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ComplexSum {
  CompensatedSum<double> re, im;
  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

std::int64_t mod_pos(std::int64_t v, std::int64_t q) {
  std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

real_ext dist_to_int(real_ext v) { return std::fabs(v - std::nearbyint(v)); }

}  // namespace

cplx unit_phase(real_ext x) {
  const real_ext r = x - std::nearbyint(x);
  const double ang = kTwoPi * static_cast<double>(r);
  return {std::cos(ang), std::sin(ang)};
}

cplx f_theta(double alpha, real_ext theta, double P, int k) {
  require(P >= 1, "f_theta: P must be at least 1");
  const auto n = static_cast<std::int64_t>(std::floor(P));
  ComplexSum acc;
  const real_ext a = alpha;
  for (std::int64_t x = 1; x <= n; ++x) acc.add(unit_phase(a * shifted_power(x, theta, k)));
  return acc.value();
}

cplx f_bold(double alpha, const Instance& inst, double P) {
  cplx prod(1.0, 0.0);
  for (real_ext t : inst.theta()) prod *= f_theta(alpha, t, P, inst.k());
  return prod;
}

cplx weyl_sum(std::int64_t q, std::span<const std::int64_t> a) {
  require(q >= 1, "weyl_sum: q must be positive");
  std::vector<std::int64_t> ar(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) ar[j] = mod_pos(a[j], q);
  ComplexSum acc;
  const long double pi2 = 2.0L * std::numbers::pi_v<long double>;
  for (std::int64_t x = 1; x <= q; ++x) {
    // Horner in Z/qZ: (((a_k x + a_{k-1}) x + ...) x + a_1) x
    __int128 num = 0;
    const __int128 xm = x % q;
    for (std::size_t j = ar.size(); j-- > 0;) num = ((num + ar[j]) * xm) % q;
    const long double ang = pi2 * static_cast<long double>(num) / static_cast<long double>(q);
    acc.add({static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))});
  }
  return acc.value();
}

OscResult osc_integral(std::span<const double> beta, double P, std::int64_t node_budget) {
  require(P > 0 && std::isfinite(P), "osc_integral: P must be positive");
  const std::size_t k = beta.size();
  auto phase = [&](double y) {
    long double acc = 0;
    for (std::size_t j = k; j-- > 0;) acc = (acc + beta[j]) * static_cast<long double>(y);
    return acc;
  };
  auto slope = [&](double y) {
    double acc = 0;
    for (std::size_t j = k; j-- > 1;) acc = acc * y + static_cast<double>(j + 1) * beta[j];
    if (k > 0) acc = acc * y + beta[0];
    return std::fabs(acc);
  };

  OscResult out;
  ComplexSum acc;
  CompensatedSum<double> err;
  const double panel_tol = 1e-10;  // per unit length
  std::int64_t nodes = 0;
  auto integrand = [&](double y) {
    ++nodes;
    return unit_phase(phase(y));
  };
  double y = 0;
  while (y < P) {
    // At most ~1/4 of a phase period per panel; halve on a failed error estimate.
    double w = 0.25 / (1.0 + slope(y));
    w = 0.25 / (1.0 + std::max(slope(y), slope(std::min(P, y + w))));
    for (;;) {
      const double b = std::min(P, y + w);
      double e = 0;
      const cplx v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, y, b, 0, 0, &e);
      const double local = std::fabs(e);
      if (local <= panel_tol * (b - y) + 1e-15) {
        acc.add(v);
        err.add(local);
        y = b;
        break;
      }
      w /= 2;
      if (w < 1e-9 * std::max(1.0, P))
        fail(ErrorKind::NotConverged, "osc_integral: panel at " + std::to_string(y) + " did not converge");
    }
    if (nodes > node_budget) fail(ErrorKind::NotConverged, "osc_integral: node budget exhausted");
  }
  out.value = acc.value();
  out.error = err.value();
  out.nodes = nodes;
  return out;
}

CoeffVector expand_shift_coeffs(real_ext alpha, real_ext theta, int k) {
  require(k >= 1, "expand_shift_coeffs: k must be positive");
  CoeffVector c;
  c.alpha.assign(static_cast<std::size_t>(k) + 1, 0);
  real_ext binom = 1;  // C(k, j) built downward from j = k
  real_ext neg_pow = 1;  // (-theta)^{k-j}
  for (int j = k; j >= 0; --j) {
    c.alpha[static_cast<std::size_t>(j)] = alpha * binom * neg_pow;
    binom = binom * static_cast<real_ext>(j) / static_cast<real_ext>(k - j + 1);
    neg_pow *= -theta;
  }
  return c;
}

cplx major_approx(double alpha, real_ext theta, double P, int k, const RationalCoeffs& rc) {
  require(rc.q >= 1, "major_approx: q must be positive");
  require(static_cast<int>(rc.a.size()) == k, "major_approx: need k numerators");
  const CoeffVector c = expand_shift_coeffs(alpha, theta, k);
  std::vector<double> beta(static_cast<std::size_t>(k));
  const real_ext q = static_cast<real_ext>(rc.q);
  for (int j = 1; j <= k; ++j) {
    const real_ext aj = static_cast<real_ext>(rc.a[static_cast<std::size_t>(j - 1)]);
    const real_ext gap = std::fabs(q * c.alpha[static_cast<std::size_t>(j)] - aj);
    const real_ext bound = std::pow(static_cast<real_ext>(P), 1 - j) / (2.0L * k * k);
    if (gap > bound)
      fail(ErrorKind::HypothesisViolated,
           "major_approx: |q alpha_" + std::to_string(j) + " - a_" + std::to_string(j) + "| = " +
               std::to_string(static_cast<double>(gap)) + " exceeds " +
               std::to_string(static_cast<double>(bound)));
    beta[static_cast<std::size_t>(j - 1)] = static_cast<double>(c.alpha[static_cast<std::size_t>(j)] - aj / q);
  }
  const cplx S = weyl_sum(rc.q, rc.a);
  const OscResult I = osc_integral(beta, P);
  return S * I.value / static_cast<double>(rc.q) * unit_phase(c.alpha[0]);
}

double psi_avg(double mu, double alpha_last, double P, int k) {
  require(P >= 1, "psi_avg: P must be at least 1");
  const auto n = static_cast<std::int64_t>(std::floor(P));
  const real_ext cap = std::pow(static_cast<real_ext>(P), k - 1);
  CompensatedSum<real_ext> acc;
  for (std::int64_t y = 1; y <= n; ++y) {
    const real_ext d = dist_to_int(static_cast<real_ext>(mu) * k * y + alpha_last);
    acc.add(d == 0 ? cap : std::min(cap, 1.0L / d));
  }
  return static_cast<double>(acc.value() / static_cast<real_ext>(P));
}

std::optional<RationalCoeffs> approx_coeffs(double alpha, real_ext theta, double P, int k, double zeta) {
  require(zeta > 0 && zeta < 1, "approx_coeffs: zeta must lie in (0,1)");
  require(P >= 1 && k >= 1, "approx_coeffs: need P >= 1 and k >= 1");
  const CoeffVector c = expand_shift_coeffs(alpha, theta, k);
  const auto qmax = static_cast<std::int64_t>(std::floor(std::pow(P, 1.0 - zeta)));
  std::vector<real_ext> bound(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j)
    bound[static_cast<std::size_t>(j)] = std::pow(static_cast<real_ext>(P), 1 - j - zeta);
  for (std::int64_t q = 1; q <= qmax; ++q) {
    bool ok = true;
    for (int j = 1; j <= k && ok; ++j)
      ok = dist_to_int(static_cast<real_ext>(q) * c.alpha[static_cast<std::size_t>(j)]) <=
           bound[static_cast<std::size_t>(j)];
    if (!ok) continue;
    RationalCoeffs rc;
    rc.q = q;
    rc.a.resize(static_cast<std::size_t>(k));
    std::int64_t g = q;
    for (int j = 1; j <= k; ++j) {
      const auto aj = static_cast<std::int64_t>(
          std::llround(static_cast<real_ext>(q) * c.alpha[static_cast<std::size_t>(j)]));
      rc.a[static_cast<std::size_t>(j - 1)] = aj;
      g = gcd64(g, aj);
    }
    if (g > 1) {
      rc.q /= g;
      for (auto& aj : rc.a) aj /= g;
    }
    rc.d = rc.q;
    for (int j = 2; j <= k; ++j) rc.d = gcd64(rc.d, rc.a[static_cast<std::size_t>(j - 1)]);
    return rc;
  }
  return std::nullopt;
}

ThetaStepper::ThetaStepper(real_ext theta, double P, int k, real_ext h) : h_(h) {
  require(P >= 1, "f_theta: P must be at least 1");
  const auto n = static_cast<std::size_t>(std::floor(P));
  base_.resize(n);
  zr_.resize(n);
  zi_.resize(n);
  wr_.assign(n, 1.0);
  wi_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    base_[i] = shifted_power(static_cast<std::int64_t>(i) + 1, theta, k);
    const cplx z = unit_phase(h_ * base_[i]);
    zr_[i] = z.real();
    zi_[i] = z.imag();
  }
}

void ThetaStepper::anchor(std::int64_t n) {
  const real_ext a = static_cast<real_ext>(n) * h_;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const cplx w = unit_phase(a * base_[i]);
    wr_[i] = w.real();
    wi_[i] = w.imag();
  }
}

void ThetaStepper::step() {
  const std::size_t n = base_.size();
  double* wr = wr_.data();
  double* wi = wi_.data();
  const double* zr = zr_.data();
  const double* zi = zi_.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = wr[i] * zr[i] - wi[i] * zi[i];
    const double m = wr[i] * zi[i] + wi[i] * zr[i];
    wr[i] = r;
    wi[i] = m;
  }
}

cplx ThetaStepper::value() const {
  double sr = 0, si = 0;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    sr += wr_[i];
    si += wi_[i];
  }
  return {sr, si};
}

}  // namespace waringlab
