#include "waringlab/core.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace waringlab {

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

ShiftPreset ShiftPreset::sqrt2() {
  return {ShiftPresetName::Sqrt2, std::sqrt(2.0L) - 1.0L};
}
ShiftPreset ShiftPreset::golden() {
  return {ShiftPresetName::Golden, (std::sqrt(5.0L) - 1.0L) / 2.0L};
}
ShiftPreset ShiftPreset::e2() {
  return {ShiftPresetName::E2, std::exp(1.0L) - 2.0L};
}
ShiftPreset ShiftPreset::custom(real_ext v) {
  require(v > 0 && v < 1, "shift must lie in (0,1)");
  return {ShiftPresetName::Custom, v};
}

ShiftPreset ShiftPreset::parse(std::string_view text) {
  if (text == "sqrt2") return sqrt2();
  if (text == "golden") return golden();
  if (text == "e2") return e2();
  std::string buf(text);
  char* end = nullptr;
  errno = 0;
  real_ext v = std::strtold(buf.c_str(), &end);
  require(!buf.empty() && end == buf.c_str() + buf.size() && errno == 0,
          "unrecognised shift '" + buf + "' (expected sqrt2, golden, e2 or a decimal)");
  return custom(v);
}

std::string ShiftPreset::label() const {
  switch (name) {
    case ShiftPresetName::Sqrt2: return "sqrt2";
    case ShiftPresetName::Golden: return "golden";
    case ShiftPresetName::E2: return "e2";
    case ShiftPresetName::Custom: break;
  }
  std::ostringstream os;
  os.precision(21);
  os << value;
  return os.str();
}

Instance::Instance(int k, std::vector<real_ext> theta, double eta)
    : k_(k), theta_(std::move(theta)), eta_(eta) {
  require(k_ >= 2, "k must be at least 2");
  require(!theta_.empty(), "s must be at least 1");
  for (real_ext t : theta_) require(t > 0 && t < 1, "every shift must lie in (0,1)");
  require(eta_ > 0 && eta_ <= 1, "eta must lie in (0,1]");
}

Instance::Instance(int k, int s, real_ext theta, double eta)
    : Instance(k, std::vector<real_ext>(static_cast<std::size_t>(s > 0 ? s : 0), theta), eta) {}

std::int64_t floor_root(double x, int k) {
  require(k >= 1, "root degree must be positive");
  if (x < 1) return 0;
  auto n = static_cast<std::int64_t>(std::floor(std::pow(x, 1.0 / k)));
  auto pw = [k](std::int64_t m) {
    long double r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<long double>(m);
    return r;
  };
  const long double lx = x;
  while (n > 0 && pw(n) > lx) --n;
  while (pw(n + 1) <= lx) ++n;
  return n;
}

Query Query::make(double tau, int k) {
  require(tau > 0 && std::isfinite(tau), "tau must be positive");
  require(k >= 1, "k must be positive");
  return {tau, std::pow(tau, 1.0 / k), floor_root(tau, k)};
}

real_ext shifted_power(std::int64_t x, real_ext theta, int k) {
  const real_ext b = static_cast<real_ext>(x) - theta;
  real_ext r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

double phi(std::span<const std::int64_t> x, const Instance& inst) {
  require(static_cast<int>(x.size()) == inst.s(), "phi: tuple length must equal s");
  CompensatedSum<real_ext> acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] >= 1, "phi: entries must be positive integers");
    acc.add(shifted_power(x[i], inst.theta()[i], inst.k()));
  }
  return static_cast<double>(acc.value());
}

double sigma(int s, int j, int k, std::span<const std::int64_t> x, real_ext theta) {
  require(s >= 1 && static_cast<int>(x.size()) == 2 * s, "sigma: tuple length must be 2s");
  require(j >= 1 && j <= k, "sigma: j must satisfy 1 <= j <= k");
  if (j < k) {
    __int128 acc = 0;
    for (int i = 0; i < s; ++i) {
      __int128 a = 1, b = 1;
      for (int e = 0; e < j; ++e) {
        a *= x[static_cast<std::size_t>(i)];
        b *= x[static_cast<std::size_t>(s + i)];
      }
      acc += a - b;
    }
    return static_cast<double>(acc);
  }
  CompensatedSum<real_ext> acc;
  for (int i = 0; i < s; ++i) {
    acc.add(shifted_power(x[static_cast<std::size_t>(i)], theta, k));
    acc.add(-shifted_power(x[static_cast<std::size_t>(s + i)], theta, k));
  }
  return static_cast<double>(acc.value());
}

Quarters s0(int k) {
  require(k >= 2, "s0: k must be at least 2");
  const std::int64_t kk = k;
  return {4 * kk * kk + 3 * kk - 1};
}

std::int64_t s1(int k, int j) {
  require(j >= 1 && j < k, "s1: need 1 <= j < k");
  const std::int64_t kk = k, jj = j;
  const std::int64_t num = kk * (kk + 1) - jj * (jj + 1);
  const std::int64_t den = 4 * (kk - jj) + 1;
  return kk * kk + kk + 1 - num / den;  // num, den > 0 so '/' is floor
}

int j0(int k) {
  require(k >= 2, "j0: k must be at least 2");
  const long double v = k + 0.25L - std::sqrt(0.5L * k + 5.0L / 16.0L);
  return static_cast<int>(std::lround(v));
}

namespace {

constexpr long double kLanczosG = 7.0L;
constexpr long double kLanczosCoeff[9] = {
    0.99999999999980993L,  676.5203681218851L,     -1259.1392167224028L,
    771.32342877765313L,   -176.61502916214059L,   12.507343278686905L,
    -0.13857109526572012L, 9.9843695780195716e-6L, 1.5056327351493116e-7L};

long double lanczos_gamma(long double x) {
  if (x < 0.5L) {
    const long double pi = std::numbers::pi_v<long double>;
    return pi / (std::sin(pi * x) * lanczos_gamma(1.0L - x));
  }
  x -= 1.0L;
  long double a = kLanczosCoeff[0];
  const long double t = x + kLanczosG + 0.5L;
  for (int i = 1; i < 9; ++i) a += kLanczosCoeff[i] / (x + static_cast<long double>(i));
  return std::sqrt(2.0L * std::numbers::pi_v<long double>) * std::pow(t, x + 0.5L) *
         std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  require(std::isfinite(x) && (x > 0 || x != std::floor(x)), "gamma: pole or non-finite argument");
  return static_cast<double>(lanczos_gamma(x));
}

double main_term(int k, int s, double eta, double tau) {
  require(k >= 1 && s >= 1, "main_term: k, s must be positive");
  require(tau > 0, "main_term: tau must be positive");
  const long double g1 = lanczos_gamma(1.0L + 1.0L / k);
  const long double gs = lanczos_gamma(static_cast<long double>(s) / k);
  const long double expo = static_cast<long double>(s) / k - 1.0L;
  return static_cast<double>(2.0L * eta * std::pow(g1, static_cast<long double>(s)) / gs *
                             std::pow(static_cast<long double>(tau), expo));
}

double main_term(const Instance& inst, double tau) {
  return main_term(inst.k(), inst.s(), inst.eta(), tau);
}

}  // namespace waringlab
