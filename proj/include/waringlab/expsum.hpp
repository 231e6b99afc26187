#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "waringlab/core.hpp"

namespace waringlab {

using cplx = std::complex<double>;

// e(x) = exp(2 pi i x) with x reduced mod 1 in extended precision first.
cplx unit_phase(real_ext x);

// (alpha_0, ..., alpha_k) with sum_j alpha_j x^j = alpha (x - theta)^k.
struct CoeffVector {
  std::vector<real_ext> alpha;
  int k() const { return static_cast<int>(alpha.size()) - 1; }
};

struct RationalCoeffs {
  std::int64_t q = 1;
  std::vector<std::int64_t> a;  // a[j-1] = a_j, j = 1..k
  std::int64_t d = 1;           // gcd(q, a_2, ..., a_k)
};

struct OscResult {
  cplx value;
  double error = 0;
  std::int64_t nodes = 0;
};

// sum_{1 <= x <= P} e(alpha (x - theta)^k)
cplx f_theta(double alpha, real_ext theta, double P, int k);

// prod_i f_theta(alpha, theta_i, P, k)
cplx f_bold(double alpha, const Instance& inst, double P);

// S(q, a) = sum_{x=1}^q e((a_k x^k + ... + a_1 x) / q), a[j-1] = a_j.
cplx weyl_sum(std::int64_t q, std::span<const std::int64_t> a);

// int_0^P e(beta_k y^k + ... + beta_1 y) dy, beta[j-1] = beta_j.
OscResult osc_integral(std::span<const double> beta, double P, std::int64_t node_budget = 10'000'000);

CoeffVector expand_shift_coeffs(real_ext alpha, real_ext theta, int k);

// q^{-1} S(q,a) I(beta) e(alpha_0). Throws HypothesisViolated unless
// |q alpha_j - a_j| <= P^{1-j} / (2k^2) for every j.
cplx major_approx(double alpha, real_ext theta, double P, int k, const RationalCoeffs& rc);

// P^{-1} sum_{1 <= y <= P} min{P^{k-1}, ||mu k y + alpha_last||^{-1}}
double psi_avg(double mu, double alpha_last, double P, int k);

// Least q <= P^{1-zeta} with ||q alpha_j|| <= P^{1-j-zeta} for 1 <= j <= k.
std::optional<RationalCoeffs> approx_coeffs(double alpha, real_ext theta, double P, int k, double zeta);

// Incremental evaluation of f_theta on the grid alpha_n = n h. Each step is one
// complex multiply per term; anchor() recomputes phases directly.
class ThetaStepper {
 public:
  ThetaStepper(real_ext theta, double P, int k, real_ext h);
  void anchor(std::int64_t n);
  void step();
  cplx value() const;

 private:
  std::vector<real_ext> base_;  // (x - theta)^k
  std::vector<double> zr_, zi_, wr_, wi_;
  real_ext h_;
};

}  // namespace waringlab
