#pragma once

#include <string>
#include <string_view>

#include "waringlab/core.hpp"

namespace waringlab {

// Stand-in for the minor-arc cutoff T(P).
enum class TChoice { LogP, SqrtP, Identity, Fixed };

TChoice parse_tchoice(std::string_view text);
std::string tchoice_name(TChoice c);
double T_of_P(TChoice c, double P, double fixed_value = 0);

struct KernelParams {
  double eta = 1;
  double P = 0;
  TChoice t_choice = TChoice::LogP;
  double T_fixed = 0;
  double T = 0;
  double L = 0;      // min{log T, log P}
  double delta = 0;  // eta / L

  static KernelParams make(double eta, double P, TChoice t_choice = TChoice::LogP, double T_fixed = 0);
};

enum class KernelKind { DH, Plus, Minus, K1, K2Plus, K2Minus };

KernelKind parse_kernel_kind(std::string_view text);
std::string kernel_kind_name(KernelKind k);

struct KernelSpec {
  KernelKind kind = KernelKind::DH;
  KernelParams params;

  // DH(eta) needs no P; the other kinds need a full parameter set.
  static KernelSpec dh(double eta);
  static KernelSpec of(KernelKind kind, const KernelParams& params);

  // Half-width of the support of the Fourier transform.
  double support_radius() const;
  // sup |K| and c with |K(alpha)| <= c / alpha^2.
  double peak() const;
  double decay_constant() const;
  // Rigorous bound on int_{|alpha| > A} |K(alpha)| d alpha.
  double tail_mass_bound(double A) const;
  // Same bound for the sampled sum h * sum_{|n h| > A} |K(n h)|.
  double sampled_tail_bound(double A, double h) const;
};

double eval_kernel(const KernelSpec& spec, double alpha);

// Exact transform int e(alpha t) K(alpha) d alpha; DH, K1, K2Plus, K2Minus only.
double fourier_K(const KernelSpec& spec, double t);

struct Interval {
  double lower;
  double upper;
};

struct Sandwich {
  Interval minus;  // (U_{eta-delta}(t), U_eta(t))
  Interval plus;   // (U_eta(t), U_{eta+delta}(t))
};

Sandwich sandwich_bounds(const KernelParams& params, double t);

// min{1, L / alpha^2}
double decay_bound(const KernelParams& params, double alpha);

// int_{|alpha| > A} e(alpha t) K(alpha) d alpha, evaluated through the sine integral.
double transform_tail(const KernelSpec& spec, double t, double A);

struct TransformEstimate {
  double truncated = 0;   // composite Gauss-Legendre over [-A, A]
  double tail = 0;        // transform_tail
  double tail_bound = 0;  // tail_mass_bound(A)
  long long nodes = 0;
  double value() const { return truncated + tail; }
};

TransformEstimate numeric_transform(const KernelSpec& spec, double t, double A);

}  // namespace waringlab
