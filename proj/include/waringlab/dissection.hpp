#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "waringlab/core.hpp"
#include "waringlab/kernels.hpp"

namespace waringlab {

struct RationalApprox {
  std::int64_t a = 0;
  std::int64_t q = 1;
  double err = 0;  // |q alpha - a|
};

struct DissectionParams {
  double xi = 0.5;
  double P = 0;
  int k = 2;
  double q_scale = 0;  // Q = q_scale * P^{1/4}; 0 selects 1/(2k)
  double Q = 0;
  TChoice t_choice = TChoice::LogP;
  double T_fixed = 0;
  double T = 0;
  double t_exp = 0;  // 0 selects 0.9 / (2k(k-1))

  static DissectionParams make(double P, int k, double xi = 0.5, double q_scale = 0,
                               TChoice t_choice = TChoice::LogP, double T_fixed = 0, double t_exp = 0);

  double major_radius() const;  // P^{xi-k}
  double hl_radius() const;     // Q P^{-k}
};

enum class DhArc { Major, Minor, Trivial };
enum class HlArc { NotApplicable, N, LittleN };
enum class BArc { NotApplicable, B, BBar };

struct ArcLabel {
  DhArc dh = DhArc::Major;
  HlArc hl = HlArc::NotApplicable;
  BArc b = BArc::NotApplicable;
  std::int64_t a = 0, q = 0;  // witness when hl == N
  std::int64_t unit = 0;      // floor(|alpha|), the unit interval index

  std::string to_string() const;
  // One of arc_class_names().
  int class_index() const;
};

inline constexpr int kArcClassCount = 7;
const char* arc_class_name(int index);

// Best approximation of the second kind with denominator at most q_max.
RationalApprox dirichlet_approx(double alpha, std::int64_t q_max);

// Least-q rational with q <= q_max and |q alpha - a| <= eps, if any.
std::optional<RationalApprox> least_q_witness(double alpha, std::int64_t q_max, double eps);

bool in_frak_v(double alpha, const DissectionParams& params);

ArcLabel classify(double alpha, const DissectionParams& params, const Instance& inst, int theta3_index);

// classify() when |f_{theta_3}(alpha)| is already known.
ArcLabel classify_with_magnitude(double alpha, const DissectionParams& params, double f3_abs);

// Sum_{q <= Q} sum_{a=1}^{q} 2 Q P^{-k} / q
double hl_measure_bound(const DissectionParams& params);

}  // namespace waringlab
