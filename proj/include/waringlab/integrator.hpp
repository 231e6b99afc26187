#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "waringlab/core.hpp"
#include "waringlab/dissection.hpp"
#include "waringlab/expsum.hpp"
#include "waringlab/kernels.hpp"
#include "waringlab/parallel.hpp"

namespace waringlab {

struct QuadratureResult {
  cplx value;
  double tail_bound = 0;  // rigorous
  double disc_error = 0;  // |T_h - T_2h| plus rounding and boundary slivers
  std::int64_t panels = 0;  // grid cells evaluated on [0, A]
  double mesh = 0;
  double A = 0;

  double error() const { return tail_bound + disc_error; }
};

// Largest grid spacing for which the sampled integrand of dh_integral has no
// aliasing (its transform lives in a window of half-width B; spacing 1/(2B)
// keeps both the h and 2h sums exact up to truncation).
double dh_mesh_limit(const Instance& inst, double tau, const KernelSpec& spec);

// Same for |f_theta|^{power} K with kernel transform radius r.
double moment_mesh_limit(real_ext theta, int power, int k, double P, double kernel_radius);

// int_{-A}^{A} f_theta(alpha) e(-tau alpha) K(alpha) d alpha on a uniform grid.
// mesh <= 0 selects dh_mesh_limit; a coarser mesh is rejected.
QuadratureResult dh_integral(const Instance& inst, double tau, const KernelSpec& spec, double A,
                             double mesh = 0, const Exec& exec = {});

struct ArcBreakdown {
  std::array<QuadratureResult, kArcClassCount> parts;  // indexed as arc_class_name
  QuadratureResult total;
};

// dh_integral regrouped by classify(); truncation tail is booked to trivial:n.
ArcBreakdown arc_contributions(const Instance& inst, double tau, const KernelSpec& spec,
                               const DissectionParams& params, double A, double mesh = 0,
                               const Exec& exec = {}, int theta3_index = 0);

// int over [-A, A] (restricted to frak v unless whole_line) of |f_theta|^{s2} |K|.
QuadratureResult minor_moment(real_ext theta, int s2, int k, double P, const KernelSpec& spec,
                              const DissectionParams& params, double A, double mesh = 0,
                              const Exec& exec = {}, bool whole_line = false);

// int_{-A}^{A} |f_theta|^{j(j+1)} K(alpha; zeta) d alpha
QuadratureResult hua_moment(real_ext theta, int j, int k, double P, double zeta, double A,
                            double mesh = 0, const Exec& exec = {});

// max(s + k(k-1)/2, 2s - k) - 1/4
double minor_moment_envelope(int s, int k);

struct SlopeFit {
  double exponent = 0;
  double intercept = 0;
  double residual = 0;  // RMS in log space
  std::vector<std::pair<double, double>> points;  // (log P, log value)
};

SlopeFit slope_estimate(std::span<const std::pair<double, double>> points);

}  // namespace waringlab
