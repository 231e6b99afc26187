#pragma once

#include <cstdint>

#include "waringlab/core.hpp"

namespace waringlab {

enum class CountMethod { Brute, Mitm };

struct CountResult {
  double value = 0;                  // exact integer for unweighted counts
  std::int64_t tuples_examined = 0;  // prefixes visited plus leaf candidates tested
  CountMethod method = CountMethod::Brute;
};

struct CountBudget {
  std::int64_t max_tuples = 100'000'000;
  std::int64_t max_table_bytes = std::int64_t{2} << 30;
};

// Solutions of |sum (x_i - theta_i)^k - tau| < eta in positive integers.
CountResult count_N(const Instance& inst, double tau, const CountBudget& budget = {});

// As count_N restricted to the box 1 <= x_i <= tau^{1/k}.
CountResult count_Nstar(const Instance& inst, double tau, const CountBudget& budget = {});

// sum over the box of max{0, 1 - |phi(x) - tau| / eta}.
CountResult weighted_count(const Instance& inst, double tau, const CountBudget& budget = {});

enum class Box { Nstar, Unbounded };

// Meet-in-the-middle: sorted half-sum tables and window counting. Box::Nstar
// reproduces count_Nstar / weighted_count, Box::Unbounded reproduces count_N.
CountResult count_mitm(const Instance& inst, double tau, bool weighted,
                       const CountBudget& budget = {}, Box box = Box::Nstar);

// J_{s,k}(P): 2s-tuples in [1,P]^{2s} with equal power sums of degrees 1..k.
std::int64_t count_J(int s, int k, std::int64_t P, const CountBudget& budget = {});

// 2s-tuples with equal power sums of degrees 1..k-1 and
// |sum (x_i - theta)^k - sum (y_i - theta)^k| < eta.
std::int64_t count_J_shifted(int s, int k, std::int64_t P, real_ext theta, double eta,
                             const CountBudget& budget = {});

}  // namespace waringlab
