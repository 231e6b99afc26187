#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace waringlab {

// Failure categories surfaced through the C API as status codes.
enum class ErrorKind {
  InvalidArgument,
  BudgetExceeded,
  MeshTooCoarse,
  NotConverged,
  HypothesisViolated,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);
inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

// Extended precision scalar used for shifts and phases (x87 80-bit on x86-64).
using real_ext = long double;

enum class ShiftPresetName { Sqrt2, Golden, E2, Custom };

struct ShiftPreset {
  ShiftPresetName name = ShiftPresetName::Custom;
  real_ext value = 0.5L;

  static ShiftPreset sqrt2();   // sqrt(2) - 1
  static ShiftPreset golden();  // (sqrt(5) - 1) / 2
  static ShiftPreset e2();      // e - 2
  static ShiftPreset custom(real_ext v);

  // Accepts "sqrt2", "golden", "e2" or a decimal literal in (0,1).
  static ShiftPreset parse(std::string_view text);
  std::string label() const;
};

// One shifted Waring inequality |sum (x_i - theta_i)^k - tau| < eta.
class Instance {
 public:
  Instance(int k, std::vector<real_ext> theta, double eta);
  Instance(int k, int s, real_ext theta, double eta);

  int k() const noexcept { return k_; }
  int s() const noexcept { return static_cast<int>(theta_.size()); }
  double eta() const noexcept { return eta_; }
  std::span<const real_ext> theta() const noexcept { return theta_; }
  real_ext theta(int i) const { return theta_.at(static_cast<std::size_t>(i)); }

 private:
  int k_;
  std::vector<real_ext> theta_;
  double eta_;
};

// tau together with its k-th root P and the integer box bound floor(P).
struct Query {
  double tau;
  double P;
  std::int64_t P_floor;

  static Query make(double tau, int k);
};

// Largest integer n >= 0 with n^k <= x; exact even when pow() rounds down.
std::int64_t floor_root(double x, int k);

// (x - theta)^k in extended precision.
real_ext shifted_power(std::int64_t x, real_ext theta, int k);

// sum_i (x_i - theta_i)^k, compensated.
double phi(std::span<const std::int64_t> x, const Instance& inst);

// sigma_{s,j}: integer power-sum difference for j < k, shifted k-th power difference for j == k.
double sigma(int s, int j, int k, std::span<const std::int64_t> x, real_ext theta);

// s0(k) = k^2 + (3k - 1)/4 held exactly as a count of quarters.
struct Quarters {
  std::int64_t numerator;  // value = numerator / 4
  double value() const noexcept { return static_cast<double>(numerator) / 4.0; }
  bool le(std::int64_t s) const noexcept { return numerator <= 4 * s; }  // s0 <= s
};
Quarters s0(int k);
std::int64_t s1(int k, int j);
int j0(int k);

// Gamma via Lanczos (g = 7, 9 terms) evaluated in extended precision;
// relative error below 1e-14 for 0 < x <= 40.
double gamma_fn(double x);

double main_term(int k, int s, double eta, double tau);
double main_term(const Instance& inst, double tau);

// Neumaier compensated accumulator.
template <class T>
struct CompensatedSum {
  T sum{};
  T comp{};
  void add(T v) {
    T t = sum + v;
    if ((sum < 0 ? -sum : sum) >= (v < 0 ? -v : v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  T value() const { return sum + comp; }
};

}  // namespace waringlab
