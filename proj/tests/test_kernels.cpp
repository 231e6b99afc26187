#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "waringlab/kernels.hpp"

using namespace waringlab;

namespace {
const double kE10 = std::exp(10.0);
}

TEST_CASE("parameters") {
  const auto p = KernelParams::make(1.0, kE10, TChoice::Identity);
  CHECK(p.L == doctest::Approx(10).epsilon(1e-14));
  CHECK(p.delta == doctest::Approx(0.1).epsilon(1e-14));
  const auto d = KernelParams::make(0.5, 1e6);  // T = log P by default
  CHECK(d.T == doctest::Approx(std::log(1e6)).epsilon(1e-15));
  CHECK(d.L == doctest::Approx(std::log(std::log(1e6))).epsilon(1e-15));
  CHECK(KernelParams::make(1.0, 400, TChoice::SqrtP).T == doctest::Approx(20));
  CHECK(KernelParams::make(1.0, 400, TChoice::Fixed, 7.5).T == 7.5);
  CHECK_THROWS_AS(KernelParams::make(1.0, 2.5), Error);  // L undefined below e
  CHECK_THROWS_AS(KernelParams::make(0.0, 100), Error);
  CHECK_THROWS_AS(KernelParams::make(1.0, 100, TChoice::Fixed, 1.0), Error);
  CHECK(parse_tchoice("sqrtP") == TChoice::SqrtP);
  CHECK(parse_tchoice("identity") == TChoice::Identity);
  CHECK_THROWS_AS(parse_tchoice("cube"), Error);
  CHECK(parse_kernel_kind("k2minus") == KernelKind::K2Minus);
  CHECK(kernel_kind_name(KernelKind::Plus) == "plus");
  CHECK_THROWS_AS(parse_kernel_kind("gauss"), Error);
}

TEST_CASE("kernel values") {
  CHECK(eval_kernel(KernelSpec::dh(0.7), 0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(std::fabs(eval_kernel(KernelSpec::dh(0.5), 2)) < 1e-30);
  const auto p = KernelParams::make(1.0, kE10, TChoice::Identity);
  const double v = eval_kernel(KernelSpec::of(KernelKind::Plus, p), 1.0);
  CHECK(std::fabs(v - 0.09675312092750789822) < 1e-14);
  // small-argument branch continuity
  const auto dh = KernelSpec::dh(1.0);
  CHECK(eval_kernel(dh, 3.1e-5) == doctest::Approx(eval_kernel(dh, 3.2e-5)).epsilon(1e-8));
}

TEST_CASE("closed-form transforms") {
  const auto p = KernelParams::make(0.8, 1e5, TChoice::Identity);
  CHECK(fourier_K(KernelSpec::dh(0.8), 0) == 1);
  CHECK(fourier_K(KernelSpec::of(KernelKind::K1, p), 0) == doctest::Approx(1 / p.delta).epsilon(1e-15));
  CHECK(fourier_K(KernelSpec::of(KernelKind::K2Plus, p), 2 * p.eta + p.delta) == 0);
  CHECK_THROWS_AS(fourier_K(KernelSpec::of(KernelKind::Plus, p), 0), Error);
}

TEST_CASE("numeric transforms reproduce closed forms") {
  const auto p = KernelParams::make(1.0, kE10, TChoice::Identity);
  for (KernelKind kind : {KernelKind::DH, KernelKind::K1, KernelKind::K2Plus, KernelKind::K2Minus}) {
    const auto spec = kind == KernelKind::DH ? KernelSpec::dh(1.0) : KernelSpec::of(kind, p);
    for (double t : {0.0, 0.05, 0.4, 1.3, 2.5}) {
      const auto e = numeric_transform(spec, t, 300);
      CHECK(std::fabs(e.value() - fourier_K(spec, t)) < 1e-6);
      CHECK(std::fabs(e.tail) <= e.tail_bound);
    }
  }
}

TEST_CASE("sandwich") {
  const auto p = KernelParams::make(1.0, kE10, TChoice::Identity);
  auto s = sandwich_bounds(p, 0);
  CHECK(s.minus.lower == 1);
  CHECK(s.minus.upper == 1);
  s = sandwich_bounds(p, p.eta - p.delta / 2);
  CHECK(s.minus.lower == 0);
  CHECK(s.minus.upper == 1);
  s = sandwich_bounds(p, p.eta + 2 * p.delta);
  CHECK(s.plus.lower == 0);
  CHECK(s.plus.upper == 0);
  for (KernelKind kind : {KernelKind::Plus, KernelKind::Minus}) {
    const auto spec = KernelSpec::of(kind, p);
    for (double t : {0.0, 0.5, 0.85, 0.95, 1.05, 1.2}) {
      const double v = numeric_transform(spec, t, 300).value();
      const auto b = kind == KernelKind::Plus ? sandwich_bounds(p, t).plus : sandwich_bounds(p, t).minus;
      CHECK(v >= b.lower - 1e-6);
      CHECK(v <= b.upper + 1e-6);
    }
  }
}

TEST_CASE("decay bound") {
  const auto p = KernelParams::make(1.0, kE10, TChoice::Identity);
  CHECK(decay_bound(p, 0) == 1);
  CHECK(decay_bound(p, 1e-3) == 1);
  CHECK(decay_bound(p, std::sqrt(10.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(decay_bound(p, 100) == doctest::Approx(1e-3).epsilon(1e-13));
}

TEST_CASE("decomposition identity") {
  const auto p = KernelParams::make(0.6, 1e4, TChoice::Identity);
  const auto k1 = KernelSpec::of(KernelKind::K1, p);
  for (auto [pm, k2] : {std::pair{KernelKind::Plus, KernelKind::K2Plus}, std::pair{KernelKind::Minus, KernelKind::K2Minus}}) {
    for (double a = -20; a <= 20; a += 0.0137) {
      const double v = eval_kernel(KernelSpec::of(pm, p), a);
      const double rhs = eval_kernel(k1, a) * eval_kernel(KernelSpec::of(k2, p), a);
      CHECK(std::fabs(v * v - rhs) <= 1e-12 * std::max(v * v, 1e-300));
    }
  }
}

TEST_CASE("tail bounds dominate sampled kernel mass") {
  const auto p = KernelParams::make(1.0, 1e4, TChoice::Identity);
  for (KernelKind kind : {KernelKind::DH, KernelKind::Plus, KernelKind::Minus, KernelKind::K1, KernelKind::K2Plus}) {
    const auto spec = kind == KernelKind::DH ? KernelSpec::dh(1.0) : KernelSpec::of(kind, p);
    const double A = 20, h = 0.01;
    double mass = 0;
    for (long n = 2001; n < 4000000; ++n) mass += 2 * h * std::fabs(eval_kernel(spec, n * h));
    CHECK(mass <= spec.sampled_tail_bound(A, h));
    for (double a : {0.3, 2.0, 17.0}) CHECK(std::fabs(eval_kernel(spec, a)) <= spec.decay_constant() / (a * a) + 1e-15);
    CHECK(std::fabs(eval_kernel(spec, 0)) <= spec.peak() + 1e-15);
  }
}
