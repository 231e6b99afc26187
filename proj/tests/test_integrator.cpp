#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "waringlab/counting.hpp"
#include "waringlab/integrator.hpp"

using namespace waringlab;

namespace {
const real_ext kGolden = ShiftPreset::golden().value;
}

TEST_CASE("DH integral recovers a single weighted solution") {
  // (8.5)^2 + (0.5)^2 = 72.5 lies inside the box.
  const Instance inst(2, 2, 0.5L, 0.5);
  const double tau = 72.5;
  REQUIRE(weighted_count(inst, tau).value == doctest::Approx(2.0));  // (9,1) and (1,9)
  const auto r = dh_integral(inst, tau, KernelSpec::dh(0.5), 2000);
  CHECK(std::fabs(r.value.real() - 2.0) <= r.error());
  CHECK(std::fabs(r.value.real() - 2.0) < 1e-3);
  CHECK(r.value.imag() == 0);
}

TEST_CASE("DH integral against the s=3 enumeration oracle") {
  const Instance inst(2, {0.3L, 0.5L, 0.7L}, 1.0);
  const auto r = dh_integral(inst, 100, KernelSpec::dh(1.0), 1000);
  const double w = weighted_count(inst, 100).value;
  CHECK(w == doctest::Approx(7.83).epsilon(1e-12));
  CHECK(std::fabs(r.value.real() - w) <= r.error());
  CHECK(std::fabs(r.value.real() - w) < 1e-6);
}

TEST_CASE("sandwich brackets the box count") {
  const Instance inst(3, {0.25L, kGolden}, 0.9);
  const double tau = 1500;
  const double P = Query::make(tau, 3).P;
  const auto kp = KernelParams::make(0.9, P, TChoice::Identity);
  const auto rp = dh_integral(inst, tau, KernelSpec::of(KernelKind::Plus, kp), 1000);
  const auto rm = dh_integral(inst, tau, KernelSpec::of(KernelKind::Minus, kp), 1000);
  const double n = count_Nstar(inst, tau).value;
  CHECK(rm.value.real() - rm.error() <= n);
  CHECK(n <= rp.value.real() + rp.error());
}

TEST_CASE("mesh checks") {
  const Instance inst(2, 2, 0.5L, 0.5);
  const double lim = dh_mesh_limit(inst, 72.5, KernelSpec::dh(0.5));
  CHECK(lim > 0);
  try {
    dh_integral(inst, 72.5, KernelSpec::dh(0.5), 50, 3 * lim);
    FAIL("expected MeshTooCoarse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MeshTooCoarse);
  }
  const auto fine = dh_integral(inst, 72.5, KernelSpec::dh(0.5), 50, lim / 2);
  const auto coarse = dh_integral(inst, 72.5, KernelSpec::dh(0.5), 50);
  CHECK(std::fabs(fine.value.real() - coarse.value.real()) <= fine.error() + coarse.error());
  CHECK_THROWS_AS(dh_integral(inst, 72.5, KernelSpec::dh(0.5), 0.5), Error);
}

TEST_CASE("worker count does not change results") {
  const Instance inst(2, {0.3L, 0.5L, 0.7L}, 1.0);
  const auto a = dh_integral(inst, 100, KernelSpec::dh(1.0), 200, 0, Exec{1});
  const auto b = dh_integral(inst, 100, KernelSpec::dh(1.0), 200, 0, Exec{8});
  CHECK(a.value == b.value);
  CHECK(a.disc_error == b.disc_error);
}

TEST_CASE("arc regrouping") {
  const Instance inst(2, 4, kGolden, 1.0);
  const auto d = DissectionParams::make(20, 2, 0.5, 1.0, TChoice::Identity);
  const auto br = arc_contributions(inst, 400, KernelSpec::dh(1.0), d, 25);
  double sum = 0;
  for (const auto& p : br.parts) sum += p.value.real();
  CHECK(std::fabs(sum - br.total.value.real()) <= 1e-9 * std::fabs(br.total.value.real()));
  const auto whole = dh_integral(inst, 400, KernelSpec::dh(1.0), 25);
  CHECK(br.total.value == whole.value);
  CHECK(br.parts[6].tail_bound == whole.tail_bound);
  CHECK_THROWS_AS(arc_contributions(inst, 400, KernelSpec::dh(1.0), d, 10), Error);  // A < T
}

TEST_CASE("minor moment") {
  CHECK_THROWS_AS(DissectionParams::make(64, 2), Error);  // Q < 1 at the default scale
  const auto d = DissectionParams::make(64, 2, 0.5, 0.5);
  const auto spec = KernelSpec::dh(1.0);
  const auto v = minor_moment(kGolden, 6, 2, 64, spec, d, 50);
  const auto full = minor_moment(kGolden, 6, 2, 64, spec, d, 50, 0, {}, true);
  CHECK(v.value.real() > 0);
  CHECK(v.value.real() <= full.value.real() + v.disc_error + full.disc_error);
  CHECK_THROWS_AS(minor_moment(kGolden, 5, 2, 64, spec, d, 50), Error);
  CHECK(minor_moment_envelope(3, 2) == 3.75);
}

TEST_CASE("hua moment j=1 equals the weighted pair count") {
  // Only the diagonal contributes: |(x-1/2)^2 - (y-1/2)^2| >= 2 off the diagonal.
  const auto r = hua_moment(0.5L, 1, 2, 32, 1.0, 8000);
  CHECK(std::fabs(r.value.real() - 32.0) < 1e-3);
  CHECK(std::fabs(r.value.real() - 32.0) <= r.error());
  CHECK_THROWS_AS(hua_moment(0.5L, 0, 2, 32, 1.0, 100), Error);
}

TEST_CASE("slope fits") {
  std::vector<std::pair<double, double>> pts;
  for (double P : {2.0, 4.0, 8.0, 16.0}) pts.emplace_back(P, P * P * P);
  auto f = slope_estimate(pts);
  CHECK(std::fabs(f.exponent - 3.0) < 1e-12);
  pts.clear();
  for (double P : {10.0, 20.0, 40.0, 80.0, 160.0}) pts.emplace_back(P, 5 * std::pow(P, 2.5));
  f = slope_estimate(pts);
  CHECK(std::fabs(f.exponent - 2.5) < 1e-12);
  CHECK(std::fabs(f.intercept - std::log(5.0)) < 1e-10);
  pts.clear();
  const double noise[6] = {1.01, 0.99, 1.0, 1.01, 0.99, 1.005};
  for (int i = 0; i < 6; ++i) {
    const double P = 16.0 * std::pow(2.0, i);
    pts.emplace_back(P, 3 * std::pow(P, 1.7) * noise[i]);
  }
  f = slope_estimate(pts);
  CHECK(std::fabs(f.exponent - 1.7) < 0.05);
  CHECK(f.residual > 0);
  pts.resize(3);
  CHECK_THROWS_AS(slope_estimate(pts), Error);
}
