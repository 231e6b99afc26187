#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "waringlab/core.hpp"

using namespace waringlab;

TEST_CASE("phi small cases") {
  CHECK(phi(std::vector<std::int64_t>{1}, Instance(2, 1, 0.5L, 1.0)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(phi(std::vector<std::int64_t>{2, 2}, Instance(3, 2, 0.5L, 1.0)) == doctest::Approx(6.75).epsilon(1e-15));
}

TEST_CASE("phi against 50-digit oracle") {
  const Instance inst(4, {ShiftPreset::sqrt2().value, ShiftPreset::golden().value, ShiftPreset::e2().value}, 1.0);
  const double want = 12878.990269287955331;
  CHECK(std::fabs(phi(std::vector<std::int64_t>{3, 7, 11}, inst) - want) / want < 1e-12);
}

TEST_CASE("sigma") {
  CHECK(sigma(1, 1, 2, std::vector<std::int64_t>{5, 5}, 0.5L) == 0);
  CHECK(sigma(2, 2, 3, std::vector<std::int64_t>{1, 4, 2, 3}, 0.5L) == 4);
  CHECK(sigma(1, 2, 2, std::vector<std::int64_t>{3, 2}, 0.5L) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(sigma(2, 1, 2, std::vector<std::int64_t>{1, 2, 3}, 0.5L), Error);
  CHECK_THROWS_AS(sigma(1, 3, 2, std::vector<std::int64_t>{1, 2}, 0.5L), Error);
}

TEST_CASE("thresholds") {
  CHECK(s0(4).value() == 18.75);
  CHECK(s0(2).value() == 5.25);
  CHECK(s0(10).value() == 107.25);
  CHECK(s1(10, 8) == 107);
  CHECK(s1(4, 3) == 20);
  CHECK(s1(2, 1) == 7);
  CHECK(j0(10) == 8);
  CHECK(j0(2) == 1);
  CHECK(j0(4) == 3);
  for (int k = 2; k <= 60; ++k) CHECK(j0(k) < k);
  CHECK(s1(10, j0(10)) < s0(10).value());
  for (int k = 12; k <= 40; ++k) CHECK(static_cast<double>(s1(k, j0(k))) < s0(k).value());
  CHECK_THROWS_AS(s0(1), Error);
  CHECK_THROWS_AS(s1(4, 4), Error);
}

TEST_CASE("gamma against 50-digit oracle") {
  CHECK(std::fabs(gamma_fn(1.0 / 3) / 2.6789385347077476337 - 1) < 1e-14);
  CHECK(std::fabs(gamma_fn(7.5) / 1871.2543057977883465 - 1) < 1e-14);
  CHECK(std::fabs(gamma_fn(23.25) / 2.4514442546722481475e+21 - 1) < 1e-14);
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("main term") {
  const double pi3 = std::pow(std::numbers::pi, 3);
  CHECK(std::fabs(main_term(2, 6, 1.0, 1e4) / (pi3 / 64 * 1e8) - 1) < 1e-13);
  CHECK(main_term(1, 1, 1.0, 12345.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::fabs(main_term(3, 11, 0.5, 1e6) / 717585618199209.78098 - 1) < 1e-12);
  CHECK(main_term(Instance(2, 6, ShiftPreset::golden().value, 1.0), 1e4) == main_term(2, 6, 1.0, 1e4));
  CHECK_THROWS_AS(main_term(2, 6, 1.0, 0.0), Error);
}

TEST_CASE("presets and instance validation") {
  CHECK(ShiftPreset::parse("golden").value == ShiftPreset::golden().value);
  CHECK(static_cast<double>(ShiftPreset::parse("0.25").value) == 0.25);
  CHECK(ShiftPreset::parse("sqrt2").label() == "sqrt2");
  CHECK_THROWS_AS(ShiftPreset::parse("pi"), Error);
  CHECK(std::fabs(static_cast<double>(ShiftPreset::e2().value) - (std::numbers::e - 2)) < 2e-16);
  CHECK_THROWS_AS(Instance(2, 1, 0.5L, 0.0), Error);
  CHECK_THROWS_AS(Instance(2, 1, 1.5L, 0.5), Error);
  CHECK_THROWS_AS(Instance(0, 1, 0.5L, 0.5), Error);
}

TEST_CASE("floor_root and query") {
  CHECK(floor_root(1e4, 2) == 100);
  CHECK(floor_root(9999.999, 2) == 99);
  CHECK(floor_root(1000, 3) == 10);
  CHECK(floor_root(999, 3) == 9);
  const Query q = Query::make(90.25, 2);
  CHECK(q.P == 9.5);
  CHECK(q.P_floor == 9);
}

TEST_CASE("compensated sum") {
  CompensatedSum<double> s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1000.0);
}
