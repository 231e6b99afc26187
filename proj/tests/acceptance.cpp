// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "waringlab/counting.hpp"
#include "waringlab/dissection.hpp"
#include "waringlab/expsum.hpp"
#include "waringlab/integrator.hpp"
#include "waringlab/kernels.hpp"
#include "waringlab/verify.hpp"

using namespace waringlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

template <class... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const real_ext kGolden = ShiftPreset::golden().value;
const Exec kExec{static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))};

std::vector<KernelParams> param_sets() {
  return {KernelParams::make(1.0, std::exp(10.0), TChoice::Identity), KernelParams::make(0.5, 1e4, TChoice::Identity),
          KernelParams::make(0.8, 1e6, TChoice::LogP), KernelParams::make(0.3, 50.0, TChoice::SqrtP),
          KernelParams::make(1.0, 400.0, TChoice::Fixed, 20.0)};
}

Outcome c1_transforms() {
  double worst_closed = 0, worst_sandwich = 0;
  int evals = 0;
  for (const auto& p : param_sets()) {
    for (KernelKind kind : {KernelKind::DH, KernelKind::K1, KernelKind::K2Plus, KernelKind::K2Minus}) {
      const auto spec = kind == KernelKind::DH ? KernelSpec::dh(p.eta) : KernelSpec::of(kind, p);
      for (int i = 0; i <= 10; ++i) {
        const double t = spec.support_radius() * (-1.25 + 0.25 * i);
        worst_closed = std::max(worst_closed, std::fabs(numeric_transform(spec, t, 400).value() - fourier_K(spec, t)));
        ++evals;
      }
    }
    for (KernelKind kind : {KernelKind::Plus, KernelKind::Minus}) {
      const auto spec = KernelSpec::of(kind, p);
      for (int i = 0; i <= 10; ++i) {
        const double t = (p.eta + 2 * p.delta) * (-1 + 0.2 * i);
        const double v = numeric_transform(spec, t, 400).value();
        const auto s = sandwich_bounds(p, t);
        const Interval b = kind == KernelKind::Plus ? s.plus : s.minus;
        worst_sandwich = std::max({worst_sandwich, b.lower - v, v - b.upper});
        ++evals;
      }
    }
  }
  return {worst_closed <= 1e-6 && worst_sandwich <= 1e-6,
          fmt("%d transforms; max closed-form error %.2e, max sandwich violation %.2e (tol 1e-6)", evals,
              worst_closed, std::max(0.0, worst_sandwich))};
}

Outcome c2_decomposition() {
  double worst = 0;
  for (const auto& p : param_sets()) {
    const auto k1 = KernelSpec::of(KernelKind::K1, p);
    for (auto [pm, k2] : {std::pair{KernelKind::Plus, KernelKind::K2Plus},
                          std::pair{KernelKind::Minus, KernelKind::K2Minus}}) {
      const auto kpm = KernelSpec::of(pm, p), kk2 = KernelSpec::of(k2, p);
      for (int i = 0; i < 10000; ++i) {
        const double a = -50.0 + 100.0 * (i + 0.5) / 10000.0;
        const double v = eval_kernel(kpm, a);
        const double lhs = v * v, rhs = eval_kernel(k1, a) * eval_kernel(kk2, a);
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(lhs, 1e-300));
      }
    }
  }
  return {worst <= 1e-12, fmt("10^4 points x 5 sets x {+,-}; max relative error %.2e (tol 1e-12)", worst)};
}

Outcome c3_count_identity() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  int bad_dh = 0, bad_sandwich = 0;
  double worst_dev = 0, worst_cert = 0;
  for (int i = 0; i < 20; ++i) {
    const int k = 2 + i % 2;
    const int s = 1 + (i / 2) % 3;
    // P <= 40 for k = 2, P <= 12 for k = 3 (grid cost grows like P^k).
    const double P = k == 2 ? 5 + 35 * u(rng) : 4 + 8 * u(rng);
    std::vector<real_ext> th;
    for (int j = 0; j < s; ++j) th.push_back(0.05 + 0.9 * u(rng));
    const double eta = 0.5 + 0.5 * u(rng);
    const Instance inst(k, th, eta);
    const double tau = std::pow(P, k);
    const double A = 400;
    const auto r = dh_integral(inst, tau, KernelSpec::dh(eta), A, 0, kExec);
    const double w = weighted_count(inst, tau).value;
    const double dev = std::fabs(r.value.real() - w);
    worst_dev = std::max(worst_dev, dev);
    worst_cert = std::max(worst_cert, r.error());
    if (dev > r.error() || dev > 1e-3) ++bad_dh;
    const auto kp = KernelParams::make(eta, P, TChoice::Identity);
    const auto rp = dh_integral(inst, tau, KernelSpec::of(KernelKind::Plus, kp), A, 0, kExec);
    const auto rm = dh_integral(inst, tau, KernelSpec::of(KernelKind::Minus, kp), A, 0, kExec);
    const double n = count_Nstar(inst, tau).value;
    if (rm.value.real() - rm.error() > n || n > rp.value.real() + rp.error()) ++bad_sandwich;
  }
  return {bad_dh == 0 && bad_sandwich == 0,
          fmt("20 instances; %d outside certified error or 1e-3 (max |dh-weighted| %.2e, max certificate %.2e); "
              "%d sandwich violations",
              bad_dh, worst_dev, worst_cert, bad_sandwich)};
}

Outcome c4_j_equivalence() {
  int mismatches = 0, cases = 0;
  const int triples[3][3] = {{2, 2, 12}, {2, 3, 8}, {3, 2, 8}};
  for (const auto& t : triples) {
    const std::int64_t j = count_J(t[0], t[1], t[2]);
    for (int i = 0; i < 10; ++i)
      for (double eta : {0.2, 0.6, 1.0}) {
        const real_ext th = 0.03L + 0.095L * i + (i % 3) * 0.0071L;
        mismatches += count_J_shifted(t[0], t[1], t[2], th, eta) != j;
        ++cases;
      }
  }
  int formula = 0;
  for (std::int64_t P = 1; P <= 50; ++P) formula += count_J(2, 2, P) != 2 * P * P - P;
  const bool at10 = count_J(2, 2, 10) == 190;
  return {mismatches == 0 && formula == 0 && at10,
          fmt("%d/%d shifted mismatches; %d violations of J_{2,2}(P) = 2P^2 - P for P <= 50; J_{2,2}(10) = %lld",
              mismatches, cases, formula, static_cast<long long>(count_J(2, 2, 10)))};
}

Outcome c5_mitm() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 1);
  int exact_bad = 0;
  double worst_rel = 0;
  for (int i = 0; i < 200; ++i) {
    const int k = 2 + i % 2;
    const int s = 2 + (i / 2) % 4;
    std::vector<real_ext> th;
    for (int j = 0; j < s; ++j) th.push_back(0.05 + 0.9 * u(rng));
    const Instance inst(k, th, 0.1 + 0.9 * u(rng));
    const double Pmax = k == 2 ? (s <= 3 ? 30.0 : 12.0) : (s <= 3 ? 12.0 : 7.0);
    const double tau = std::pow(3 + (Pmax - 3) * u(rng), k);
    exact_bad += count_mitm(inst, tau, false).value != count_Nstar(inst, tau).value;
    const double w = weighted_count(inst, tau).value;
    const double m = count_mitm(inst, tau, true).value;
    worst_rel = std::max(worst_rel, w == 0 ? std::fabs(m) : std::fabs(m - w) / w);
  }
  return {exact_bad == 0 && worst_rel <= 1e-9,
          fmt("200 instances; %d unweighted mismatches; max weighted relative error %.2e (tol 1e-9)", exact_bad,
              worst_rel)};
}

bool scan_in_v(double a, const DissectionParams& d) {
  for (std::int64_t q = 1; q <= static_cast<std::int64_t>(std::floor(d.Q)); ++q) {
    const long double v = static_cast<long double>(q) * a;
    if (std::fabs(v - std::nearbyint(v)) <= d.hl_radius()) return false;
  }
  return true;
}

Outcome c6_membership() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 3), jit(-2, 2);
  int disagree = 0, outside = 0;
  const DissectionParams sets[2] = {DissectionParams::make(1e4, 2, 0.5, 2.5), DissectionParams::make(1e5, 3)};
  for (const auto& d : sets) {
    for (int i = 0; i < 1000; ++i) {
      double a = u(rng);
      if (i % 2 == 0) {  // half the samples sit near a rational with q <= Q + 2
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::floor(d.Q) + 2));
        a = std::floor(a * static_cast<double>(q)) / static_cast<double>(q) +
            jit(rng) * d.hl_radius() / static_cast<double>(q);
      }
      const bool v = in_frak_v(a, d);
      outside += !v;
      disagree += v != scan_in_v(a, d);
    }
  }
  return {disagree == 0, fmt("(k,P,Q) = (2,1e4,%.0f), (3,1e5,%.2f); 2000 samples, %d in N, %d disagreements",
                             sets[0].Q, sets[1].Q, outside, disagree)};
}

Outcome c7_measure() {
  const auto d = DissectionParams::make(1e4, 2, 0.5, 2.5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(5, 6);
  const int n = 1000000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += !in_frak_v(u(rng), d);
  const double frac = static_cast<double>(hits) / n;
  const double bound = 2 * d.Q * d.Q * std::pow(d.P, -2.0);
  return {frac <= bound, fmt("Q=25, P=1e4: measure %.3e (%d/%d samples) vs bound 2Q^2P^-k = %.3e", frac, hits, n, bound)};
}

Outcome c8_minor_slope() {
  std::vector<std::pair<double, double>> pts;
  const auto spec = KernelSpec::dh(1.0);
  for (double P : {16.0, 32.0, 64.0, 128.0, 256.0, 512.0}) {
    const auto d = DissectionParams::make(P, 2, 0.5, 0.5);
    const auto r = minor_moment(kGolden, 6, 2, P, spec, d, 16, 0, kExec);
    pts.emplace_back(P, r.value.real());
  }
  const SlopeFit f = slope_estimate(pts);
  const double env = minor_moment_envelope(3, 2);
  return {f.exponent <= env + 0.15,
          fmt("k=2, s=3, golden, DH(1), A=16, Q=P^{1/4}/2: exponent %.4f (residual %.3f) vs envelope %.2f + 0.15",
              f.exponent, f.residual, env)};
}

Outcome c9_main_term() {
  const Instance inst(2, 6, kGolden, 1.0);
  double dev_prev = 1e300;
  bool ok = true;
  std::string detail;
  for (double tau : {1e4, 1e5}) {
    const double n = count_mitm(inst, tau, false, {}, Box::Unbounded).value;
    const double ratio = n / main_term(inst, tau);
    const double dev = std::fabs(ratio - 1);
    ok = ok && ratio >= 0.7 && ratio <= 1.3 && dev <= dev_prev;
    dev_prev = dev;
    detail += fmt("tau=%.0e N=%.0f ratio=%.5f; ", tau, n, ratio);
  }
  return {ok, detail + "need ratio in [0.7,1.3] and |ratio-1| non-increasing"};
}

// alpha (x - 1/2)^k with alpha = a/q, as exact rationals over q 2^k.
RationalCoeffs half_shift_coeffs(std::int64_t a, std::int64_t q, int k) {
  RationalCoeffs rc;
  rc.q = q << k;
  rc.a.resize(static_cast<std::size_t>(k));
  std::int64_t g = rc.q;
  for (int j = 1; j <= k; ++j) {
    std::int64_t c = 1;
    for (int i = 0; i < j; ++i) c = c * (k - i) / (i + 1);
    const std::int64_t num = a * c * (std::int64_t{1} << j) * ((k - j) % 2 ? -1 : 1);
    rc.a[static_cast<std::size_t>(j - 1)] = num;
    g = std::gcd(g, num);
  }
  rc.q /= g;
  for (auto& x : rc.a) x /= g;
  rc.d = rc.q;
  for (int j = 2; j <= k; ++j) rc.d = std::gcd(rc.d, rc.a[static_cast<std::size_t>(j - 1)]);
  return rc;
}

Outcome c10_major_arc() {
  int cases = 0, skipped = 0;
  double worst = 0;
  for (int q = 1; q <= 10; ++q)
    for (int a = 1; a < q || (q == 1 && a == 1); ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (int k : {2, 3}) {
        const auto rc = half_shift_coeffs(a % q, q, k);
        if (std::abs(weyl_sum(rc.q, rc.a)) < 1e-9) {
          ++skipped;  // main term vanishes identically
          continue;
        }
        const double alpha = static_cast<double>(a % q) / q;
        const cplx f = f_theta(alpha, 0.5L, 1000, k);
        const cplx m = major_approx(alpha, 0.5L, 1000, k, rc);
        worst = std::max(worst, std::abs(f - m) / std::abs(f));
        ++cases;
      }
    }
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> jit(-1, 1);
  int found = 0, d_bad = 0;
  int max_d = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + i % 2;
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 60);
    const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
    const double alpha = static_cast<double>(a) / static_cast<double>(q) + jit(rng) * std::pow(1000.0, -k) / 4;
    const auto rc = approx_coeffs(alpha, kGolden, 1000, k, 0.1);
    if (!rc) continue;
    ++found;
    max_d = std::max(max_d, static_cast<int>(rc->d));
    d_bad += rc->d > 2 * k * k;
  }
  return {cases >= 20 && worst <= 0.1 && d_bad == 0,
          fmt("theta=1/2, P=1000: %d cases with S != 0 (%d with S = 0 skipped), max relative error %.4f; "
              "approx_coeffs found %d/100, max d %d, %d with d > 2k^2",
              cases, skipped, worst, found, max_d, d_bad)};
}

Outcome c11_determinism() {
  const auto a = run_verify({1, false});
  const auto b = run_verify({8, false});
  const bool same = a.to_csv() == b.to_csv() && a.to_json() == b.to_json();
  int failed = 0;
  for (const auto& c : a.checks) failed += !c.pass;
  return {same && a.all_pass(),
          fmt("%zu invariant checks, %d failing; worker 1 vs 8 reports %s", a.checks.size(), failed,
              same ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"kernel transform suite", c1_transforms},
      {"decomposition identity", c2_decomposition},
      {"count identity and sandwich", c3_count_identity},
      {"J equivalence", c4_j_equivalence},
      {"MITM vs brute force", c5_mitm},
      {"v membership vs scan", c6_membership},
      {"measure bound (Monte-Carlo)", c7_measure},
      {"minor-moment slope", c8_minor_slope},
      {"main-term trend", c9_main_term},
      {"major-arc approximation", c10_major_arc},
      {"determinism", c11_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %2zu %-28s [%6.1fs] %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, sec,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
