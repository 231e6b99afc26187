#include "waringlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "waringlab/counting.hpp"
#include "waringlab/dissection.hpp"
#include "waringlab/expsum.hpp"
#include "waringlab/integrator.hpp"
#include "waringlab/kernels.hpp"

namespace waringlab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : opts(o) {}

  // fn returns the measured deviation; pass iff measured <= tol.
  void check(const std::string& name, double tol, const std::function<double()>& fn,
             const std::string& detail = "") {
    CheckRecord r;
    r.name = name;
    r.tolerance = tol;
    r.detail = detail;
    try {
      r.measured = fn();
      r.pass = std::isfinite(r.measured) && r.measured <= tol;
    } catch (const std::exception& e) {
      r.pass = false;
      r.measured = std::numeric_limits<double>::infinity();
      r.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(r));
  }

  const VerifyOptions& opts;
  VerifyReport report;
};

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

void core_checks(Suite& s) {
  s.check("core.s0_exceeds_s1", 0, [] {
    double worst = 0;
    std::vector<int> ks{10};
    for (int k = 12; k <= 40; ++k) ks.push_back(k);
    for (int k : ks) {
      const double gap = s0(k).value() - static_cast<double>(s1(k, j0(k)));
      if (gap <= 0) worst = std::max(worst, 1.0 - gap);
    }
    return worst;
  }, "k = 10 and 12..40");

  s.check("core.sigma_vanishes_on_permutations", 0, [] {
    double worst = 0;
    for (int sz = 1; sz <= 3; ++sz) {
      std::vector<std::int64_t> x(static_cast<std::size_t>(sz), 1);
      for (;;) {
        std::vector<std::int64_t> perm = x;
        std::sort(perm.begin(), perm.end());
        do {
          std::vector<std::int64_t> full = x;
          full.insert(full.end(), perm.begin(), perm.end());
          for (int j = 1; j <= 3; ++j)
            worst = std::max(worst, std::fabs(sigma(sz, j, 3, full, ShiftPreset::golden().value)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        int i = sz - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == 6) x[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
      }
    }
    return worst;
  }, "s <= 3, entries <= 6, k = 3");

  s.check("core.main_term_homogeneity", 1e-12, [] {
    double worst = 0;
    for (int k : {2, 3, 5})
      for (int sv : {1, 4, 11})
        for (double lam : {2.0, 10.0}) {
          const double a = main_term(k, sv, 0.5, 1234.5 * lam);
          const double b = main_term(k, sv, 0.5, 1234.5) * std::pow(lam, static_cast<double>(sv) / k - 1);
          worst = std::max(worst, rel(a, b));
        }
    return worst;
  });

  s.check("core.phi_order_independence", 1e-13, [] {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> xd(1, 5000);
    std::uniform_real_distribution<double> td(0.01, 0.99);
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const int sz = 2 + trial % 9;
      std::vector<real_ext> th(static_cast<std::size_t>(sz));
      std::vector<std::int64_t> x(static_cast<std::size_t>(sz));
      for (int i = 0; i < sz; ++i) {
        th[static_cast<std::size_t>(i)] = td(rng);
        x[static_cast<std::size_t>(i)] = xd(rng);
      }
      const Instance a(3, th, 1.0);
      std::reverse(th.begin(), th.end());
      std::reverse(x.begin(), x.end());
      const Instance b(3, th, 1.0);
      const double fa = phi(std::vector<std::int64_t>(x.rbegin(), x.rend()), a);
      const double fb = phi(x, b);
      worst = std::max(worst, rel(fa, fb));
    }
    return worst;
  });
}

void counting_checks(Suite& s) {
  s.check("counting.order_weighted_nstar_n", 0, [] {
    double worst = 0;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> td(0.05, 0.95);
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 2 + trial % 2, sz = 1 + trial % 3;
      std::vector<real_ext> th;
      for (int i = 0; i < sz; ++i) th.push_back(td(rng));
      const Instance inst(k, th, 0.25 + 0.75 * td(rng));
      const double tau = std::pow(6.0 + 10 * td(rng), k);
      const double w = weighted_count(inst, tau).value;
      const double ns = count_Nstar(inst, tau).value;
      const double n = count_N(inst, tau).value;
      worst = std::max({worst, w - ns, ns - n});
    }
    return worst;
  });

  s.check("counting.mitm_matches_brute", 1e-9, [] {
    double worst = 0;
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> td(0.05, 0.95);
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 2 + trial % 2, sz = 2 + trial % 3;
      std::vector<real_ext> th;
      for (int i = 0; i < sz; ++i) th.push_back(td(rng));
      const Instance inst(k, th, 0.2 + 0.8 * td(rng));
      const double tau = std::pow(4.0 + 11 * td(rng), k);
      worst = std::max(worst, std::fabs(count_mitm(inst, tau, false).value - count_Nstar(inst, tau).value));
      worst = std::max(worst, rel(count_mitm(inst, tau, true).value, weighted_count(inst, tau).value));
    }
    return worst;
  });

  s.check("counting.J_shifted_equals_J", 0, [] {
    double worst = 0;
    const int triples[3][3] = {{2, 2, 12}, {2, 3, 8}, {3, 2, 8}};
    for (const auto& t : triples) {
      const std::int64_t j = count_J(t[0], t[1], t[2]);
      for (int i = 1; i <= 10; ++i)
        for (double eta : {0.25, 0.5, 1.0}) {
          const real_ext th = (i - 0.5L) / 10.0L + 0.0123L;
          worst = std::max(worst, std::fabs(static_cast<double>(count_J_shifted(t[0], t[1], t[2], th, eta) - j)));
        }
    }
    return worst;
  }, "(s,k,P) in {(2,2,12),(2,3,8),(3,2,8)}, 10 shifts x 3 tolerances");

  s.check("counting.translation_invariance", 1e-9, [] {
    // Equal power sums of degrees < k make the shifted k-th power difference translation invariant.
    double worst = 0;
    const real_ext th = ShiftPreset::sqrt2().value;
    std::vector<std::int64_t> x(6, 1);
    int nontrivial = 0;
    for (;;) {
      if (sigma(3, 1, 3, x, th) == 0 && sigma(3, 2, 3, x, th) == 0) {
        const double base = sigma(3, 3, 3, x, th);
        if (std::fabs(base) > 0.5) ++nontrivial;
        for (std::int64_t y = 1; y <= 3; ++y) {
          std::vector<std::int64_t> xy = x;
          for (auto& v : xy) v += y;
          worst = std::max(worst, std::fabs(sigma(3, 3, 3, xy, th) - base));
        }
      }
      int i = 5;
      while (i >= 0 && x[static_cast<std::size_t>(i)] == 8) x[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++x[static_cast<std::size_t>(i)];
    }
    return nontrivial > 0 ? worst : 1.0;
  }, "s=3, k=3, entries in [1,8], y in {1,2,3}");

  s.check("counting.J_monotone_and_diagonal", 0, [] {
    double worst = 0;
    for (int sv : {1, 2, 3})
      for (int k : {2, 3}) {
        std::int64_t prev = 0;
        for (std::int64_t P = 1; P <= (sv == 3 ? 7 : 12); ++P) {
          const std::int64_t j = count_J(sv, k, P);
          const auto diag = static_cast<std::int64_t>(std::pow(static_cast<double>(P), sv));
          worst = std::max({worst, static_cast<double>(prev - j), static_cast<double>(diag - j)});
          prev = j;
        }
      }
    return worst;
  });
}

void expsum_checks(Suite& s) {
  s.check("expsum.conjugate_symmetry", 1e-13, [] {
    double worst = 0;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ad(-3, 3), td(0.01, 0.99);
    for (int i = 0; i < 40; ++i) {
      const double a = ad(rng);
      const real_ext th = td(rng);
      const int k = 2 + i % 3;
      worst = std::max(worst, std::abs(f_theta(-a, th, 60, k) - std::conj(f_theta(a, th, 60, k))));
    }
    return worst;
  });

  s.check("expsum.modulus_bound", 0, [] {
    double worst = 0;
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> ad(-3, 3), td(0.01, 0.99), pd(1, 200);
    for (int i = 0; i < 100; ++i) {
      const double P = pd(rng);
      const double m = std::abs(f_theta(ad(rng), td(rng), P, 2 + i % 3));
      worst = std::max(worst, m - std::floor(P) - 1e-9 * P);
    }
    worst = std::max(worst, std::fabs(std::abs(f_theta(0, 0.3L, 77.7, 3)) - 77));
    return worst;
  });

  s.check("expsum.weyl_sum_periodic", 0, [] {
    double worst = 0;
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 30);
      std::vector<std::int64_t> a(3), b(3);
      for (int j = 0; j < 3; ++j) {
        a[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rng() % 100) - 50;
        b[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] + q * (static_cast<std::int64_t>(rng() % 7) - 3);
      }
      worst = std::max(worst, std::abs(weyl_sum(q, a) - weyl_sum(q, b)));
    }
    return worst;
  });

  s.check("expsum.osc_integral_modulus", 0, [] {
    double worst = 0;
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> bd(-1e-3, 1e-3);
    for (int i = 0; i < 20; ++i) {
      const std::vector<double> beta{bd(rng), bd(rng) * 1e-2, bd(rng) * 1e-4};
      const OscResult r = osc_integral(beta, 100);
      worst = std::max(worst, std::abs(r.value) - 100 - r.error);
    }
    return worst;
  });

  s.check("expsum.expand_roundtrip", 1e-10, [] {
    double worst = 0;
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> ad(-5, 5), td(0.01, 0.99);
    for (int i = 0; i < 30; ++i) {
      const real_ext a = ad(rng), th = td(rng);
      const int k = 1 + i % 6;
      const CoeffVector c = expand_shift_coeffs(a, th, k);
      for (std::int64_t x = 1; x <= 50; ++x) {
        real_ext acc = 0, xp = 1;
        for (int j = 0; j <= k; ++j) {
          acc += c.alpha[static_cast<std::size_t>(j)] * xp;
          xp *= static_cast<real_ext>(x);
        }
        const real_ext want = a * shifted_power(x, th, k);
        worst = std::max(worst, static_cast<double>(std::fabs(acc - want) / std::max(std::fabs(want), 1e-300L)));
      }
    }
    return worst;
  });
}

std::vector<KernelParams> kernel_param_sets() {
  return {KernelParams::make(1.0, std::exp(10.0), TChoice::Identity),
          KernelParams::make(0.5, 1e4, TChoice::Identity),
          KernelParams::make(0.8, 1e6, TChoice::LogP),
          KernelParams::make(0.3, 50.0, TChoice::SqrtP),
          KernelParams::make(1.0, 400.0, TChoice::Fixed, 20.0)};
}

void kernel_checks(Suite& s) {
  const bool canary = s.opts.inject_k1_sign_error;
  s.check("kernels.decomposition_identity", 1e-12, [canary] {
    double worst = 0;
    for (const auto& p : kernel_param_sets()) {
      const auto k1 = KernelSpec::of(KernelKind::K1, p);
      for (auto [pm, k2kind] : {std::pair{KernelKind::Plus, KernelKind::K2Plus},
                                std::pair{KernelKind::Minus, KernelKind::K2Minus}}) {
        const auto kpm = KernelSpec::of(pm, p);
        const auto k2 = KernelSpec::of(k2kind, p);
        for (int i = 0; i < 10000; ++i) {
          const double a = -50.0 + 100.0 * (i + 0.5) / 10000.0;
          const double v = eval_kernel(kpm, a);
          const double k1v = canary ? -eval_kernel(k1, a) : eval_kernel(k1, a);
          const double lhs = v * v, rhs = k1v * eval_kernel(k2, a);
          const double scale = std::max(lhs, 1e-300);
          worst = std::max(worst, std::fabs(lhs - rhs) / scale);
        }
      }
    }
    return worst;
  }, canary ? "K1 sign flipped (mutation canary)" : "10^4-point grid on [-50,50], 5 parameter sets");

  s.check("kernels.scaling_identities", 1e-12, [] {
    double worst = 0;
    for (const auto& p : kernel_param_sets()) {
      const auto k1 = KernelSpec::of(KernelKind::K1, p);
      const auto k2p = KernelSpec::of(KernelKind::K2Plus, p);
      const auto k2m = KernelSpec::of(KernelKind::K2Minus, p);
      const double wp = 2 * p.eta + p.delta, wm = 2 * p.eta - p.delta;
      for (int i = 0; i < 10000; ++i) {
        const double a = -50.0 + 100.0 * (i + 0.5) / 10000.0;
        auto chk = [&](double got, double want) {
          worst = std::max(worst, std::fabs(got - want) / std::max(std::fabs(want), 1e-300));
        };
        if (p.delta <= 1) chk(eval_kernel(k1, a), eval_kernel(KernelSpec::dh(p.delta), a) / p.delta);
        if (wp <= 1) chk(eval_kernel(k2p, a), wp * eval_kernel(KernelSpec::dh(wp), a));
        if (wm <= 1) chk(eval_kernel(k2m, a), wm * eval_kernel(KernelSpec::dh(wm), a));
      }
    }
    return worst;
  }, "checked where the scaled width is a valid eta (<= 1)");

  s.check("kernels.transform_closed_forms", 1e-6, [] {
    double worst = 0;
    for (const auto& p : kernel_param_sets()) {
      for (KernelKind kind : {KernelKind::DH, KernelKind::K1, KernelKind::K2Plus, KernelKind::K2Minus}) {
        const auto spec = kind == KernelKind::DH ? KernelSpec::dh(p.eta) : KernelSpec::of(kind, p);
        for (int i = -5; i <= 5; i += 2) {
          const double t = 1.2 * spec.support_radius() * i / 5.0;
          const auto e = numeric_transform(spec, t, 400);
          worst = std::max(worst, std::fabs(e.value() - fourier_K(spec, t)));
        }
      }
    }
    return worst;
  }, "A = 400 plus sine-integral tail");

  s.check("kernels.sandwich", 1e-6, [] {
    double worst = 0;
    for (const auto& p : kernel_param_sets()) {
      for (KernelKind kind : {KernelKind::Plus, KernelKind::Minus}) {
        const auto spec = KernelSpec::of(kind, p);
        for (int i = 0; i <= 20; ++i) {
          const double t = (p.eta + 2 * p.delta) * (i - 10) / 10.0;
          const double v = numeric_transform(spec, t, 400).value();
          const auto sb = sandwich_bounds(p, t);
          const Interval b = kind == KernelKind::Plus ? sb.plus : sb.minus;
          worst = std::max({worst, b.lower - v, v - b.upper});
        }
      }
    }
    return worst;
  });

  s.check("kernels.envelope_constant", 3, [] {
    double C = 0;
    for (const auto& p : kernel_param_sets())
      for (KernelKind kind : {KernelKind::Plus, KernelKind::Minus}) {
        const auto spec = KernelSpec::of(kind, p);
        for (int i = 0; i < 10000; ++i) {
          const double a = -50.0 + 100.0 * (i + 0.5) / 10000.0;
          C = std::max(C, std::fabs(eval_kernel(spec, a)) / decay_bound(p, a));
        }
      }
    return C;
  }, "fitted constant, not a proven value");
}

void dissection_checks(Suite& s) {
  s.check("dissection.frak_v_matches_scan", 0, [] {
    double bad = 0;
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ud(0, 3), jd(-1, 1);
    for (auto [k, P, qs] : {std::tuple{2, 1e4, 0.0}, std::tuple{3, 1e5, 0.0}, std::tuple{2, 1e4, 2.5}}) {
      const auto d = DissectionParams::make(P, k, 0.5, qs);
      const auto qmax = static_cast<std::int64_t>(std::floor(d.Q));
      for (int i = 0; i < 300; ++i) {
        double a = ud(rng);
        if (i % 2) {  // near a rational with small denominator
          const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(qmax + 2));
          const std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * q));
          a = static_cast<double>(num) / static_cast<double>(q) + jd(rng) * 2 * d.hl_radius() / static_cast<double>(q);
        }
        bool scan_in = true;
        for (std::int64_t q = 1; q <= qmax && scan_in; ++q) {
          const long double v = static_cast<long double>(q) * a;
          if (std::fabs(v - std::nearbyint(v)) <= d.hl_radius()) scan_in = false;
        }
        if (scan_in != in_frak_v(a, d)) bad += 1;
      }
    }
    return bad;
  });

  s.check("dissection.partition_consistency", 0, [] {
    double bad = 0;
    const auto d = DissectionParams::make(1e4, 2, 0.5, 2.5);
    const Instance inst(2, 3, ShiftPreset::golden().value, 1.0);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ud(-12, 12);
    for (int i = 0; i < 400; ++i) {
      const double a = i % 4 == 0 ? ud(rng) * 1e-6 : ud(rng);
      const ArcLabel lab = classify(a, d, inst, 0);
      const bool major = std::fabs(a) < d.major_radius();
      const bool trivial = std::fabs(a) > d.T;
      if ((lab.dh == DhArc::Major) != major || (lab.dh == DhArc::Trivial) != trivial) bad += 1;
      if (lab.dh != DhArc::Major) {
        const bool in_n = lab.hl == HlArc::N;
        if (in_n == in_frak_v(a, d)) bad += 1;
        if (!in_n && lab.b != BArc::NotApplicable) bad += 1;
        if (in_n && std::gcd(lab.a, lab.q) != 1) bad += 1;
      } else if (lab.hl != HlArc::NotApplicable) {
        bad += 1;
      }
    }
    return bad;
  });

  s.check("dissection.dirichlet_bound", 0, [] {
    double worst = 0;
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ud(-10, 10);
    for (int i = 0; i < 500; ++i) {
      const double a = ud(rng);
      const std::int64_t qmax = 1 + static_cast<std::int64_t>(rng() % 100000);
      const RationalApprox r = dirichlet_approx(a, qmax);
      worst = std::max(worst, r.err * static_cast<double>(qmax + 1) - (1 - 1e-9));
      if (r.q > qmax || std::gcd(r.a, r.q) != 1) worst = std::max(worst, 1.0);
    }
    return std::max(0.0, worst);
  });

  s.check("dissection.witness_least_q", 0, [] {
    double bad = 0;
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> ud(0, 2);
    for (int i = 0; i < 500; ++i) {
      const double a = ud(rng);
      const double eps = std::pow(10.0, -1.0 - static_cast<double>(rng() % 4));
      const std::int64_t qmax = 60;
      const auto w = least_q_witness(a, qmax, eps);
      std::int64_t scan_q = 0;
      for (std::int64_t q = 1; q <= qmax && !scan_q; ++q) {
        const long double v = static_cast<long double>(q) * a;
        if (std::fabs(v - std::nearbyint(v)) <= eps) scan_q = q;
      }
      if ((w ? w->q : 0) != scan_q) bad += 1;
    }
    return bad;
  });
}

void integrator_checks(Suite& s) {
  const Exec ex{s.opts.workers};
  struct Case {
    int k;
    std::vector<real_ext> th;
    double eta;
    double tau;
  };
  const std::vector<Case> cases{{2, {0.3L, 0.5L, 0.7L}, 1.0, 100.0},
                                {2, {ShiftPreset::sqrt2().value, ShiftPreset::golden().value}, 0.6, 130.0},
                                {3, {ShiftPreset::e2().value, 0.25L}, 0.8, 900.0}};

  s.check("integrator.count_identity", 1, [&] {
    double worst = 0;
    for (const auto& c : cases) {
      const Instance inst(c.k, c.th, c.eta);
      const auto r = dh_integral(inst, c.tau, KernelSpec::dh(c.eta), 600, 0, ex);
      const double w = weighted_count(inst, c.tau).value;
      worst = std::max(worst, std::fabs(r.value.real() - w) / r.error());
    }
    return worst;
  }, "|dh - weighted| / (tail + disc)");

  s.check("integrator.sandwich", 0, [&] {
    double worst = 0;
    for (const auto& c : cases) {
      const Instance inst(c.k, c.th, c.eta);
      const double P = Query::make(c.tau, c.k).P;
      const auto kp = KernelParams::make(c.eta, P, TChoice::Identity);
      const auto rp = dh_integral(inst, c.tau, KernelSpec::of(KernelKind::Plus, kp), 600, 0, ex);
      const auto rm = dh_integral(inst, c.tau, KernelSpec::of(KernelKind::Minus, kp), 600, 0, ex);
      const double n = count_Nstar(inst, c.tau).value;
      worst = std::max({worst, rm.value.real() - rm.error() - n, n - rp.value.real() - rp.error()});
    }
    return std::max(0.0, worst);
  });

  s.check("integrator.imaginary_parts", 0, [&] {
    double worst = 0;
    for (const auto& c : cases) {
      const Instance inst(c.k, c.th, c.eta);
      const auto r = dh_integral(inst, c.tau, KernelSpec::dh(c.eta), 100, 0, ex);
      worst = std::max(worst, std::fabs(r.value.imag()) - r.error());
    }
    return std::max(0.0, worst);
  });

  s.check("integrator.monotone_truncation", 0, [&] {
    double worst = 0;
    const auto& c = cases[0];
    const Instance inst(c.k, c.th, c.eta);
    const auto a = dh_integral(inst, c.tau, KernelSpec::dh(c.eta), 150, 0, ex);
    const auto b = dh_integral(inst, c.tau, KernelSpec::dh(c.eta), 450, 0, ex);
    worst = std::fabs(a.value.real() - b.value.real()) - (a.tail_bound + b.tail_bound + a.disc_error + b.disc_error);
    return std::max(0.0, worst);
  });

  s.check("integrator.regrouping", 1e-9, [&] {
    const Instance inst(2, 4, ShiftPreset::golden().value, 1.0);
    const double tau = 400;
    const auto d = DissectionParams::make(20, 2, 0.5, 1.0, TChoice::Identity);
    const auto br = arc_contributions(inst, tau, KernelSpec::dh(1.0), d, 25, 0, ex);
    double sum = 0;
    for (const auto& p : br.parts) sum += p.value.real();
    const auto whole = dh_integral(inst, tau, KernelSpec::dh(1.0), 25, 0, ex);
    return rel(sum, whole.value.real());
  });

  s.check("integrator.minor_moment_below_full", 0, [&] {
    const real_ext th = ShiftPreset::golden().value;
    const auto d = DissectionParams::make(32, 2, 0.5, 0.5);
    const auto spec = KernelSpec::dh(1.0);
    const auto v = minor_moment(th, 6, 2, 32, spec, d, 8, 0, ex);
    const auto full = minor_moment(th, 6, 2, 32, spec, d, 8, 0, ex, true);
    return std::max(0.0, v.value.real() - full.value.real() - v.disc_error - full.disc_error);
  });
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["all_pass"] = all_pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["measured"] = fmt(c.measured);
    e["tolerance"] = fmt(c.tolerance);
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_csv() const {
  std::ostringstream os;
  os << "name,pass,measured,tolerance,detail\n";
  for (const auto& c : checks) {
    std::string d = c.detail;
    std::replace(d.begin(), d.end(), '"', '\'');
    os << c.name << ',' << (c.pass ? "true" : "false") << ',' << fmt(c.measured) << ',' << fmt(c.tolerance)
       << ",\"" << d << "\"\n";
  }
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& opts) {
  Suite s(opts);
  core_checks(s);
  counting_checks(s);
  expsum_checks(s);
  kernel_checks(s);
  dissection_checks(s);
  integrator_checks(s);
  return std::move(s.report);
}

}  // namespace waringlab
