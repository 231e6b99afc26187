#include "waringlab/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace waringlab {

namespace {

constexpr std::int64_t kChunk = 512;
// Relative drift of one stepped term after kChunk rotations.
constexpr double kStepDrift = kChunk * 4 * std::numeric_limits<double>::epsilon();

struct Group {
  real_ext theta;
  int mult;
};

std::vector<Group> group_thetas(const Instance& inst) {
  std::vector<Group> g;
  for (real_ext t : inst.theta()) {
    auto it = std::find_if(g.begin(), g.end(), [&](const Group& x) { return x.theta == t; });
    if (it == g.end())
      g.push_back({t, 1});
    else
      ++it->mult;
  }
  return g;
}

std::int64_t node_count(double A, double limit, double mesh, double* h) {
  require(std::isfinite(A) && A >= 1, "truncation A must be at least 1");
  if (mesh > 0 && mesh > limit)
    fail(ErrorKind::MeshTooCoarse, "mesh " + std::to_string(mesh) + " exceeds the resolution limit " +
                                       std::to_string(limit));
  const double target = mesh > 0 ? mesh : limit;
  const double n = std::ceil(A / target);
  require(n < 4e9, "grid would need more than 4e9 cells; reduce A or the frequency range");
  *h = A / n;
  return static_cast<std::int64_t>(n);
}

// Runs fn(acc, n, f) over nodes lo..hi of each chunk, with f[i] the i-th
// stepper's value at alpha = n h. Chunks overlap by one node when overlap is
// set (cell-based rules).
template <class Acc, class Fn>
std::vector<Acc> run_chunks(std::int64_t last_node, bool overlap, const std::vector<ThetaStepper>& proto,
                            const Exec& exec, Fn&& fn) {
  const std::int64_t span = overlap ? last_node : last_node + 1;
  const auto n_chunks = static_cast<std::size_t>(std::max<std::int64_t>(1, (span + kChunk - 1) / kChunk));
  std::vector<Acc> out(n_chunks);
  for_each_chunk(n_chunks, exec, [&](std::size_t c) {
    std::vector<ThetaStepper> st = proto;
    const std::int64_t lo = static_cast<std::int64_t>(c) * kChunk;
    const std::int64_t hi = std::min(lo + (overlap ? kChunk : kChunk - 1), last_node);
    for (auto& s : st) s.anchor(lo);
    std::vector<cplx> f(st.size());
    Acc acc;
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (n > lo)
        for (auto& s : st) s.step();
      for (std::size_t i = 0; i < st.size(); ++i) f[i] = st[i].value();
      fn(acc, n, f);
    }
    out[c] = acc;
  });
  return out;
}

double ipow(double b, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

cplx cpow(cplx b, int e) {
  cplx r(1, 0);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// |f_bold| rounding: sum over factors of prod of the other magnitudes.
double product_rounding(const std::vector<Group>& groups, const std::vector<cplx>& f, double floorP) {
  std::vector<double> m;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (int r = 0; r < groups[i].mult; ++r) m.push_back(std::abs(f[i]));
  double acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double p = 1;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) p *= m[j];
    acc += p;
  }
  return acc * floorP * kStepDrift;
}

struct DhAcc {
  CompensatedSum<double> all, even, round;
  std::array<CompensatedSum<double>, kArcClassCount> cls_all, cls_even;
};

struct DhSums {
  double all = 0, even = 0, round = 0;
  std::array<double, kArcClassCount> cls_all{}, cls_even{};
};

DhSums add_sums(const DhSums& a, const DhSums& b) {
  DhSums r;
  r.all = a.all + b.all;
  r.even = a.even + b.even;
  r.round = a.round + b.round;
  for (int i = 0; i < kArcClassCount; ++i) {
    r.cls_all[static_cast<std::size_t>(i)] = a.cls_all[static_cast<std::size_t>(i)] + b.cls_all[static_cast<std::size_t>(i)];
    r.cls_even[static_cast<std::size_t>(i)] = a.cls_even[static_cast<std::size_t>(i)] + b.cls_even[static_cast<std::size_t>(i)];
  }
  return r;
}

DhSums dh_sweep(const Instance& inst, double tau, const KernelSpec& spec, double h, std::int64_t N,
                const Exec& exec, const DissectionParams* params, int theta3_index) {
  const double P = Query::make(tau, inst.k()).P;
  const double floorP = std::floor(P);
  const auto groups = group_thetas(inst);
  std::vector<ThetaStepper> proto;
  std::size_t g3 = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    proto.emplace_back(groups[i].theta, P, inst.k(), static_cast<real_ext>(h));
    if (params && groups[i].theta == inst.theta(theta3_index)) g3 = i;
  }
  const real_ext lh = h;
  const real_ext ltau = tau;
  auto chunks = run_chunks<DhAcc>(N, false, proto, exec, [&](DhAcc& acc, std::int64_t n, const std::vector<cplx>& f) {
    const real_ext alpha = static_cast<real_ext>(n) * lh;
    cplx prod(1, 0);
    for (std::size_t i = 0; i < groups.size(); ++i) prod *= cpow(f[i], groups[i].mult);
    const double K = eval_kernel(spec, static_cast<double>(alpha));
    const double w = n == 0 ? 1.0 : 2.0;
    const double g = w * (prod * unit_phase(-ltau * alpha)).real() * K;
    acc.all.add(g);
    if (n % 2 == 0) acc.even.add(g);
    acc.round.add(w * std::fabs(K) * product_rounding(groups, f, floorP));
    if (params) {
      const auto lab = classify_with_magnitude(static_cast<double>(alpha), *params, std::abs(f[g3]));
      const auto c = static_cast<std::size_t>(lab.class_index());
      acc.cls_all[c].add(g);
      if (n % 2 == 0) acc.cls_even[c].add(g);
    }
  });
  std::vector<DhSums> sums(chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    sums[c].all = chunks[c].all.value();
    sums[c].even = chunks[c].even.value();
    sums[c].round = chunks[c].round.value();
    for (std::size_t i = 0; i < kArcClassCount; ++i) {
      sums[c].cls_all[i] = chunks[c].cls_all[i].value();
      sums[c].cls_even[i] = chunks[c].cls_even[i].value();
    }
  }
  return pairwise_reduce(std::move(sums), add_sums);
}

double box_span_radius(const Instance& inst, double tau, double kernel_radius) {
  const double P = Query::make(tau, inst.k()).P;
  const auto pf = static_cast<std::int64_t>(std::floor(P));
  long double lo = 0, hi = 0;
  for (real_ext t : inst.theta()) {
    lo += shifted_power(1, t, inst.k());
    hi += shifted_power(pf, t, inst.k());
  }
  const long double lt = tau;
  return static_cast<double>(std::max(std::fabs(lt - lo), std::fabs(hi - lt))) + kernel_radius;
}

}  // namespace

double dh_mesh_limit(const Instance& inst, double tau, const KernelSpec& spec) {
  return 1.0 / (2.0 * box_span_radius(inst, tau, spec.support_radius()));
}

double moment_mesh_limit(real_ext theta, int power, int k, double P, double kernel_radius) {
  require(P >= 1, "P must be at least 1");
  require(power >= 1, "moment power must be positive");
  const auto pf = static_cast<std::int64_t>(std::floor(P));
  const double span = static_cast<double>(shifted_power(pf, theta, k) - shifted_power(1, theta, k));
  // |f|^{2m} has frequencies in [-m span, m span].
  const double half = std::ceil(power / 2.0) * span;
  return 1.0 / (2.0 * (half + kernel_radius));
}

QuadratureResult dh_integral(const Instance& inst, double tau, const KernelSpec& spec, double A, double mesh,
                             const Exec& exec) {
  require(tau > 0, "tau must be positive");
  double h = 0;
  const std::int64_t N = node_count(A, dh_mesh_limit(inst, tau, spec), mesh, &h);
  const DhSums s = dh_sweep(inst, tau, spec, h, N, exec, nullptr, 0);
  const double floorP = std::floor(Query::make(tau, inst.k()).P);
  QuadratureResult r;
  r.value = {h * s.all, 0.0};
  r.tail_bound = ipow(floorP, inst.s()) * spec.sampled_tail_bound(A, h);
  r.disc_error = std::fabs(h * s.all - 2 * h * s.even) + h * s.round;
  r.panels = N;
  r.mesh = h;
  r.A = A;
  return r;
}

ArcBreakdown arc_contributions(const Instance& inst, double tau, const KernelSpec& spec,
                               const DissectionParams& params, double A, double mesh, const Exec& exec,
                               int theta3_index) {
  require(tau > 0, "tau must be positive");
  require(inst.k() == params.k, "arc_contributions: instance and dissection degrees differ");
  require(theta3_index >= 0 && theta3_index < inst.s(), "arc_contributions: theta3_index out of range");
  require(A >= params.T, "arc_contributions: A must be at least T(P)");
  double h = 0;
  const std::int64_t N = node_count(A, dh_mesh_limit(inst, tau, spec), mesh, &h);
  const DhSums s = dh_sweep(inst, tau, spec, h, N, exec, &params, theta3_index);
  const double floorP = std::floor(Query::make(tau, inst.k()).P);
  ArcBreakdown out;
  out.total.value = {h * s.all, 0.0};
  out.total.tail_bound = ipow(floorP, inst.s()) * spec.sampled_tail_bound(A, h);
  out.total.disc_error = std::fabs(h * s.all - 2 * h * s.even) + h * s.round;
  out.total.panels = N;
  out.total.mesh = h;
  out.total.A = A;
  for (std::size_t i = 0; i < kArcClassCount; ++i) {
    auto& p = out.parts[i];
    p.value = {h * s.cls_all[i], 0.0};
    p.disc_error = std::fabs(h * s.cls_all[i] - 2 * h * s.cls_even[i]);
    p.panels = N;
    p.mesh = h;
    p.A = A;
  }
  out.parts[kArcClassCount - 1].tail_bound = out.total.tail_bound;
  return out;
}

namespace {

struct MomentAcc {
  CompensatedSum<double> h_sum, h2_sum, extra;
  double prev_g = 0, prev_round = 0, pair_left = 0, pair_frac = 0;
  bool prev_in = false, have_prev = false;
};

struct MomentSums {
  double h_sum = 0, h2_sum = 0, extra = 0;
};

}  // namespace

QuadratureResult minor_moment(real_ext theta, int s2, int k, double P, const KernelSpec& spec,
                              const DissectionParams& params, double A, double mesh, const Exec& exec,
                              bool whole_line) {
  require(s2 >= 2 && s2 % 2 == 0, "minor_moment: the power must be even and positive");
  require(theta > 0 && theta < 1, "minor_moment: theta must lie in (0,1)");
  require(k == params.k && P == params.P, "minor_moment: dissection built for another (k, P)");
  const double limit = std::min(moment_mesh_limit(theta, s2, k, P, spec.support_radius()),
                                std::pow(P, -static_cast<double>(k)));
  double h = 0;
  const std::int64_t N = node_count(A, limit, mesh, &h);
  const double floorP = std::floor(P);
  const double tol = 1e-8;
  std::vector<ThetaStepper> proto;
  proto.emplace_back(theta, P, k, static_cast<real_ext>(h));
  auto member = [&](double a) { return whole_line || in_frak_v(a, params); };
  auto chunks = run_chunks<MomentAcc>(N, true, proto, exec, [&](MomentAcc& acc, std::int64_t n, const std::vector<cplx>& f) {
    const double alpha = static_cast<double>(static_cast<real_ext>(n) * h);
    const double m = std::abs(f[0]);
    const double K = std::fabs(eval_kernel(spec, alpha));
    const double g = ipow(m, s2) * K;
    const double rnd = s2 * ipow(m, s2 - 1) * floorP * kStepDrift * K;
    const bool in = member(alpha);
    if (acc.have_prev) {
      const std::int64_t cell = n - 1;
      double frac = 0;
      if (acc.prev_in && in) {
        frac = 1;
      } else if (acc.prev_in != in) {
        double lo = alpha - h, hi = alpha;
        while (hi - lo > tol) {
          const double mid = 0.5 * (lo + hi);
          (member(mid) == acc.prev_in ? lo : hi) = mid;
        }
        const double b = 0.5 * (lo + hi);
        frac = acc.prev_in ? (b - (alpha - h)) / h : (alpha - b) / h;
        acc.extra.add(tol * std::max(acc.prev_g, g) + 0.5 * h * std::fabs(acc.prev_g - g));
      }
      const double cell_val = 0.5 * (acc.prev_g + g) * frac;
      acc.h_sum.add(cell_val);
      acc.extra.add(0.5 * (acc.prev_round + rnd) * frac * h);
      if (cell % 2 == 0) {
        acc.pair_left = acc.prev_g;
        acc.pair_frac = frac;
        if (n == N) acc.h2_sum.add(cell_val);  // unpaired final cell
      } else {
        acc.h2_sum.add(0.5 * (acc.pair_left + g) * (acc.pair_frac + frac));
      }
    }
    acc.prev_g = g;
    acc.prev_round = rnd;
    acc.prev_in = in;
    acc.have_prev = true;
  });
  std::vector<MomentSums> sums(chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c)
    sums[c] = {chunks[c].h_sum.value(), chunks[c].h2_sum.value(), chunks[c].extra.value()};
  const MomentSums s = pairwise_reduce(std::move(sums), [](const MomentSums& a, const MomentSums& b) {
    return MomentSums{a.h_sum + b.h_sum, a.h2_sum + b.h2_sum, a.extra + b.extra};
  });
  QuadratureResult r;
  r.value = {2 * h * s.h_sum, 0.0};
  r.tail_bound = ipow(floorP, s2) * spec.tail_mass_bound(A);
  r.disc_error = 2 * (h * std::fabs(s.h_sum - s.h2_sum) + s.extra);
  r.panels = N;
  r.mesh = h;
  r.A = A;
  return r;
}

QuadratureResult hua_moment(real_ext theta, int j, int k, double P, double zeta, double A, double mesh,
                            const Exec& exec) {
  require(j >= 1, "hua_moment: j must be positive");
  require(k >= 2, "hua_moment: k must be at least 2");
  require(theta > 0 && theta < 1, "hua_moment: theta must lie in (0,1)");
  const KernelSpec spec = KernelSpec::dh(zeta);
  const int power = j * (j + 1);
  double h = 0;
  const std::int64_t N = node_count(A, moment_mesh_limit(theta, power, k, P, zeta), mesh, &h);
  const double floorP = std::floor(P);
  std::vector<ThetaStepper> proto;
  proto.emplace_back(theta, P, k, static_cast<real_ext>(h));
  struct Acc {
    CompensatedSum<double> all, even, round;
  };
  auto chunks = run_chunks<Acc>(N, false, proto, exec, [&](Acc& acc, std::int64_t n, const std::vector<cplx>& f) {
    const double alpha = static_cast<double>(static_cast<real_ext>(n) * h);
    const double m = std::abs(f[0]);
    const double K = eval_kernel(spec, alpha);
    const double w = n == 0 ? 1.0 : 2.0;
    const double g = w * ipow(m, power) * K;
    acc.all.add(g);
    if (n % 2 == 0) acc.even.add(g);
    acc.round.add(w * power * ipow(m, power - 1) * floorP * kStepDrift * K);
  });
  std::vector<std::array<double, 3>> sums(chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c)
    sums[c] = {chunks[c].all.value(), chunks[c].even.value(), chunks[c].round.value()};
  const auto s = pairwise_reduce(std::move(sums), [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  });
  QuadratureResult r;
  r.value = {h * s[0], 0.0};
  r.tail_bound = ipow(floorP, power) * spec.sampled_tail_bound(A, h);
  r.disc_error = std::fabs(h * s[0] - 2 * h * s[1]) + h * s[2];
  r.panels = N;
  r.mesh = h;
  r.A = A;
  return r;
}

double minor_moment_envelope(int s, int k) {
  const double a = s + 0.5 * k * (k - 1);
  const double b = 2.0 * s - k;
  return std::max(a, b) - 0.25;
}

SlopeFit slope_estimate(std::span<const std::pair<double, double>> points) {
  require(points.size() >= 4, "slope_estimate: need at least 4 points");
  SlopeFit fit;
  double sx = 0, sy = 0;
  for (const auto& [P, v] : points) {
    require(P > 0 && std::isfinite(P), "slope_estimate: P values must be positive");
    require(v > 0 && std::isfinite(v), "slope_estimate: values must be positive");
    fit.points.emplace_back(std::log(P), std::log(v));
    sx += fit.points.back().first;
    sy += fit.points.back().second;
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : fit.points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  require(sxx > 0, "slope_estimate: P values must not all coincide");
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0;
  for (const auto& [x, y] : fit.points) {
    const double e = y - (fit.intercept + fit.exponent * x);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace waringlab
