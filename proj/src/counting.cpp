#include "waringlab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

namespace waringlab {

namespace {

// Largest x >= 0 with (x - theta)^k < limit.
std::int64_t strict_upper(real_ext limit, real_ext theta, int k) {
  if (limit <= 0) return 0;
  auto x = static_cast<std::int64_t>(std::floor(std::pow(limit, 1.0L / k) + theta));
  while (x > 0 && shifted_power(x, theta, k) >= limit) --x;
  while (shifted_power(x + 1, theta, k) < limit) ++x;
  return x;
}

struct Enumerator {
  const Instance& inst;
  double tau;
  const CountBudget& budget;
  bool weighted;
  std::vector<std::int64_t> upper;       // per-variable bound
  std::vector<std::vector<real_ext>> term;  // term[i][x] = (x - theta_i)^k
  std::vector<real_ext> min_rest;        // sum_{j > i} (1 - theta_j)^k
  std::vector<real_ext> partial_terms;
  std::int64_t examined = 0;
  std::int64_t hits = 0;
  CompensatedSum<real_ext> weight;

  Enumerator(const Instance& in, double t, const CountBudget& b, bool w, bool boxed)
      : inst(in), tau(t), budget(b), weighted(w) {
    const int s = inst.s(), k = inst.k();
    const real_ext lim = static_cast<real_ext>(tau) + inst.eta();
    const std::int64_t pf = Query::make(tau, k).P_floor;
    upper.resize(static_cast<std::size_t>(s));
    term.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
      std::int64_t ub = strict_upper(lim, inst.theta(i), k);
      if (boxed) ub = std::min(ub, pf);
      upper[static_cast<std::size_t>(i)] = ub;
      auto& tv = term[static_cast<std::size_t>(i)];
      tv.resize(static_cast<std::size_t>(ub + 1));
      for (std::int64_t x = 1; x <= ub; ++x) tv[static_cast<std::size_t>(x)] = shifted_power(x, inst.theta(i), k);
    }
    min_rest.assign(static_cast<std::size_t>(s), 0);
    for (int i = s - 2; i >= 0; --i)
      min_rest[static_cast<std::size_t>(i)] =
          min_rest[static_cast<std::size_t>(i + 1)] + shifted_power(1, inst.theta(i + 1), k);
    partial_terms.resize(static_cast<std::size_t>(s));
  }

  void bump() {
    if (++examined > budget.max_tuples)
      fail(ErrorKind::BudgetExceeded,
           "tuple budget of " + std::to_string(budget.max_tuples) + " exceeded");
  }

  void leaf() {
    CompensatedSum<real_ext> acc;
    for (real_ext t : partial_terms) acc.add(t);
    const real_ext gap = std::fabs(acc.value() - static_cast<real_ext>(tau));
    if (gap < inst.eta()) {
      ++hits;
      if (weighted) weight.add(1.0L - gap / inst.eta());
    }
  }

  void recurse(int i, real_ext partial) {
    const int s = inst.s();
    const auto ui = static_cast<std::size_t>(i);
    const real_ext lim = static_cast<real_ext>(tau) + inst.eta();
    if (i == s - 1) {
      // Only the few x with (x - theta)^k near tau - partial can qualify.
      const real_ext lo_target = static_cast<real_ext>(tau) - inst.eta() - partial;
      const real_ext hi_target = lim - partial;
      if (hi_target <= 0) return;
      std::int64_t lo = 1;
      if (lo_target > 0)
        lo = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::floor(std::pow(lo_target, 1.0L / inst.k()) + inst.theta(i))) - 1);
      const std::int64_t hi = std::min(upper[ui], strict_upper(hi_target, inst.theta(i), inst.k()) + 1);
      for (std::int64_t x = lo; x <= hi; ++x) {
        bump();
        partial_terms[ui] = term[ui][static_cast<std::size_t>(x)];
        leaf();
      }
      return;
    }
    for (std::int64_t x = 1; x <= upper[ui]; ++x) {
      const real_ext t = term[ui][static_cast<std::size_t>(x)];
      if (partial + t + min_rest[ui] >= lim) break;
      bump();
      partial_terms[ui] = t;
      recurse(i + 1, partial + t);
    }
  }
};

CountResult run_brute(const Instance& inst, double tau, const CountBudget& budget, bool weighted,
                      bool boxed) {
  require(tau > 0, "tau must be positive");
  Enumerator e(inst, tau, budget, weighted, boxed);
  e.recurse(0, 0);
  CountResult r;
  r.value = weighted ? static_cast<double>(e.weight.value()) : static_cast<double>(e.hits);
  r.tuples_examined = e.examined;
  r.method = CountMethod::Brute;
  return r;
}

// All sums over the given variables strictly below `limit`, pruned on the fly.
std::vector<double> half_sums(const Instance& inst, int first, int count,
                              const std::vector<std::int64_t>& upper, real_ext limit,
                              const CountBudget& budget, std::int64_t& examined,
                              std::int64_t& bytes_in_use) {
  const int k = inst.k();
  std::vector<std::vector<real_ext>> term(static_cast<std::size_t>(count));
  std::vector<real_ext> min_rest(static_cast<std::size_t>(count) + 1, 0);
  for (int i = count - 1; i >= 0; --i) {
    const int v = first + i;
    auto& tv = term[static_cast<std::size_t>(i)];
    tv.resize(static_cast<std::size_t>(upper[static_cast<std::size_t>(v)] + 1));
    for (std::int64_t x = 1; x <= upper[static_cast<std::size_t>(v)]; ++x)
      tv[static_cast<std::size_t>(x)] = shifted_power(x, inst.theta(v), k);
    min_rest[static_cast<std::size_t>(i)] =
        min_rest[static_cast<std::size_t>(i + 1)] + shifted_power(1, inst.theta(v), k);
  }
  std::vector<double> out;
  const std::int64_t cap_entries = budget.max_table_bytes / static_cast<std::int64_t>(sizeof(double));
  auto rec = [&](auto&& self, int i, real_ext partial) -> void {
    if (i == count) {
      if (bytes_in_use + static_cast<std::int64_t>(sizeof(double)) > budget.max_table_bytes ||
          static_cast<std::int64_t>(out.size()) >= cap_entries)
        fail(ErrorKind::BudgetExceeded, "half-sum tables exceed the memory cap");
      bytes_in_use += static_cast<std::int64_t>(sizeof(double));
      out.push_back(static_cast<double>(partial));
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t x = 1; x < term[ui].size(); ++x) {
      const real_ext p = partial + term[ui][x];
      if (p + min_rest[ui + 1] >= limit) break;
      if (++examined > budget.max_tuples)
        fail(ErrorKind::BudgetExceeded,
             "tuple budget of " + std::to_string(budget.max_tuples) + " exceeded");
      self(self, i + 1, p);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CountResult count_N(const Instance& inst, double tau, const CountBudget& budget) {
  return run_brute(inst, tau, budget, false, false);
}

CountResult count_Nstar(const Instance& inst, double tau, const CountBudget& budget) {
  return run_brute(inst, tau, budget, false, true);
}

CountResult weighted_count(const Instance& inst, double tau, const CountBudget& budget) {
  return run_brute(inst, tau, budget, true, true);
}

CountResult count_mitm(const Instance& inst, double tau, bool weighted, const CountBudget& budget,
                       Box box) {
  require(tau > 0, "tau must be positive");
  const int s = inst.s(), k = inst.k();
  require(s >= 2, "count_mitm needs s >= 2");
  const double eta = inst.eta();
  const real_ext lim = static_cast<real_ext>(tau) + eta;
  const std::int64_t pf = Query::make(tau, k).P_floor;

  std::vector<std::int64_t> upper(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    std::int64_t ub = strict_upper(lim, inst.theta(i), k);
    if (box == Box::Nstar) ub = std::min(ub, pf);
    upper[static_cast<std::size_t>(i)] = ub;
  }
  const int h1 = (s + 1) / 2, h2 = s - h1;
  real_ext min1 = 0, min2 = 0;
  for (int i = 0; i < h1; ++i) min1 += shifted_power(1, inst.theta(i), k);
  for (int i = h1; i < s; ++i) min2 += shifted_power(1, inst.theta(i), k);

  std::int64_t examined = 0, bytes = 0;
  std::vector<double> U = half_sums(inst, 0, h1, upper, lim - min2, budget, examined, bytes);
  bool same = (h1 == h2);
  for (int i = 0; same && i < h2; ++i)
    same = inst.theta(i) == inst.theta(h1 + i) &&
           upper[static_cast<std::size_t>(i)] == upper[static_cast<std::size_t>(h1 + i)];
  std::vector<double> Vown;
  if (!same) Vown = half_sums(inst, h1, h2, upper, lim - min1, budget, examined, bytes);
  const std::vector<double>& V = same ? U : Vown;

  const real_ext lo_t = static_cast<real_ext>(tau) - eta;
  const real_ext hi_t = lim;
  CountResult r;
  r.method = CountMethod::Mitm;
  r.tuples_examined = examined;

  if (!weighted) {
    // Windows slide left as u grows.
    std::int64_t total = 0;
    std::size_t lo = V.size(), hi = V.size();
    for (double u : U) {
      const real_ext lu = u;
      while (lo > 0 && lu + V[lo - 1] > lo_t) --lo;
      while (hi > 0 && lu + V[hi - 1] >= hi_t) --hi;
      if (hi > lo) total += static_cast<std::int64_t>(hi - lo);
    }
    r.value = static_cast<double>(total);
    return r;
  }

  if (bytes + static_cast<std::int64_t>(V.size() + 1) * static_cast<std::int64_t>(sizeof(real_ext)) >
      budget.max_table_bytes)
    fail(ErrorKind::BudgetExceeded, "prefix-sum table exceeds the memory cap");
  std::vector<real_ext> prefix(V.size() + 1, 0);
  {
    CompensatedSum<real_ext> acc;
    for (std::size_t i = 0; i < V.size(); ++i) {
      acc.add(V[i]);
      prefix[i + 1] = acc.value();
    }
  }
  CompensatedSum<real_ext> total;
  const real_ext T = tau;
  std::size_t lo = V.size(), mid = V.size(), hi = V.size();
  for (double u : U) {
    const real_ext lu = u;
    while (lo > 0 && lu + V[lo - 1] > lo_t) --lo;
    while (mid > 0 && lu + V[mid - 1] >= T) --mid;
    while (hi > 0 && lu + V[hi - 1] >= hi_t) --hi;
    if (hi <= lo) continue;
    const std::size_t m = std::clamp(mid, lo, hi);
    const real_ext c = T - lu;  // v below c: weight 1 - (c - v)/eta ; above: 1 - (v - c)/eta
    const auto n_below = static_cast<real_ext>(m - lo);
    const auto n_above = static_cast<real_ext>(hi - m);
    total.add(n_below * (1.0L - c / eta) + (prefix[m] - prefix[lo]) / eta);
    total.add(n_above * (1.0L + c / eta) - (prefix[hi] - prefix[m]) / eta);
  }
  r.value = static_cast<double>(total.value());
  return r;
}

namespace {

void require_moment_range(int s, int k, std::int64_t P) {
  require(s >= 1 && k >= 1 && P >= 1, "need s, k, P >= 1");
  const long double top = static_cast<long double>(s) * std::pow(static_cast<long double>(P), k);
  require(top < 9.0e18L, "s*P^k does not fit in 64-bit moment sums");
}

template <class Fn>
void for_each_tuple(int s, std::int64_t P, const CountBudget& budget, Fn&& fn) {
  const long double n = std::pow(static_cast<long double>(P), s);
  if (n > static_cast<long double>(budget.max_tuples))
    fail(ErrorKind::BudgetExceeded, "P^s exceeds the tuple budget");
  std::vector<std::int64_t> x(static_cast<std::size_t>(s), 1);
  for (;;) {
    fn(x);
    int i = s - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == P) x[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

struct MomentHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : v) {
      h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::int64_t> moments(const std::vector<std::int64_t>& x, int degrees) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(degrees), 0);
  for (auto xi : x) {
    std::int64_t p = 1;
    for (int j = 0; j < degrees; ++j) {
      p *= xi;
      m[static_cast<std::size_t>(j)] += p;
    }
  }
  return m;
}

}  // namespace

std::int64_t count_J(int s, int k, std::int64_t P, const CountBudget& budget) {
  require_moment_range(s, k, P);
  std::unordered_map<std::vector<std::int64_t>, std::int64_t, MomentHash> mult;
  for_each_tuple(s, P, budget, [&](const std::vector<std::int64_t>& x) { ++mult[moments(x, k)]; });
  std::int64_t total = 0;
  for (const auto& [key, m] : mult) total += m * m;
  return total;
}

std::int64_t count_J_shifted(int s, int k, std::int64_t P, real_ext theta, double eta,
                             const CountBudget& budget) {
  require(k >= 2, "count_J_shifted needs k >= 2");
  require(theta > 0 && theta < 1, "theta must lie in (0,1)");
  require(eta > 0 && eta <= 1, "eta must lie in (0,1]");
  require_moment_range(s, k, P);
  std::unordered_map<std::vector<std::int64_t>, std::vector<real_ext>, MomentHash> groups;
  for_each_tuple(s, P, budget, [&](const std::vector<std::int64_t>& x) {
    real_ext top = 0;
    for (auto xi : x) top += shifted_power(xi, theta, k);
    groups[moments(x, k - 1)].push_back(top);
  });
  std::int64_t total = 0;
  const real_ext e = eta;
  for (auto& [key, vals] : groups) {
    std::sort(vals.begin(), vals.end());
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      while (vals[i] - vals[lo] >= e) ++lo;
      if (hi < i) hi = i;
      while (hi + 1 < vals.size() && vals[hi + 1] - vals[i] < e) ++hi;
      total += static_cast<std::int64_t>(hi - lo + 1);
    }
  }
  return total;
}

}  // namespace waringlab
