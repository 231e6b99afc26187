#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace waringlab {

// Execution settings shared by every long-running operation. Work is always
// split into the same fixed chunks and reduced in the same pairwise order, so
// the worker count never changes a result bit.
struct Exec {
  int workers = 1;
};

template <class Fn>
void for_each_chunk(std::size_t n_chunks, const Exec& exec, Fn&& fn) {
  const std::size_t nw =
      std::min<std::size_t>(n_chunks, static_cast<std::size_t>(std::max(1, exec.workers)));
  if (nw <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nw - 1);
  for (std::size_t i = 0; i + 1 < nw; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Fixed-shape pairwise tree over v[0..n).
template <class T, class Add>
T pairwise_reduce(std::vector<T> v, Add add) {
  if (v.empty()) return T{};
  std::size_t n = v.size();
  while (n > 1) {
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) v[i] = add(v[i], v[i + half]);
    n = half;
  }
  return v[0];
}

}  // namespace waringlab
