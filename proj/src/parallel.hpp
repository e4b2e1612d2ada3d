#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace expost::detail {

// Running mean and squared deviation for N quantities.
template <std::size_t N>
struct Moments {
  double count = 0.0;
  std::array<double, N> mean{};
  std::array<double, N> m2{};

  void add(const std::array<double, N>& x) {
    count += 1.0;
    for (std::size_t i = 0; i < N; ++i) {
      double d = x[i] - mean[i];
      mean[i] += d / count;
      m2[i] += d * (x[i] - mean[i]);
    }
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    double n = count + o.count;
    for (std::size_t i = 0; i < N; ++i) {
      double d = o.mean[i] - mean[i];
      mean[i] += d * o.count / n;
      m2[i] += o.m2[i] + d * d * count * o.count / n;
    }
    count = n;
  }

  double std_error(std::size_t i) const {
    if (count < 2.0) return 0.0;
    return std::sqrt(m2[i] / (count - 1.0) / count);
  }
};

inline unsigned resolve_workers(unsigned hint, std::size_t chunks) {
  unsigned w = hint == 0 ? std::max(1u, std::thread::hardware_concurrency()) : hint;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(chunks, 1)));
}

/// Calls fn(begin, end) on consecutive chunks of [0, n) and returns the
/// per-chunk results in chunk order.
template <class Result, class Fn>
std::vector<Result> run_chunks(std::size_t n, std::size_t chunk, unsigned workerHint, Fn fn) {
  std::size_t nChunks = (n + chunk - 1) / chunk;
  std::vector<Result> out(nChunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < nChunks; c = next++)
      out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
  };
  unsigned workers = resolve_workers(workerHint, nChunks);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

template <std::size_t N>
Moments<N> merge_in_order(const std::vector<Moments<N>>& parts) {
  Moments<N> total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace expost::detail
