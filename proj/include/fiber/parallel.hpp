#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace fiber {

// Sums f(i) over i in [0, n), splitting the index range into contiguous shards that run on
// their own threads. The result does not depend on the shard count as long as f(i) depends
// only on i.
template <class T, class F>
T sharded_sum(std::uint64_t n, unsigned shards, F f) {
  if (shards <= 1 || n < 2) {
    T total{};
    for (std::uint64_t i = 0; i < n; ++i) total += f(i);
    return total;
  }
  std::vector<T> part(shards);
  std::vector<std::thread> workers;
  for (unsigned s = 0; s < shards; ++s)
    workers.emplace_back([&, s] {
      const std::uint64_t lo = n * s / shards, hi = n * (s + 1) / shards;
      for (std::uint64_t i = lo; i < hi; ++i) part[s] += f(i);
    });
  for (auto& w : workers) w.join();
  T total{};
  for (const auto& p : part) total += p;
  return total;
}

}  // namespace fiber
