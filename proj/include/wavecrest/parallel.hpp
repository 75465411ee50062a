#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wavecrest {

/// Worker cap: WAVECREST_THREADS if set, else the hardware count.
inline int max_workers() {
  if (const char* env = std::getenv("WAVECREST_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(0..count-1) on up to max_workers() threads. Each index owns its
/// work exclusively; results must be collected by index so output order is
/// deterministic.
template <typename Fn>
void parallel_for_index(int count, Fn fn) {
  int workers = std::min(max_workers(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace wavecrest
