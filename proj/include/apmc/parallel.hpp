#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace apmc {

// Runs f(i) for i in [0, count) on `jobs` threads (sequential when jobs <= 1).
// Work items must be independent; results should land in pre-sized slots so
// the outcome is identical at any parallelism degree.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace apmc
