#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace mapforge {

/// Worker count: explicit value, else MAPFORGE_JOBS, else hardware concurrency.
inline int resolve_jobs(std::optional<int> requested = std::nullopt) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("MAPFORGE_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(task) for task in [0, n_tasks) on `jobs` threads, tasks handed out round-robin.
inline void parallel_tasks(int n_tasks, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, n_tasks));
  if (jobs == 1) {
    for (int t = 0; t < n_tasks; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (int t = w; t < n_tasks; t += jobs) body(t);
    });
  for (auto& th : pool) th.join();
}

}  // namespace mapforge
