#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace ivlasso {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IVLASSO_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [0, n); results must be written to
// index-addressed slots so the outcome is independent of scheduling.
inline void parallel_for(int n, int n_threads,
                         const std::function<void(int)>& body) {
  n_threads = resolve_threads(n_threads);
  if (n_threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  if (n_threads > n) n_threads = n;
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (int w = 0; w < n_threads; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(n) * w / n_threads);
    const int hi =
        static_cast<int>(static_cast<long long>(n) * (w + 1) / n_threads);
    workers.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace ivlasso
