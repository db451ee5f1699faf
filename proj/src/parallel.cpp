#include "amalgam/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace amalgam {

int max_threads() {
  static const int cached = [] {
    const char* env = std::getenv("AMALGAM_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return std::clamp(n, 1, 64);
  }();
  return cached;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(max_threads(), n);
  if (workers <= 1 || n < 32) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int block = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * block;
    const int hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace amalgam
