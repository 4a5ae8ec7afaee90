#ifndef RESATLAS_THREADING_HPP
#define RESATLAS_THREADING_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace resatlas {

/// Worker count: hardware concurrency capped by RESONANCE_ATLAS_THREADS.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("RESONANCE_ATLAS_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Runs fn(i) for i in [0, count) on a fixed block split; the split depends
/// only on count and the worker cap, so per-index results are deterministic.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || count < 2 * workers) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace resatlas

#endif
