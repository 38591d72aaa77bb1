#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace orbitlf {

// Runs f(i) for i in [0, n) across `threads` workers, each writing slot i of
// the result vector. Slot assignment is index-based, so the output (and any
// subsequent ordered reduction) is independent of the thread count.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = n * t / threads;
    std::size_t hi = n * (t + 1) / threads;
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Thread-count resolution: the ORBITLF_THREADS environment variable overrides
// everything; otherwise an explicit request wins; otherwise hardware, capped.
inline unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("ORBITLF_THREADS"); env && *env) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  if (requested >= 1) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? std::min(hw, 8u) : 1u;
}

}  // namespace orbitlf
