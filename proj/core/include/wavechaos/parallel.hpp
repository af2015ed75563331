#ifndef WAVECHAOS_PARALLEL_HPP
#define WAVECHAOS_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wavechaos {

/// Thread count resolution: explicit request > WAVECHAOS_THREADS > hardware.
inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("WAVECHAOS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Static block partition of [0, n): worker w handles one contiguous range.
/// Results must be written to disjoint, pre-sized slots so the outcome is
/// independent of the worker count. The first exception wins and is rethrown.
inline void parallel_for(std::size_t n, int requested_threads,
                         const std::function<void(std::size_t, std::size_t)>&
                             body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(
                                requested_threads),
                            n == 0 ? 1 : n));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace wavechaos

#endif
