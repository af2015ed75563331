#ifndef WAVECHAOS_RNG_HPP
#define WAVECHAOS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace wavechaos {

/// Counter-based Gaussian draws keyed by (seed, counter). Each key maps to an
/// independent pair through splitmix64 finalization, so path synthesis is
/// reproducible regardless of worker count or evaluation order.
namespace counter_rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL * counter));
}

inline double to_unit_open(std::uint64_t word) {
  // (0, 1): top 53 bits, shifted off zero.
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

/// Two independent standard normals for the given key (Box-Muller).
inline std::pair<double, double> normal_pair(std::uint64_t seed,
                                             std::uint64_t counter) {
  const std::uint64_t w1 = mix(seed, 2 * counter);
  const std::uint64_t w2 = mix(seed, 2 * counter + 1);
  const double u1 = to_unit_open(w1);
  const double u2 = to_unit_open(w2);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Derive an independent stream seed (per-J splitting in the harness).
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master ^ 0x5851f42d4c957f2dULL) + index);
}

}  // namespace counter_rng

}  // namespace wavechaos

#endif
