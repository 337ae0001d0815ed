#ifndef FRAMETWIRL_RNG_HPP
#define FRAMETWIRL_RNG_HPP

#include <cstdint>
#include <random>

namespace frametwirl {

/// Deterministic random stream. mt19937_64 output is pinned by the standard,
/// and doubles are produced from raw 64-bit draws rather than through
/// std::uniform_real_distribution, so identical seeds give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1); safe to pass to log().
  double uniform_pos() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint64_t next_u64() { return engine_(); }

  /// Independent substream for (seed, index) pairs; used to give each grid
  /// cell or worker its own stream with boundaries that do not depend on the
  /// worker count.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed) ^ mix(0x9e3779b97f4a7c15ull + index));
  }

 private:
  // splitmix64 finalizer; spreads low-entropy seeds over the full state.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace frametwirl

#endif
