#ifndef ITERID_RNG_HPP
#define ITERID_RNG_HPP

#include <cstdint>
#include <random>

namespace iterid {

/// splitmix64 finalizer; derives independent per-sample seeds so results do
/// not depend on how samples are split between workers.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded generator with a platform-independent integer distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi] (modulo reduction; the bias is
  /// negligible for the small ranges used here).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace iterid

#endif  // ITERID_RNG_HPP
