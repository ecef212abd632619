#pragma once

#include <cstdint>

namespace refcalc {

/// SplitMix64 generator. Fully specified, so sampled cases are reproducible
/// across platforms and standard libraries.
///
/// Sharding discipline: case `i` of a run seeded with `seed` uses
/// `Rng(Rng::derive(seed, i))`, independent of how cases are split across workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t numerator, std::uint64_t denominator) noexcept {
    return below(denominator) < numerator;
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) noexcept {
    Rng mixer(seed ^ (index * 0xD1B54A32D192ED03ULL));
    mixer.next();
    return mixer.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace refcalc
