#ifndef FWH_RNG_HPP
#define FWH_RNG_HPP

#include <cstdint>

namespace fwh {

/// SplitMix64 generator (Steele/Lea/Flood mixing constants).
///
/// Used everywhere instead of <random> engines so that seeded runs produce
/// identical draws on every platform and standard library. Per-trial streams
/// are derived by counter from a master seed, so concurrent trial execution
/// cannot change results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform draw from the inclusive range [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Stream #index derived from a master seed; streams with distinct indices
  /// are statistically independent and order-insensitive.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return SplitMix64(z ^ (z >> 31));
  }

 private:
  std::uint64_t state_;
};

/// Default seed for bare CLI invocations ("FW" in ASCII followed by 2002).
inline constexpr std::uint64_t kDefaultSeed = 0x46572002ull;

}  // namespace fwh

#endif  // FWH_RNG_HPP
