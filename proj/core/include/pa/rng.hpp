#pragma once

#include <cstdint>
#include <span>

namespace pa {

/// Portable, documented PRNG so corpora reproduce across platforms and languages.
///
/// State: xoshiro256** (Blackman & Vigna). Seeding: the four state words are the first
/// four outputs of SplitMix64 started at `seed`. Bounded draws use rejection sampling on
/// the top of the 64-bit range (no modulo bias); unit() uses the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

  /// Uniform in [0, 1).
  double unit() noexcept;

  bool chance(double p) noexcept { return unit() < p; }

  template <class T>
  const T& pick(std::span<const T> items) noexcept {
    return items[below(items.size())];
  }

 private:
  std::uint64_t s_[4];
};

/// One SplitMix64 step; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace pa
