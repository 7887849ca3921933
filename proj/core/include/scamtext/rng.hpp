#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace scamtext {

/// SplitMix64 (Steele, Lea & Flood). Every random decision in the toolkit
/// flows through this generator so results are identical on all platforms;
/// standard-library distributions are never used because their output is
/// implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform01() noexcept;

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output finalizer, usable as a standalone 64-bit mixer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Child seed for a named stage: mix64(parent + golden_gamma * (tag + 1)).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) noexcept;

/// Fisher-Yates, drawing from the back.
template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) noexcept {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace scamtext
