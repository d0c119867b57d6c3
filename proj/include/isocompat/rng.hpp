#pragma once

#include <cmath>
#include <cstdint>

namespace isocompat {

/// SplitMix64 finalizer. Used both as a mixing function and as the stream step.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// Derive a child stream id; distinct labels give statistically independent streams.
constexpr std::uint64_t child_stream(std::uint64_t parent, std::uint64_t label) noexcept {
  return mix64(parent ^ mix64((label + 1) * kGolden));
}

/// Counter-based generator: the state is a pure function of (seed, stream, index),
/// so element i of a sample list does not depend on how many threads produced it.
///
/// All transforms (uniform, normal) are spelled out here instead of going through
/// <random> distributions, whose output is implementation-defined.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept
      : state_(mix64(seed ^ mix64(stream + kGolden)) ^ mix64(index * kGolden + 0x632be59bd9b4e019ULL)) {}

  std::uint64_t next() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  bool coin() noexcept { return (next() >> 63) != 0; }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace isocompat
