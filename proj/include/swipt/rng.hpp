#pragma once

#include <cmath>
#include <cstdint>

namespace swipt {

/// Counter-based uniform stream: every (seed, frame) pair owns an
/// independent SplitMix64 sequence, so frame k is reproducible no matter
/// how frames are batched or which worker draws them.
class FrameStream {
 public:
  FrameStream(std::uint64_t seed, std::uint64_t frame) noexcept
      : state_(mix(seed ^ mix(frame + kGolden))) {}

  std::uint64_t next_u64() noexcept {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Exponential with the given mean by inversion: -mean ln(1 - u).
  double exponential(double mean) noexcept {
    return -mean * std::log1p(-uniform());
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace swipt
