// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace invmap {

/// SplitMix64: tiny, fast, and bit-identical on every platform, which the
/// search determinism contract needs (std:: distributions are not portable).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); the modulo bias is below 2^-40 for the bounds
  /// used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Independent substream for one candidate index.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mixer.next());
  }

private:
  std::uint64_t state_;
};

}  // namespace invmap
