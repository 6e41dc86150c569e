// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rfuwoc::mc {

/// SplitMix64 mixing step (Steele/Lea/Flood; Vigna's fixed-increment
/// variant). Passes BigCrush on its own and is the usual choice for
/// deriving independent substreams from a (seed, counter) pair.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// One reproducible random stream, addressed by (master_seed, stream_index).
/// Streams with distinct indices are statistically independent; the mapping
/// is fixed, so results do not depend on how streams are assigned to
/// threads.
class Stream {
 public:
  Stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    // Two mixing rounds decorrelate the (seed, index) lattice.
    std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ull * (stream_index + 1));
    state_ = splitmix64_next(s);
    state_ ^= splitmix64_next(s);
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform on the open interval (0, 1); safe as a log/inverse-cdf input.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double scale) { return -scale * std::log(uniform01()); }

  /// Standard normal via Box-Muller (single draw, no cached state).
  double normal01() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze, with the boost step for
  /// shape < 1.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform01();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      const double x = normal01();
      const double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = uniform01();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace rfuwoc::mc
