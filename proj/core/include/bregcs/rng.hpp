#pragma once

#include <cmath>
#include <cstdint>

namespace bregcs {

// SplitMix64: counter-based 64-bit generator (Steele, Lea & Flood 2014).
// Output i is a fixed mix of seed + (i+1)*0x9E3779B97F4A7C15, so streams are
// reproducible across platforms and independent of call history length.
// Gaussian draws use the basic (ziggurat-free) Box-Muller transform on
// consecutive uniforms; see gaussian() below for the exact mapping.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; never returns 0, safe under log().
  double uniform01_open_left() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Standard normal via Box-Muller: r = sqrt(-2 ln u1), angle = 2*pi*u2,
  // returning r*cos(angle) first and caching r*sin(angle) for the next call.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform01_open_left();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * pi_ * u2;
    cached_ = r * std::sin(angle);
    have_cached_ = true;
    return r * std::cos(angle);
  }

  // k-th derived stream seed; used to decouple signal and ensemble draws
  // that share one experiment seed.
  static std::uint64_t substream(std::uint64_t seed, int k) {
    SplitMix64 g(seed);
    std::uint64_t s = 0;
    for (int i = 0; i <= k; ++i) s = g.next_u64();
    return s;
  }

 private:
  static constexpr double pi_ = 3.14159265358979323846;
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace bregcs
