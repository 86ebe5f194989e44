#pragma once

#include <cmath>
#include <cstdint>

namespace loblab {

/// splitmix64 step; used for seeding and key mixing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-path generator keyed by (seed, path index).
///
/// xoshiro256++ seeded through splitmix64 so that every path draws from an
/// independent stream regardless of which thread executes it. All
/// distributions are hand-rolled on top of the raw 64-bit output, so the
/// stream is identical across standard libraries and platforms.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path_index) {
    std::uint64_t key = seed ^ (0x9e3779b97f4a7c15ULL * (path_index + 1));
    for (auto& word : state_) word = splitmix64(key);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential with the given rate (rate > 0).
  double exponential(double rate) {
    // -log1p(-u) maps u in [0,1) to (0, inf) without ever taking log(0).
    return -std::log1p(-uniform()) / rate;
  }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace loblab
