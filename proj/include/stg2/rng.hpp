#pragma once

// Deterministic pseudo-random streams. xoshiro256++ with splitmix64 seeding,
// hand-rolled draws only: identical seeds give identical streams on every
// platform, which the reproducibility tests rely on.

#include <cmath>
#include <cstdint>

namespace stg2 {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
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

  // Uniform on [0,1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); rejection on a power-of-two mask.
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < n) return v;
    }
  }

  // Uniform angle on [0, 2*pi).
  double angle_uniform() { return 2.0 * kPi * next_double(); }

  // Angle on [0, pi] with density (2/pi) sin^2(theta), by rejection against
  // the uniform envelope (acceptance ratio 1/2).
  double angle_sin2() {
    for (;;) {
      const double theta = kPi * next_double();
      const double s = std::sin(theta);
      if (next_double() < s * s) return theta;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace stg2
