#pragma once

#include <cmath>
#include <cstdint>

// Counter-seeded xoshiro256++ streams.  Every replicate gets its own stream
// derived from (base seed, stream index), so results are reproducible
// bit-for-bit regardless of scheduling.  Uniform/exponential variates are
// generated from raw bits here instead of <random> distributions, whose
// output is implementation-defined.

namespace divlab {

inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent stream seed for replicate/stream `index` under `base`.
inline uint64_t derive_stream_seed(uint64_t base, uint64_t index) {
  return mix64(base + 0x9E3779B97F4A7C15ull * (index + 1));
}

class Rng {
 public:
  explicit Rng(uint64_t seed = 0) {
    // splitmix64 expansion of the seed into the 256-bit state
    uint64_t z = seed;
    for (auto& w : s_) {
      z = mix64(z);
      w = z;
    }
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform on [0,1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // strictly positive exponential waiting time
  double exponential(double rate) {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return -std::log(u) / rate;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // unbiased integer in [0, n)
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace divlab
