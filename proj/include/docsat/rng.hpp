#ifndef DOCSAT_RNG_HPP
#define DOCSAT_RNG_HPP

#include <cstdint>

namespace docsat {

// SplitMix64 finalizer (Vigna). Bijective avalanche mix on 64 bits.
constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives the seed of an independent stream from a master seed and an index.
// This is the splittable seeding function used everywhere in the project:
// instance i of a suite uses mix_seed(master, i), trial t of a run uses
// mix_seed(master, t), and nested derivations just chain mix_seed calls.
constexpr uint64_t mix_seed(uint64_t master, uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// xoshiro256++ (Blackman/Vigna), state seeded by a SplitMix64 sequence.
// Fixed algorithm so trajectories reproduce bit-exactly across platforms;
// nothing here depends on std::uniform_*_distribution, which is not
// portable between standard library implementations.
class Rng {
public:
  explicit Rng(uint64_t seed) {
    uint64_t z = seed;
    for (auto &word : state_) {
      z += 0x9e3779b97f4a7c15ULL;
      word = mix64(z);
    }
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased integer in [0, n). Lemire's multiply-with-rejection.
  uint64_t below(uint64_t n) {
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < n) {
      const uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() >> 63) != 0; }

private:
  static constexpr uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  uint64_t state_[4];
};

} // namespace docsat

#endif
