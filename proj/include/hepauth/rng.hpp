#pragma once

#include <cstdint>
#include <random>

#include "hepauth/bitstring.hpp"

namespace hepauth {

// splitmix64 output function (Steele, Lea, Flood). Bijective over 64-bit
// state; used for seed derivation and for the PUF's keyed mixing.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Child seed for an indexed stream: one splitmix64 step taken at
// state = master + (stream+1)*gamma. Distinct streams give distinct states,
// so trial seeds never collide. This mapping is fixed for reproducibility of
// trial counts across runs and machines.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + (stream + 1) * 0x9e3779b97f4a7c15ull);
}

// Stream index reserved for deriving the PUF device seed from a master seed.
inline constexpr std::uint64_t kPufSeedStream = ~0ull - 7;

// Uniform sampler. All randomness in the library is drawn through an
// explicitly passed Sampler; nothing reads ambient randomness. Single-owner:
// never share one instance across threads.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits64() { return eng_(); }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // 1 with probability p.
  int bernoulli(double p) { return uniform() < p ? 1 : 0; }

  // Coin with Pr[0] = half_plus_delta (the paper's p0 = 1/2 + delta).
  int biased_bit(double p_zero) { return uniform() < p_zero ? 0 : 1; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection from the top to stay unbiased.
    std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
    std::uint64_t v;
    do { v = eng_(); } while (v > limit);
    return v % n;
  }

  BitString random_bits(std::size_t n) {
    BitString b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, static_cast<int>(eng_() >> 63));
    return b;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hepauth
