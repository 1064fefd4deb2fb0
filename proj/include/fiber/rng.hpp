#pragma once

#include <cstdint>
#include <limits>

#include "fiber/bigint.hpp"

namespace fiber {

// SplitMix64 stream keyed by (seed, stream, substream): every sample gets its own stream,
// so results do not depend on how work is sharded.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0)
      : state_(mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(stream + 0x3c6ef372fe94f82bULL) ^
                   mix(substream ^ 0xa54ff53a5f1d36f1ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, n) for n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    for (;;) {
      std::uint64_t v = (*this)();
      if (v < limit) return v % n;
    }
  }

  // Uniform in [0, n) for n >= 1, drawing whole 64-bit limbs and rejecting.
  BigInt below(const BigInt& n) {
    if (n <= 0) return BigInt(0);
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t limbs = (bits + 63) / 64;
    for (;;) {
      BigInt v = 0;
      for (std::size_t i = 0; i < limbs; ++i) {
        v <<= 64;
        std::uint64_t x = (*this)();
        v += BigInt(static_cast<unsigned long>(x >> 32)) << 32;
        v += static_cast<unsigned long>(x & 0xffffffffULL);
      }
      // keep only `bits` bits so the rejection rate stays below one half
      mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
      if (v < n) return v;
    }
  }

  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

}  // namespace fiber
