#pragma once

// Portable seeded generator used for every random object in the library.
//
//   state:    xoshiro256** (Blackman & Vigna), 4 x 64-bit words
//   seeding:  the four words are successive splitmix64 outputs starting from `seed`
//   uniform:  (next() >> 11) * 2^-53, in [0, 1)
//   gaussian: Box-Muller on (u1, u2) = (1 - uniform(), uniform()); one pair yields
//             one complex sample re = r cos(2 pi u2), im = r sin(2 pi u2),
//             r = sqrt(-2 ln u1)
//
// Any reimplementation following these steps reproduces the same test vectors.

#include <array>
#include <cstdint>
#include <limits>

#include "entmeter/tensor.hpp"

namespace entmeter {

std::uint64_t splitmix64(std::uint64_t& state);

/// Independent sub-seed for stream `stream` of a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }
  result_type next();
  double uniform();
  Complex complex_normal();
  double normal() { return complex_normal().real(); }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Haar-distributed d x d unitary (QR of a complex Ginibre matrix, phase-fixed).
CMatrix random_unitary(int d, Rng& rng);

}  // namespace entmeter
