#pragma once

#include <cstdint>

#include "quatdec/matrix.hpp"

namespace quatdec {

/// Deterministic generator (splitmix64). Used instead of <random> engines so
/// that identical seeds give identical instances on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Small exact rational: numerator in [-max_num, max_num], denominator in
// [1, max_den].
Rational random_rational(SplitMix64& rng, long max_num = 3, long max_den = 3);

Quaternion random_quaternion(SplitMix64& rng, long max_num = 3,
                             long max_den = 3);

QMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                      long max_num = 3, long max_den = 3);

// Random n x n matrix with M^eta* == M; every entry keeps numerators and
// denominators within the requested bounds.
QMatrix random_eta_hermitian(SplitMix64& rng, std::size_t n, EtaAxis eta,
                             long max_num = 3, long max_den = 3);

// Random n x n matrix with M^eta* == -M.
QMatrix random_eta_skew(SplitMix64& rng, std::size_t n, EtaAxis eta,
                        long max_num = 3, long max_den = 3);

}  // namespace quatdec
