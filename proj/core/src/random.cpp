#include "quatdec/random.hpp"

namespace quatdec {

Rational random_rational(SplitMix64& rng, long max_num, long max_den) {
  const long num =
      static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * max_num + 1))) -
      max_num;
  const long den =
      1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(max_den)));
  return make_rational(num, den);
}

Quaternion random_quaternion(SplitMix64& rng, long max_num, long max_den) {
  Rational w = random_rational(rng, max_num, max_den);
  Rational x = random_rational(rng, max_num, max_den);
  Rational y = random_rational(rng, max_num, max_den);
  Rational z = random_rational(rng, max_num, max_den);
  return {std::move(w), std::move(x), std::move(y), std::move(z)};
}

QMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                      long max_num, long max_den) {
  QMatrix out(rows, cols);
  for (std::size_t s = 0; s < rows; ++s)
    for (std::size_t t = 0; t < cols; ++t)
      out(s, t) = random_quaternion(rng, max_num, max_den);
  return out;
}

QMatrix random_eta_hermitian(SplitMix64& rng, std::size_t n, EtaAxis eta,
                             long max_num, long max_den) {
  QMatrix out(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    Quaternion d = random_quaternion(rng, max_num, max_den);
    d.axis_coefficient(eta) = 0;
    out(s, s) = d;
    for (std::size_t t = s + 1; t < n; ++t) {
      Quaternion q = random_quaternion(rng, max_num, max_den);
      out(t, s) = eta_conj(q, eta);
      out(s, t) = std::move(q);
    }
  }
  return out;
}

QMatrix random_eta_skew(SplitMix64& rng, std::size_t n, EtaAxis eta,
                        long max_num, long max_den) {
  QMatrix out(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    // Skew diagonal entries are rational multiples of eta.
    Quaternion d;
    d.axis_coefficient(eta) = random_rational(rng, max_num, max_den);
    out(s, s) = d;
    for (std::size_t t = s + 1; t < n; ++t) {
      Quaternion q = random_quaternion(rng, max_num, max_den);
      out(t, s) = -eta_conj(q, eta);
      out(s, t) = std::move(q);
    }
  }
  return out;
}

}  // namespace quatdec
