#include <doctest.h>

#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"
#include "quatdec/random.hpp"
#include "support/sample_instances.hpp"

namespace quatdec {
namespace {

using testing::qm;

TEST_CASE("rank basics") {
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix::zero(4, 2)) == 0);
  CHECK(rank(QMatrix(0, 5)) == 0);

  // The j-Hermitian reference instance has a rank-2 coefficient block.
  const QMatrix bcd = hstack({testing::herm_instance::B(),
                              testing::herm_instance::C(),
                              testing::herm_instance::D()});
  CHECK(rank(bcd) == 2);
}

TEST_CASE("rank of planted products matches the real expansion oracle") {
  SplitMix64 rng(31);
  for (int it = 0; it < 60; ++it) {
    const std::size_t m = 1 + rng.below(4);
    const std::size_t n = 1 + rng.below(4);
    const std::size_t r = rng.below(std::min(m, n) + 1);
    const QMatrix u = random_matrix(rng, m, r);
    const QMatrix v = random_matrix(rng, r, n);
    const QMatrix a = u * v;
    const std::size_t rk = rank(a);
    CHECK(rk <= r);
    CHECK(4 * rk == rank(real_expansion(a)));
  }
}

TEST_CASE("rank is invariant under eta conjugation and invertible factors") {
  SplitMix64 rng(32);
  for (int it = 0; it < 60; ++it) {
    const QMatrix a = random_matrix(rng, 3, 4);
    const std::size_t rk = rank(a);
    for (EtaAxis eta : {EtaAxis::I, EtaAxis::J, EtaAxis::K})
      CHECK(rank(eta_conj_transpose(a, eta)) == rk);

    QMatrix p;
    do {
      p = random_matrix(rng, 3, 3);
    } while (rank(p) != 3);
    CHECK(rank(p * a) == rk);
  }
}

TEST_CASE("equivalence canonical form") {
  SUBCASE("zero matrix") {
    const EquivalenceCanonical ec = equivalence_canonical(QMatrix::zero(3, 2));
    CHECK(ec.rank == 0);
    CHECK(ec.P == QMatrix::identity(3));
    CHECK(ec.Q == QMatrix::identity(2));
  }
  SUBCASE("identity") {
    CHECK(equivalence_canonical(QMatrix::identity(4)).rank == 4);
  }
  SUBCASE("random matrices reproduce the pattern exactly") {
    SplitMix64 rng(33);
    for (int it = 0; it < 60; ++it) {
      const QMatrix a = random_matrix(rng, 4, 5);
      const EquivalenceCanonical ec = equivalence_canonical(a);
      QMatrix expect(4, 5);
      for (std::size_t s = 0; s < ec.rank; ++s)
        expect(s, s) = Quaternion::one();
      CHECK(ec.P * a * ec.Q == expect);
      CHECK(rank(ec.P) == 4);
      CHECK(rank(ec.Q) == 5);
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(QMatrix::identity(3)) == QMatrix::identity(3));
  CHECK(inverse(qm({{"i"}})) == qm({{"-i"}}));
  CHECK_THROWS_AS((void)inverse(QMatrix::zero(2, 2)), SingularMatrixError);
  CHECK_THROWS_AS((void)inverse(QMatrix(2, 3)), DimensionError);

  SplitMix64 rng(34);
  for (int it = 0; it < 40; ++it) {
    QMatrix a;
    do {
      a = random_matrix(rng, 4, 4);
    } while (rank(a) != 4);
    const QMatrix ainv = inverse(a);
    CHECK(a * ainv == QMatrix::identity(4));
    CHECK(ainv * a == QMatrix::identity(4));

    // Right-multiplying by X then X^{-1} reconstructs the original.
    const QMatrix b = random_matrix(rng, 3, 4);
    CHECK(b * a * ainv == b);
  }
}

TEST_CASE("real expansion") {
  SUBCASE("image of i") {
    const RationalMatrix e = real_expansion(qm({{"i"}}));
    const long expect[4][4] = {
        {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(e(r, c) == expect[r][c]);
  }
  SUBCASE("ring homomorphism") {
    SplitMix64 rng(35);
    for (int it = 0; it < 40; ++it) {
      const QMatrix a = random_matrix(rng, 2, 3);
      const QMatrix b = random_matrix(rng, 3, 2);
      const RationalMatrix ea = real_expansion(a);
      const RationalMatrix eb = real_expansion(b);
      const RationalMatrix eab = real_expansion(a * b);
      // Multiply the real matrices and compare entrywise.
      RationalMatrix prod(ea.rows(), eb.cols());
      for (std::size_t s = 0; s < ea.rows(); ++s)
        for (std::size_t u = 0; u < ea.cols(); ++u)
          for (std::size_t t = 0; t < eb.cols(); ++t)
            prod(s, t) += ea(s, u) * eb(u, t);
      for (std::size_t s = 0; s < prod.rows(); ++s)
        for (std::size_t t = 0; t < prod.cols(); ++t)
          CHECK(prod(s, t) == eab(s, t));
    }
  }
  SUBCASE("rank law") {
    SplitMix64 rng(36);
    for (int it = 0; it < 40; ++it) {
      const QMatrix a = random_matrix(rng, 3, 4);
      CHECK(rank(real_expansion(a)) == 4 * rank(a));
    }
  }
}

}  // namespace
}  // namespace quatdec
