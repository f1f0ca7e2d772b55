#include <doctest.h>

#include "quatdec/errors.hpp"
#include "quatdec/matrix.hpp"
#include "quatdec/random.hpp"
#include "support/sample_instances.hpp"

namespace quatdec {
namespace {

using testing::qm;

TEST_CASE("matrix product basics") {
  const QMatrix x = qm({{"1+i", "2j"}, {"k", "-1"}});
  CHECK(QMatrix::identity(2) * x == x);
  CHECK(qm({{"i"}}) * qm({{"j"}}) == qm({{"k"}}));
  CHECK_THROWS_AS((void)(QMatrix(2, 3) * QMatrix(2, 3)), DimensionError);
}

TEST_CASE("empty matrices are first class") {
  const QMatrix a(0, 3), b(3, 0);
  CHECK((a * QMatrix(3, 2)).rows() == 0);
  const QMatrix p = b * a;  // 3x3 zero through an empty inner dimension
  CHECK(p == QMatrix::zero(3, 3));
  CHECK(hstack({QMatrix(2, 0), QMatrix(2, 2)}).cols() == 2);
  CHECK(eta_conj_transpose(b, EtaAxis::I).rows() == 0);
}

TEST_CASE("eta conjugate transpose") {
  CHECK(eta_conj_transpose(QMatrix::identity(3), EtaAxis::J) ==
        QMatrix::identity(3));
  CHECK(eta_conj_transpose(qm({{"i"}}), EtaAxis::I) == qm({{"-i"}}));

  SUBCASE("reference instances have the declared symmetry") {
    const QMatrix a1 = testing::herm_instance::A();
    CHECK(eta_conj_transpose(a1, EtaAxis::J) == a1);
    CHECK(is_eta_hermitian(a1, EtaAxis::J));
    CHECK_FALSE(is_eta_hermitian(a1, EtaAxis::I));
    const QMatrix a2 = testing::mixed_instance::A();
    CHECK(is_eta_hermitian(a2, EtaAxis::I));
  }

  SUBCASE("real symmetric matrices are eta-Hermitian for every axis") {
    const QMatrix s = qm({{"1", "2"}, {"2", "-3"}});
    for (EtaAxis eta : {EtaAxis::I, EtaAxis::J, EtaAxis::K})
      CHECK(is_eta_hermitian(s, eta));
  }

  CHECK_FALSE(is_eta_hermitian(qm({{"i"}}), EtaAxis::I));
  CHECK_THROWS_AS((void)is_eta_hermitian(QMatrix(2, 3), EtaAxis::I),
                  DimensionError);
}

TEST_CASE("transpose-conjugate laws on random matrices") {
  SplitMix64 rng(21);
  for (int it = 0; it < 100; ++it) {
    const QMatrix a = random_matrix(rng, 3, 3);
    const QMatrix b = random_matrix(rng, 3, 3);
    for (EtaAxis eta : {EtaAxis::I, EtaAxis::J, EtaAxis::K}) {
      CHECK(eta_conj_transpose(eta_conj_transpose(a, eta), eta) == a);
      CHECK(eta_conj_transpose(a + b, eta) ==
            eta_conj_transpose(a, eta) + eta_conj_transpose(b, eta));
      CHECK(eta_conj_transpose(a * b, eta) ==
            eta_conj_transpose(b, eta) * eta_conj_transpose(a, eta));
    }
  }
}

TEST_CASE("block partition round trip") {
  SplitMix64 rng(22);
  const BlockPartition rowp({2, 0, 3});
  const BlockPartition colp({1, 2, 0, 1});
  const QMatrix a = random_matrix(rng, rowp.total(), colp.total());

  std::vector<std::vector<QMatrix>> grid(rowp.count());
  for (std::size_t s = 0; s < rowp.count(); ++s)
    for (std::size_t t = 0; t < colp.count(); ++t)
      grid[s].push_back(extract_block(a, rowp, colp, s, t));
  CHECK(assemble_blocks(rowp, colp, grid) == a);

  SUBCASE("shape mismatches are rejected") {
    grid[0][0] = QMatrix(5, 5);
    CHECK_THROWS_AS((void)assemble_blocks(rowp, colp, grid), DimensionError);
  }
}

TEST_CASE("blocks of an eta-Hermitian matrix") {
  SplitMix64 rng(23);
  for (EtaAxis eta : {EtaAxis::I, EtaAxis::J, EtaAxis::K}) {
    const QMatrix a = random_eta_hermitian(rng, 6, eta);
    const BlockPartition p({2, 1, 0, 3});
    for (std::size_t s = 0; s < p.count(); ++s) {
      CHECK(is_eta_hermitian(extract_block(a, p, p, s, s), eta));
      for (std::size_t t = 0; t < p.count(); ++t)
        CHECK(extract_block(a, p, p, s, t) ==
              eta_conj_transpose(extract_block(a, p, p, t, s), eta));
    }
  }
}

TEST_CASE("skew generators") {
  SplitMix64 rng(24);
  for (EtaAxis eta : {EtaAxis::I, EtaAxis::J, EtaAxis::K}) {
    const QMatrix s = random_eta_skew(rng, 4, eta);
    CHECK(is_eta_skew(s, eta));
    CHECK(eta_conj_transpose(s, eta) == -s);
  }
}

}  // namespace
}  // namespace quatdec
