#pragma once

#include <cstddef>
#include <vector>

#include "quatdec/canon3.hpp"
#include "quatdec/matrix.hpp"

namespace quatdec {

/// Block sizes of the simultaneous decomposition of (A, B, C, D). The row
/// space of S_A splits into eleven groups: m1..m5, m4, m6, m7, m8, a zero
/// tail, and the rank of the trailing nonsingular diagonal block Sigma.
struct BlockSizes {
  std::size_t m1 = 0, m2 = 0, m3 = 0, m4 = 0, m5 = 0, m6 = 0, m7 = 0, m8 = 0;
  std::size_t sigma_rank = 0;
  std::size_t tail = 0;  // m - r(B,C,D) - sigma_rank

  std::size_t rank_b() const { return m1 + m2 + m3 + m4 + m5; }
  std::size_t rank_c() const { return m1 + m2 + m4 + m6 + m7; }
  std::size_t rank_d() const { return m1 + m3 + m4 + m6 + m8; }
  std::size_t rank_bcd() const {
    return m1 + m2 + m3 + 2 * m4 + m5 + m6 + m7 + m8;
  }

  // The eleven row/column group sizes of S_A.
  std::vector<std::size_t> groups() const {
    return {m1, m2, m3, m4, m5, m4, m6, m7, m8, tail, sigma_rank};
  }
};

// Closed-form sizes from ranks of assembled block matrices; requires A
// square eta-Hermitian with B, C, D sharing its row count.
BlockSizes block_sizes(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                       const QMatrix& d, EtaAxis eta);

/// P * A * P^eta* = S_A, P * B * T1 = S_B, P * C * T2 = S_C,
/// P * D * T3 = S_D, all exact. S_B, S_C, S_D are the 0/1 patterns of the
/// canonical triple form; S_A is eta-Hermitian, has zero coupling blocks in
/// row/column group 10, and carries the diagonal nonsingular Sigma in group
/// 11. Sigma's entries are nonzero eta-Hermitian quaternions (an invertible
/// congruence is used instead of a unitary one, which keeps everything in
/// rational arithmetic at the price of unnormalized diagonal values).
struct SimDecomposition {
  EtaAxis eta = EtaAxis::I;
  QMatrix P, T1, T2, T3;
  QMatrix SA;
  BlockSizes sizes;

  BlockPartition partition() const { return BlockPartition(sizes.groups()); }
};

SimDecomposition simultaneous_decompose(const QMatrix& a, const QMatrix& b,
                                        const QMatrix& c, const QMatrix& d,
                                        EtaAxis eta);

// Block (s, t) of S_A under the eleven-group partition, 1-based.
QMatrix sa_block(const SimDecomposition& dec, std::size_t s, std::size_t t);

/// Special case with D vanishing: the decomposition of (A, B, C).
struct CorollarySizes {
  std::size_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
};

struct CorollaryTriple {
  SimDecomposition dec;  // decomposition with D the m x 0 matrix
  CorollarySizes sizes;
};

CorollaryTriple corollary_triple(const QMatrix& a, const QMatrix& b,
                                 const QMatrix& c, EtaAxis eta);

}  // namespace quatdec
