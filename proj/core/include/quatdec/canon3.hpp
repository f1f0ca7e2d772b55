#pragma once

#include <cstddef>
#include <vector>

#include "quatdec/matrix.hpp"

namespace quatdec {

/// Rank data of a triple (B, C, D) with a shared row count, and the seven
/// block sizes r1..r7 of its simultaneous column-equivalence canonical form.
/// The individual values of r5, r6, r7 (only the sums r5+r6 and r5+r7 are
/// forced by pairwise ranks) are pinned down through the block matrix
/// [[D,B,0],[D,0,C]]; both sum identities are revalidated on construction.
struct TripleSizes {
  std::size_t r1 = 0, r2 = 0, r3 = 0, r4 = 0, r5 = 0, r6 = 0, r7 = 0;

  // The rank inputs the sizes were derived from.
  std::size_t rank_b = 0, rank_c = 0, rank_d = 0;
  std::size_t rank_bc = 0, rank_bd = 0, rank_cd = 0, rank_bcd = 0;
  std::size_t rank_pair = 0;  // r[[D,B,0],[D,0,C]]

  // Row group sizes of the canonical forms, top to bottom:
  // r6, r2-r6, r5, r7, rb-r2-r5-r7, r7, r4-r7, r1-r4, r3, m-r(B,C,D).
  std::vector<std::size_t> row_groups(std::size_t m) const;

  // Column group sizes of the canonical D: r3, r7, r4-r7, r5, r6, remainder.
  std::vector<std::size_t> d_col_groups(std::size_t p3) const;
};

TripleSizes triple_sizes(const QMatrix& b, const QMatrix& c, const QMatrix& d);

// The exact 0/1 canonical patterns for given sizes.
QMatrix pattern_b(const TripleSizes& sz, std::size_t m, std::size_t p1);
QMatrix pattern_c(const TripleSizes& sz, std::size_t m, std::size_t p2);
QMatrix pattern_d(const TripleSizes& sz, std::size_t m, std::size_t p3);

/// Invertible P1, W_B, W_C, W_D with P1*B*W_B, P1*C*W_C, P1*D*W_D equal to
/// the canonical patterns bit-exactly.
struct TripleCanonical {
  QMatrix P1, WB, WC, WD;
  TripleSizes sizes;
};

// Requires equal row counts. The construction is a staged elimination: B is
// canonicalized first; C with row operations that keep B's pattern intact
// (compensated through W_B); D likewise against both. Sizes are derived from
// triple_sizes first and asserted against the constructive output; any
// mismatch or pattern residue throws InternalError.
TripleCanonical triple_canonical(const QMatrix& b, const QMatrix& c,
                                 const QMatrix& d);

}  // namespace quatdec
