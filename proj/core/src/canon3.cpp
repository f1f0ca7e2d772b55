#include "quatdec/canon3.hpp"

#include <string>

#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"

namespace quatdec {

namespace {

std::size_t checked_size(long v, const char* what) {
  if (v < 0)
    throw InternalError(std::string("triple_sizes: negative size for ") + what);
  return static_cast<std::size_t>(v);
}

// Identity with E placed on the diagonal at [off, off+E.rows()).
QMatrix embed_diag(std::size_t n, const QMatrix& e, std::size_t off) {
  QMatrix out = QMatrix::identity(n);
  out.set_block(off, off, e);
  return out;
}

// Identity plus X at block position (r0, c0); the block must sit strictly
// off the diagonal band it writes to (rows and columns disjoint).
QMatrix embed_add(std::size_t n, const QMatrix& x, std::size_t r0,
                  std::size_t c0) {
  QMatrix out = QMatrix::identity(n);
  for (std::size_t s = 0; s < x.rows(); ++s)
    for (std::size_t t = 0; t < x.cols(); ++t) out(r0 + s, c0 + t) = x(s, t);
  return out;
}

struct Workspace {
  QMatrix B, C, D;
  QMatrix P1, WB, WC, WD;
  std::size_t m, p1, p2, p3;

  Workspace(const QMatrix& b, const QMatrix& c, const QMatrix& d)
      : B(b),
        C(c),
        D(d),
        P1(QMatrix::identity(b.rows())),
        WB(QMatrix::identity(b.cols())),
        WC(QMatrix::identity(c.cols())),
        WD(QMatrix::identity(d.cols())),
        m(b.rows()),
        p1(b.cols()),
        p2(c.cols()),
        p3(d.cols()) {}

  void row_op(const QMatrix& e) {
    B = e * B;
    C = e * C;
    D = e * D;
    P1 = e * P1;
  }
  void col_b(const QMatrix& f) {
    B = B * f;
    WB = WB * f;
  }
  void col_c(const QMatrix& f) {
    C = C * f;
    WC = WC * f;
  }
  void col_d(const QMatrix& f) {
    D = D * f;
    WD = WD * f;
  }
};

}  // namespace

std::vector<std::size_t> TripleSizes::row_groups(std::size_t m) const {
  return {r6,
          r2 - r6,
          r5,
          r7,
          rank_b - r2 - r5 - r7,
          r7,
          r4 - r7,
          r1 - r4,
          r3,
          m - rank_bcd};
}

std::vector<std::size_t> TripleSizes::d_col_groups(std::size_t p3) const {
  return {r3, r7, r4 - r7, r5, r6, p3 - rank_d};
}

TripleSizes triple_sizes(const QMatrix& b, const QMatrix& c,
                         const QMatrix& d) {
  if (b.rows() != c.rows() || b.rows() != d.rows())
    throw DimensionError("triple_sizes: row counts differ");

  const std::size_t m = b.rows();
  TripleSizes sz;
  sz.rank_b = rank(b);
  sz.rank_c = rank(c);
  sz.rank_d = rank(d);
  sz.rank_bc = rank(hstack({b, c}));
  sz.rank_bd = rank(hstack({b, d}));
  sz.rank_cd = rank(hstack({c, d}));
  sz.rank_bcd = rank(hstack({b, c, d}));
  const QMatrix zbc = QMatrix::zero(m, c.cols());
  const QMatrix zbb = QMatrix::zero(m, b.cols());
  sz.rank_pair = rank(vstack({hstack({d, b, zbc}), hstack({d, zbb, c})}));

  const long rb = static_cast<long>(sz.rank_b);
  const long rc = static_cast<long>(sz.rank_c);
  const long rd = static_cast<long>(sz.rank_d);
  const long rbc = static_cast<long>(sz.rank_bc);
  const long rbd = static_cast<long>(sz.rank_bd);
  const long rcd = static_cast<long>(sz.rank_cd);
  const long rbcd = static_cast<long>(sz.rank_bcd);
  const long rpair = static_cast<long>(sz.rank_pair);

  sz.r1 = checked_size(rbc - rb, "r1");
  sz.r2 = checked_size(rb + rc - rbc, "r2");
  sz.r3 = checked_size(rbcd - rbc, "r3");
  sz.r4 = checked_size(rbd + rbc - rb - rbcd, "r4");
  sz.r5 = checked_size(rpair - rbd - rc, "r5");
  sz.r6 = checked_size(rd + rb + rc - rpair, "r6");
  sz.r7 = checked_size(rbc + rcd + rbd - rbcd - rpair, "r7");

  // The sum identities the pairwise ranks force on r5, r6, r7.
  if (sz.r5 + sz.r6 != checked_size(rb + rd - rbd, "r5+r6") ||
      sz.r5 + sz.r7 != checked_size(rbc + rcd - rbcd - rc, "r5+r7"))
    throw InternalError("triple_sizes: sum identities violated");

  // Remaining group sizes must be nonnegative.
  checked_size(static_cast<long>(sz.r2) - static_cast<long>(sz.r6), "r2-r6");
  checked_size(rb - static_cast<long>(sz.r2 + sz.r5 + sz.r7), "group 5");
  checked_size(static_cast<long>(sz.r4) - static_cast<long>(sz.r7), "r4-r7");
  checked_size(static_cast<long>(sz.r1) - static_cast<long>(sz.r4), "r1-r4");
  checked_size(rd - static_cast<long>(sz.r3 + sz.r4 + sz.r5 + sz.r6),
               "d columns");
  if (sz.r3 + sz.r4 + sz.r5 + sz.r6 != sz.rank_d)
    throw InternalError("triple_sizes: r(D) decomposition violated");
  return sz;
}

QMatrix pattern_b(const TripleSizes& sz, std::size_t m, std::size_t p1) {
  QMatrix out(m, p1);
  for (std::size_t s = 0; s < sz.rank_b; ++s) out(s, s) = Quaternion::one();
  return out;
}

QMatrix pattern_c(const TripleSizes& sz, std::size_t m, std::size_t p2) {
  QMatrix out(m, p2);
  for (std::size_t s = 0; s < sz.r2; ++s)
    out(s, sz.r1 + s) = Quaternion::one();
  for (std::size_t s = 0; s < sz.r1; ++s)
    out(sz.rank_b + s, s) = Quaternion::one();
  return out;
}

QMatrix pattern_d(const TripleSizes& sz, std::size_t m, std::size_t p3) {
  QMatrix out(m, p3);
  const std::size_t rb = sz.rank_b;
  // Column group offsets: r3 | r7 | r4-r7 | r5 | r6 | rest.
  const std::size_t c2 = sz.r3;
  const std::size_t c3 = c2 + sz.r7;
  const std::size_t c4 = sz.r3 + sz.r4;
  const std::size_t c5 = c4 + sz.r5;
  for (std::size_t s = 0; s < sz.r6; ++s)  // group 1 x c5
    out(s, c5 + s) = Quaternion::one();
  for (std::size_t s = 0; s < sz.r5; ++s)  // group 3 x c4
    out(sz.r2 + s, c4 + s) = Quaternion::one();
  for (std::size_t s = 0; s < sz.r7; ++s)  // group 4 x c2
    out(sz.r2 + sz.r5 + s, c2 + s) = Quaternion::one();
  for (std::size_t s = 0; s < sz.r7; ++s)  // group 6 x c2 (coupled with 4)
    out(rb + s, c2 + s) = Quaternion::one();
  for (std::size_t s = 0; s + sz.r7 < sz.r4; ++s)  // group 7 x c3
    out(rb + sz.r7 + s, c3 + s) = Quaternion::one();
  for (std::size_t s = 0; s < sz.r3; ++s)  // group 9 x c1
    out(rb + sz.r1 + s, s) = Quaternion::one();
  return out;
}

TripleCanonical triple_canonical(const QMatrix& b, const QMatrix& c,
                                 const QMatrix& d) {
  if (b.rows() != c.rows() || b.rows() != d.rows())
    throw DimensionError("triple_canonical: row counts differ");

  const TripleSizes sz = triple_sizes(b, c, d);
  Workspace w(b, c, d);
  const std::size_t m = w.m;
  const std::size_t rb = sz.rank_b;
  const std::size_t r1 = sz.r1, r2 = sz.r2, r3 = sz.r3, r4 = sz.r4,
                    r5 = sz.r5, r6 = sz.r6, r7 = sz.r7;

  auto expect_rank = [](std::size_t got, std::size_t want, const char* where) {
    if (got != want)
      throw InternalError(std::string("triple_canonical: rank mismatch in ") +
                          where);
  };

  // Upper-row transform (acts on rows [0, rb)) with the compensating column
  // update on B; when the leading r2 x r2 corner differs from the identity,
  // C's I_{r2} block moves too and is compensated through W_C.
  auto apply_upper = [&](const QMatrix& u, bool compensate_c) {
    w.row_op(embed_diag(m, u, 0));
    w.col_b(embed_diag(w.p1, inverse(u), 0));
    if (compensate_c) {
      const QMatrix u11 = u.block(0, r2, 0, r2);
      w.col_c(embed_diag(w.p2, inverse(u11), r1));
    }
  };
  // Transform of the C-identity rows [rb, rb+r1), compensated through W_C.
  auto apply_g3 = [&](const QMatrix& u) {
    w.row_op(embed_diag(m, u, rb));
    w.col_c(embed_diag(w.p2, inverse(u), 0));
  };

  // --- B: plain equivalence canonical form.
  {
    EquivalenceCanonical ec = equivalence_canonical(w.B);
    expect_rank(ec.rank, rb, "r(B)");
    w.row_op(ec.P);
    w.col_b(ec.Q);
  }

  // --- C, below the B block: free row operations, free column operations.
  {
    EquivalenceCanonical ec = equivalence_canonical(w.C.block(rb, m, 0, w.p2));
    expect_rank(ec.rank, r1, "r1");
    w.row_op(embed_diag(m, ec.P, rb));
    w.col_c(ec.Q);
  }
  // Clear the I_{r1} columns of C inside the B rows; sources are zero in B.
  {
    const QMatrix x = w.C.block(0, rb, 0, r1);
    w.row_op(embed_add(m, -x, 0, rb));
  }
  // --- C, inside the B rows: creates the r2 | rb-r2 split.
  {
    EquivalenceCanonical ec = equivalence_canonical(w.C.block(0, rb, r1, w.p2));
    expect_rank(ec.rank, r2, "r2");
    w.row_op(embed_diag(m, ec.P, 0));
    w.col_b(embed_diag(w.p1, inverse(ec.P), 0));
    w.col_c(embed_diag(w.p2, ec.Q, r1));
  }

  // --- D. Row geography from here on: G1 = [0, r2) carries C's I_{r2},
  // G2 = [r2, rb) is zero in C, G3 = [rb, rb+r1) carries C's I_{r1},
  // G4 = [rb+r1, m) is zero in both B and C. Row operations must stay inside
  // the stabilizer of the finished patterns: full transforms within each
  // group, plus additions G1 <- {G2, G3, G4}, G2 <- G4, G3 <- G4.
  const std::size_t g3 = rb, g4 = rb + r1;

  // G4 block: both transforms free.
  {
    EquivalenceCanonical ec = equivalence_canonical(w.D.block(g4, m, 0, w.p3));
    expect_rank(ec.rank, r3, "r3");
    w.row_op(embed_diag(m, ec.P, g4));
    w.col_d(ec.Q);
  }
  // Clear column group c1 = [0, r3) everywhere above group 9.
  if (r3 > 0) {
    const QMatrix x = w.D.block(0, g4, 0, r3);
    w.row_op(embed_add(m, -x, 0, g4));
  }

  const std::size_t ca = r3;        // start of the r4-wide column group
  const std::size_t c4 = r3 + r4;   // start of the r5-wide column group
  const std::size_t c5 = c4 + r5;   // start of the r6-wide column group

  // G3 block against the remaining columns.
  {
    EquivalenceCanonical ec =
        equivalence_canonical(w.D.block(g3, g4, r3, w.p3));
    expect_rank(ec.rank, r4, "r4");
    apply_g3(ec.P);
    w.col_d(embed_diag(w.p3, ec.Q, r3));
  }

  // G2 private part: columns right of the r4 group.
  {
    EquivalenceCanonical ec =
        equivalence_canonical(w.D.block(r2, rb, c4, w.p3));
    expect_rank(ec.rank, r5, "r5");
    apply_upper(embed_diag(rb, ec.P, r2), false);
    w.col_d(embed_diag(w.p3, ec.Q, c4));
  }
  // Move the r5-row residue out of the r4 columns: column update from the
  // fresh I_{r5}; touches only rows where the c4 columns are nonzero.
  {
    const QMatrix m1 = w.D.block(r2, r2 + r5, ca, c4);
    if (!m1.is_zero()) {
      QMatrix f = QMatrix::identity(w.p3);
      for (std::size_t s = 0; s < r5; ++s)
        for (std::size_t t = 0; t < r4; ++t) f(c4 + s, ca + t) = -m1(s, t);
      w.col_d(f);
    }
  }
  // Coupled block: remaining G2 rows against the r4 columns. The column
  // operations disturb G3's I_{r4}, which is restored by a within-G3 row
  // transform; the two identity copies over the r7 columns stay aligned.
  {
    EquivalenceCanonical ec =
        equivalence_canonical(w.D.block(r2 + r5, rb, ca, c4));
    expect_rank(ec.rank, r7, "r7");
    apply_upper(embed_diag(rb, ec.P, r2 + r5), false);
    w.col_d(embed_diag(w.p3, ec.Q, ca));
    apply_g3(embed_diag(r1, inverse(ec.Q), 0));
  }
  // Clear what the coupled step left in G1 x r4-columns.
  {
    const QMatrix k = w.D.block(0, r2, ca, c4);
    if (!k.is_zero()) {
      QMatrix x(r2, r1);
      x.set_block(0, 0, -k);
      w.row_op(embed_add(m, x, 0, g3));
      QMatrix f = QMatrix::identity(w.p2);
      for (std::size_t s = 0; s < r2; ++s)
        for (std::size_t t = 0; t < r1; ++t) f(r1 + s, t) = -x(s, t);
      w.col_c(f);
    }
  }
  // Clear G1 x r5-columns from the I_{r5} rows in G2.
  {
    const QMatrix k = w.D.block(0, r2, c4, c5);
    if (!k.is_zero()) {
      QMatrix u = QMatrix::identity(rb);
      for (std::size_t s = 0; s < r2; ++s)
        for (std::size_t t = 0; t < r5; ++t) u(s, r2 + t) = -k(s, t);
      apply_upper(u, false);
    }
  }
  // G1 block against the trailing columns: creates the r6 | r2-r6 split.
  {
    EquivalenceCanonical ec = equivalence_canonical(w.D.block(0, r2, c5, w.p3));
    expect_rank(ec.rank, r6, "r6");
    apply_upper(embed_diag(rb, ec.P, 0), true);
    w.col_d(embed_diag(w.p3, ec.Q, c5));
  }

  TripleCanonical out{w.P1, w.WB, w.WC, w.WD, sz};

  // Postconditions: the staged construction must reproduce the patterns
  // bit-exactly from the original inputs.
  if (out.P1 * b * out.WB != pattern_b(sz, m, w.p1) ||
      out.P1 * c * out.WC != pattern_c(sz, m, w.p2) ||
      out.P1 * d * out.WD != pattern_d(sz, m, w.p3))
    throw InternalError("triple_canonical: pattern residue");
  return out;
}

}  // namespace quatdec
