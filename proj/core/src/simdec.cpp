#include "quatdec/simdec.hpp"

#include <string>

#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"
#include "quatdec/etadiag.hpp"

namespace quatdec {

namespace {

void validate_inputs(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                     const QMatrix& d, EtaAxis eta) {
  if (a.rows() != a.cols())
    throw DimensionError("simultaneous decomposition: A must be square");
  if (b.rows() != a.rows() || c.rows() != a.rows() || d.rows() != a.rows())
    throw DimensionError(
        "simultaneous decomposition: B, C, D must share A's row count");
  if (!is_eta_hermitian(a, eta))
    throw NotEtaHermitianError(
        "simultaneous decomposition: A must be eta-Hermitian");
}

std::size_t checked(long v, const char* what) {
  if (v < 0)
    throw InternalError(std::string("block_sizes: negative ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

BlockSizes block_sizes(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                       const QMatrix& d, EtaAxis eta) {
  validate_inputs(a, b, c, d, eta);
  const std::size_t m = a.rows();
  const std::size_t p1 = b.cols(), p2 = c.cols(), p3 = d.cols();

  const long rb = static_cast<long>(rank(b));
  const long rc = static_cast<long>(rank(c));
  const long rd = static_cast<long>(rank(d));
  const long rbc = static_cast<long>(rank(hstack({b, c})));
  const long rbd = static_cast<long>(rank(hstack({b, d})));
  const long rcd = static_cast<long>(rank(hstack({c, d})));
  const long rbcd = static_cast<long>(rank(hstack({b, c, d})));
  const long rpair = static_cast<long>(rank(vstack(
      {hstack({d, b, QMatrix::zero(m, p2)}),
       hstack({d, QMatrix::zero(m, p1), c})})));

  const QMatrix bh = eta_conj_transpose(b, eta);
  const QMatrix ch = eta_conj_transpose(c, eta);
  const QMatrix dh = eta_conj_transpose(d, eta);
  const QMatrix bordered = vstack(
      {hstack({a, b, c, d}),
       hstack({bh, QMatrix::zero(p1, p1), QMatrix::zero(p1, p2),
               QMatrix::zero(p1, p3)}),
       hstack({ch, QMatrix::zero(p2, p1), QMatrix::zero(p2, p2),
               QMatrix::zero(p2, p3)}),
       hstack({dh, QMatrix::zero(p3, p1), QMatrix::zero(p3, p2),
               QMatrix::zero(p3, p3)})});
  const long rbordered = static_cast<long>(rank(bordered));

  BlockSizes sz;
  sz.m1 = checked(rd + rb + rc - rpair, "m1");
  sz.m2 = checked(rpair - rbc - rd, "m2");
  sz.m3 = checked(rpair - rbd - rc, "m3");
  sz.m4 = checked(rbc + rcd + rbd - rbcd - rpair, "m4");
  sz.m5 = checked(rbcd - rcd, "m5");
  sz.m6 = checked(rpair - rcd - rb, "m6");
  sz.m7 = checked(rbcd - rbd, "m7");
  sz.m8 = checked(rbcd - rbc, "m8");
  sz.sigma_rank = checked(rbordered - 2 * rbcd, "sigma rank");
  sz.tail = checked(static_cast<long>(m) - rbcd -
                        static_cast<long>(sz.sigma_rank),
                    "tail");
  return sz;
}

SimDecomposition simultaneous_decompose(const QMatrix& a, const QMatrix& b,
                                        const QMatrix& c, const QMatrix& d,
                                        EtaAxis eta) {
  validate_inputs(a, b, c, d, eta);
  const std::size_t m = a.rows();

  const TripleCanonical tc = triple_canonical(b, c, d);
  const TripleSizes& ls = tc.sizes;
  const std::size_t rbcd = ls.rank_bcd;
  const std::size_t tail0 = m - rbcd;

  // A under the triple transform; its trailing (group 10) diagonal block is
  // eta-Hermitian and gets diagonalized by congruence.
  const QMatrix a1 = tc.P1 * a * eta_conj_transpose(tc.P1, eta);
  const QMatrix trailing = a1.block(rbcd, m, rbcd, m);
  const EtaCongruenceDiag ed = eta_congruence_diagonalize(trailing, eta);
  const std::size_t sigma = ed.rank;

  // Reorder so the zero part comes first and Sigma last.
  QMatrix p2 = QMatrix::zero(tail0, tail0);
  for (std::size_t s = 0; s + sigma < tail0; ++s)
    p2(s, sigma + s) = Quaternion::one();
  for (std::size_t s = 0; s < sigma; ++s)
    p2(tail0 - sigma + s, s) = Quaternion::one();
  p2 = p2 * ed.U;

  QMatrix pa = QMatrix::identity(m);
  pa.set_block(rbcd, rbcd, p2);
  const QMatrix a2 = pa * a1 * eta_conj_transpose(pa, eta);

  // Bordered elimination of the coupling column against Sigma. The proof's
  // correction blocks are right-multiplied by Sigma^{-1} because Sigma is
  // diagonal nonsingular but not the identity here.
  QMatrix p3 = QMatrix::identity(m);
  if (sigma > 0) {
    const std::size_t s0 = m - sigma;
    QMatrix sigma_inv(sigma, sigma);
    for (std::size_t s = 0; s < sigma; ++s)
      sigma_inv(s, s) = inverse(ed.diag[s]);
    const QMatrix coupling = a2.block(0, s0, s0, m) * sigma_inv;
    p3.set_block(0, s0, -coupling);
  }

  SimDecomposition dec;
  dec.eta = eta;
  dec.P = p3 * pa * tc.P1;
  dec.T1 = tc.WB;
  dec.T2 = tc.WC;
  dec.T3 = tc.WD;
  dec.SA = dec.P * a * eta_conj_transpose(dec.P, eta);

  dec.sizes.m1 = ls.r6;
  dec.sizes.m2 = ls.r2 - ls.r6;
  dec.sizes.m3 = ls.r5;
  dec.sizes.m4 = ls.r7;
  dec.sizes.m5 = ls.rank_b - ls.r2 - ls.r5 - ls.r7;
  dec.sizes.m6 = ls.r4 - ls.r7;
  dec.sizes.m7 = ls.r1 - ls.r4;
  dec.sizes.m8 = ls.r3;
  dec.sizes.sigma_rank = sigma;
  dec.sizes.tail = tail0 - sigma;

  // The constructive boundaries must agree with the closed-form sizes.
  const BlockSizes formula = block_sizes(a, b, c, d, eta);
  if (formula.m1 != dec.sizes.m1 || formula.m2 != dec.sizes.m2 ||
      formula.m3 != dec.sizes.m3 || formula.m4 != dec.sizes.m4 ||
      formula.m5 != dec.sizes.m5 || formula.m6 != dec.sizes.m6 ||
      formula.m7 != dec.sizes.m7 || formula.m8 != dec.sizes.m8 ||
      formula.sigma_rank != dec.sizes.sigma_rank ||
      formula.tail != dec.sizes.tail)
    throw InternalError(
        "simultaneous_decompose: size formulas disagree with construction");

  // Defining products, checked entrywise with zero residue.
  if (dec.P * b * dec.T1 != pattern_b(ls, m, b.cols()) ||
      dec.P * c * dec.T2 != pattern_c(ls, m, c.cols()) ||
      dec.P * d * dec.T3 != pattern_d(ls, m, d.cols()))
    throw InternalError("simultaneous_decompose: pattern residue");

  // S_A structure: the (10,10) block is zero and the Sigma column group is
  // zero off its own diagonal. Couplings A(s,10) for s <= 9 legitimately
  // survive; their vanishing is a solvability condition, not an invariant.
  const std::size_t t0 = rbcd + dec.sizes.tail;
  for (std::size_t s = rbcd; s < t0; ++s)
    for (std::size_t t = rbcd; t < t0; ++t)
      if (!dec.SA(s, t).is_zero())
        throw InternalError("simultaneous_decompose: (10,10) block nonzero");
  for (std::size_t s = t0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      if (s != t && (!dec.SA(s, t).is_zero() || !dec.SA(t, s).is_zero()))
        throw InternalError("simultaneous_decompose: Sigma column not clean");
  for (std::size_t s = t0; s < m; ++s)
    if (dec.SA(s, s).is_zero())
      throw InternalError("simultaneous_decompose: Sigma entry vanished");

  return dec;
}

QMatrix sa_block(const SimDecomposition& dec, std::size_t s, std::size_t t) {
  if (s < 1 || s > 11 || t < 1 || t > 11)
    throw DimensionError("sa_block: block index out of range");
  const BlockPartition p = dec.partition();
  return extract_block(dec.SA, p, p, s - 1, t - 1);
}

CorollaryTriple corollary_triple(const QMatrix& a, const QMatrix& b,
                                 const QMatrix& c, EtaAxis eta) {
  const QMatrix d = QMatrix::zero(a.rows(), 0);
  CorollaryTriple out{simultaneous_decompose(a, b, c, d, eta), {}};
  const BlockSizes& sz = out.dec.sizes;

  // With D vanishing, only m2, m5, m7 and Sigma survive; they are exactly
  // the four sizes of the triple decomposition.
  if (sz.m1 != 0 || sz.m3 != 0 || sz.m4 != 0 || sz.m6 != 0 || sz.m8 != 0)
    throw InternalError("corollary_triple: unexpected nonzero block");
  out.sizes.n1 = sz.m2;
  out.sizes.n2 = sz.m5;
  out.sizes.n3 = sz.m7;
  out.sizes.n4 = sz.sigma_rank;
  return out;
}

}  // namespace quatdec
