#include "quatdec/elim.hpp"

#include <numeric>
#include <utility>

#include "quatdec/errors.hpp"

namespace quatdec {

namespace {

// Reduced row echelon form by left row operations. P * A = R; the pivot
// entries of R are 1 with zeros elsewhere in their columns.
struct RowReduction {
  QMatrix P;
  QMatrix R;
  std::vector<std::size_t> pivot_cols;
};

RowReduction row_reduce(const QMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RowReduction rr{QMatrix::identity(m), a, {}};
  QMatrix& M = rr.R;
  QMatrix& P = rr.P;
  std::size_t r = 0;

  auto swap_rows = [&](QMatrix& mat, std::size_t s, std::size_t t) {
    for (std::size_t c = 0; c < mat.cols(); ++c)
      std::swap(mat(s, c), mat(t, c));
  };

  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t s = r;
    while (s < m && M(s, c).is_zero()) ++s;
    if (s == m) continue;
    if (s != r) {
      swap_rows(M, s, r);
      swap_rows(P, s, r);
    }
    const Quaternion inv = inverse(M(r, c));
    for (std::size_t t = c; t < n; ++t) M(r, t) = inv * M(r, t);
    for (std::size_t t = 0; t < m; ++t) P(r, t) = inv * P(r, t);
    for (std::size_t s2 = 0; s2 < m; ++s2) {
      if (s2 == r || M(s2, c).is_zero()) continue;
      const Quaternion f = M(s2, c);
      for (std::size_t t = c; t < n; ++t) M(s2, t) -= f * M(r, t);
      for (std::size_t t = 0; t < m; ++t) P(s2, t) -= f * P(r, t);
    }
    rr.pivot_cols.push_back(c);
    ++r;
  }
  return rr;
}

}  // namespace

std::size_t rank(const QMatrix& a) {
  // Same elimination as row_reduce without tracking transforms.
  QMatrix M = a;
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t s = r;
    while (s < m && M(s, c).is_zero()) ++s;
    if (s == m) continue;
    if (s != r)
      for (std::size_t t = c; t < n; ++t) std::swap(M(s, t), M(r, t));
    const Quaternion inv = inverse(M(r, c));
    for (std::size_t t = c; t < n; ++t) M(r, t) = inv * M(r, t);
    for (std::size_t s2 = r + 1; s2 < m; ++s2) {
      if (M(s2, c).is_zero()) continue;
      const Quaternion f = M(s2, c);
      for (std::size_t t = c; t < n; ++t) M(s2, t) -= f * M(r, t);
    }
    ++r;
  }
  return r;
}

EquivalenceCanonical equivalence_canonical(const QMatrix& a) {
  const std::size_t n = a.cols();
  RowReduction rr = row_reduce(a);
  const std::size_t k = rr.pivot_cols.size();
  QMatrix& M = rr.R;
  QMatrix Q = QMatrix::identity(n);

  // Clear the non-pivot columns using the unit pivot entries.
  for (std::size_t idx = 0; idx < k; ++idx) {
    const std::size_t c = rr.pivot_cols[idx];
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      if (c2 == c || M(idx, c2).is_zero()) continue;
      const Quaternion f = M(idx, c2);
      for (std::size_t s = 0; s < M.rows(); ++s) M(s, c2) -= M(s, c) * f;
      for (std::size_t s = 0; s < n; ++s) Q(s, c2) -= Q(s, c) * f;
    }
  }

  // Permute pivot columns to the front, preserving relative order elsewhere.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  for (std::size_t c : rr.pivot_cols) order.push_back(c);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) order.push_back(c);

  QMatrix Mp(M.rows(), n), Qp(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < M.rows(); ++s) Mp(s, t) = M(s, order[t]);
    for (std::size_t s = 0; s < n; ++s) Qp(s, t) = Q(s, order[t]);
  }

  EquivalenceCanonical ec{std::move(rr.P), std::move(Qp), k};

  // The canonical pattern is exact by construction; any residue is a bug.
  QMatrix expect(a.rows(), n);
  for (std::size_t s = 0; s < k; ++s) expect(s, s) = Quaternion::one();
  if (Mp != expect)
    throw InternalError("equivalence_canonical: pattern residue");
  return ec;
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionError("inverse: matrix must be square");
  RowReduction rr = row_reduce(a);
  if (rr.pivot_cols.size() != a.rows()) throw SingularMatrixError{};
  return rr.P;
}

RationalMatrix real_expansion(const QMatrix& a) {
  RationalMatrix out(4 * a.rows(), 4 * a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Quaternion& q = a(s, t);
      const std::size_t r0 = 4 * s, c0 = 4 * t;
      // Columns are the coordinates of q*1, q*i, q*j, q*k.
      out(r0 + 0, c0 + 0) = q.w;
      out(r0 + 1, c0 + 0) = q.x;
      out(r0 + 2, c0 + 0) = q.y;
      out(r0 + 3, c0 + 0) = q.z;
      out(r0 + 0, c0 + 1) = -q.x;
      out(r0 + 1, c0 + 1) = q.w;
      out(r0 + 2, c0 + 1) = q.z;
      out(r0 + 3, c0 + 1) = -q.y;
      out(r0 + 0, c0 + 2) = -q.y;
      out(r0 + 1, c0 + 2) = -q.z;
      out(r0 + 2, c0 + 2) = q.w;
      out(r0 + 3, c0 + 2) = q.x;
      out(r0 + 0, c0 + 3) = -q.z;
      out(r0 + 1, c0 + 3) = q.y;
      out(r0 + 2, c0 + 3) = -q.x;
      out(r0 + 3, c0 + 3) = q.w;
    }
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix M = a;
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t s = r;
    while (s < m && is_zero(M(s, c))) ++s;
    if (s == m) continue;
    if (s != r)
      for (std::size_t t = c; t < n; ++t) std::swap(M(s, t), M(r, t));
    const Rational piv = M(r, c);
    for (std::size_t t = c; t < n; ++t) M(r, t) /= piv;
    for (std::size_t s2 = r + 1; s2 < m; ++s2) {
      if (is_zero(M(s2, c))) continue;
      const Rational f = M(s2, c);
      for (std::size_t t = c; t < n; ++t) M(s2, t) -= f * M(r, t);
    }
    ++r;
  }
  return r;
}

}  // namespace quatdec
