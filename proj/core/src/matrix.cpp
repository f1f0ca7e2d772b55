#include "quatdec/matrix.hpp"

#include <numeric>

#include "quatdec/errors.hpp"

namespace quatdec {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t s = 0; s < n; ++s) m(s, s) = Quaternion::one();
  return m;
}

bool QMatrix::is_zero() const {
  for (const Quaternion& q : data_)
    if (!q.is_zero()) return false;
  return true;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                       std::size_t c1) const {
  if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
    throw DimensionError("block range out of bounds");
  QMatrix out(r1 - r0, c1 - c0);
  for (std::size_t s = r0; s < r1; ++s)
    for (std::size_t t = c0; t < c1; ++t) out(s - r0, t - c0) = (*this)(s, t);
  return out;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
    throw DimensionError("set_block out of bounds");
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t t = 0; t < m.cols(); ++t) (*this)(r0 + s, c0 + t) = m(s, t);
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a(s, t) != b(s, t)) return false;
  return true;
}

bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix addition: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out(s, t) = a(s, t) + b(s, t);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix subtraction: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out(s, t) = a(s, t) - b(s, t);
  return out;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out(s, t) = -a(s, t);
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: inner dimensions differ");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t u = 0; u < a.cols(); ++u) {
      const Quaternion& left = a(s, u);
      if (left.is_zero()) continue;
      for (std::size_t t = 0; t < b.cols(); ++t) {
        if (b(u, t).is_zero()) continue;
        out(s, t) += left * b(u, t);
      }
    }
  return out;
}

QMatrix scale_left(const Quaternion& q, const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out(s, t) = q * a(s, t);
  return out;
}

QMatrix scale_right(const QMatrix& a, const Quaternion& q) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) out(s, t) = a(s, t) * q;
  return out;
}

QMatrix eta_conj_transpose(const QMatrix& a, EtaAxis eta) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      out(t, s) = eta_conj(a(s, t), eta);
  return out;
}

bool is_eta_hermitian(const QMatrix& a, EtaAxis eta) {
  if (a.rows() != a.cols())
    throw DimensionError("is_eta_hermitian: matrix must be square");
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a(s, t) != eta_conj(a(t, s), eta)) return false;
  return true;
}

bool is_eta_skew(const QMatrix& a, EtaAxis eta) {
  if (a.rows() != a.cols())
    throw DimensionError("is_eta_skew: matrix must be square");
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a(s, t) != -eta_conj(a(t, s), eta)) return false;
  return true;
}

QMatrix hstack(const std::vector<QMatrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const QMatrix& p : parts) {
    if (p.rows() != rows) throw DimensionError("hstack: row counts differ");
    cols += p.cols();
  }
  QMatrix out(rows, cols);
  std::size_t c0 = 0;
  for (const QMatrix& p : parts) {
    out.set_block(0, c0, p);
    c0 += p.cols();
  }
  return out;
}

QMatrix vstack(const std::vector<QMatrix>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const QMatrix& p : parts) {
    if (p.cols() != cols) throw DimensionError("vstack: column counts differ");
    rows += p.rows();
  }
  QMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const QMatrix& p : parts) {
    out.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return out;
}

BlockPartition::BlockPartition(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t s : sizes_) {
    offsets_.push_back(total_);
    total_ += s;
  }
}

QMatrix extract_block(const QMatrix& a, const BlockPartition& rowp,
                      const BlockPartition& colp, std::size_t s,
                      std::size_t t) {
  if (rowp.total() != a.rows() || colp.total() != a.cols())
    throw DimensionError("extract_block: partition does not match matrix");
  if (s >= rowp.count() || t >= colp.count())
    throw DimensionError("extract_block: block index out of range");
  return a.block(rowp.offset(s), rowp.offset(s) + rowp.size(s), colp.offset(t),
                 colp.offset(t) + colp.size(t));
}

QMatrix assemble_blocks(const BlockPartition& rowp, const BlockPartition& colp,
                        const std::vector<std::vector<QMatrix>>& grid) {
  if (grid.size() != rowp.count())
    throw DimensionError("assemble_blocks: wrong number of block rows");
  QMatrix out(rowp.total(), colp.total());
  for (std::size_t s = 0; s < rowp.count(); ++s) {
    if (grid[s].size() != colp.count())
      throw DimensionError("assemble_blocks: wrong number of block columns");
    for (std::size_t t = 0; t < colp.count(); ++t) {
      const QMatrix& blk = grid[s][t];
      if (blk.rows() != rowp.size(s) || blk.cols() != colp.size(t))
        throw DimensionError("assemble_blocks: block shape mismatch");
      out.set_block(rowp.offset(s), colp.offset(t), blk);
    }
  }
  return out;
}

}  // namespace quatdec
