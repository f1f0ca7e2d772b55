#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "quatdec/quaternion.hpp"

namespace quatdec {

/// Dense quaternion matrix, row-major. Zero-dimension matrices are
/// first-class values: dimensions are tracked even when no entries exist.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix zero(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, cols);
  }
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;

  // Copy of rows [r0, r1) x cols [c0, c1).
  QMatrix block(std::size_t r0, std::size_t r1, std::size_t c0,
                std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Quaternion> data_;
};

bool operator==(const QMatrix& a, const QMatrix& b);
bool operator!=(const QMatrix& a, const QMatrix& b);

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);

// Matrix product; requires a.cols() == b.rows(). Entry (s,t) is
// sum_u a(s,u) * b(u,t) with left factors kept on the left.
QMatrix operator*(const QMatrix& a, const QMatrix& b);

// q * A entrywise (q on the left) and A * q (q on the right).
QMatrix scale_left(const Quaternion& q, const QMatrix& a);
QMatrix scale_right(const QMatrix& a, const Quaternion& q);

// A^eta* = -eta A^* eta: entry (s,t) = eta_conj(A(t,s)); an involution.
QMatrix eta_conj_transpose(const QMatrix& a, EtaAxis eta);

// A square and A^eta* == A entrywise. Throws DimensionError on non-square.
bool is_eta_hermitian(const QMatrix& a, EtaAxis eta);
bool is_eta_skew(const QMatrix& a, EtaAxis eta);

QMatrix hstack(const std::vector<QMatrix>& parts);
QMatrix vstack(const std::vector<QMatrix>& parts);

/// An ordered split of a dimension into consecutive groups; sizes may be 0.
class BlockPartition {
 public:
  BlockPartition() = default;
  explicit BlockPartition(std::vector<std::size_t> sizes);

  std::size_t count() const { return sizes_.size(); }
  std::size_t size(std::size_t i) const { return sizes_[i]; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t total() const { return total_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// Block (s,t) of a under (rowp, colp); partition totals must match dims.
QMatrix extract_block(const QMatrix& a, const BlockPartition& rowp,
                      const BlockPartition& colp, std::size_t s,
                      std::size_t t);

// Exact inverse of extract_block: assembles a rowp.count() x colp.count()
// grid of blocks whose sizes must match the partitions.
QMatrix assemble_blocks(const BlockPartition& rowp, const BlockPartition& colp,
                        const std::vector<std::vector<QMatrix>>& grid);

}  // namespace quatdec
