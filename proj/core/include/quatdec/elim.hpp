#pragma once

#include <cstddef>
#include <vector>

#include "quatdec/matrix.hpp"

namespace quatdec {

// Number of pivots of noncommutative row reduction with quaternion inverses.
// Pivot selection is the first nonzero entry in column order; exact
// arithmetic makes magnitude-based pivoting unnecessary.
std::size_t rank(const QMatrix& a);

/// Invertible P, Q with P * A * Q = [[I_rank, 0], [0, 0]].
struct EquivalenceCanonical {
  QMatrix P;  // rows(A) x rows(A), invertible
  QMatrix Q;  // cols(A) x cols(A), invertible
  std::size_t rank = 0;
};

EquivalenceCanonical equivalence_canonical(const QMatrix& a);

// Two-sided inverse of a square matrix; throws SingularMatrixError.
QMatrix inverse(const QMatrix& a);

/// Dense matrix of exact rationals, used by the real-expansion oracle and
/// the solvability oracle. Not part of any production decomposition path.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Replaces each entry by its 4x4 left-regular-representation block on the
// ordered basis (1, i, j, k); a ring homomorphism into real matrices.
RationalMatrix real_expansion(const QMatrix& a);

std::size_t rank(const RationalMatrix& a);

}  // namespace quatdec
