#pragma once

#include <vector>

#include "quatdec/matrix.hpp"

namespace quatdec {

/// Result of diagonalizing an eta-Hermitian A by eta-congruence:
/// U * A * U^eta* = diag(d_1, ..., d_r) (+) 0 exactly, with every d_s a
/// nonzero eta-Hermitian scalar. U is invertible but not unitary; staying in
/// rational arithmetic rules out the square roots a unitary form would need.
struct EtaCongruenceDiag {
  QMatrix U;
  std::vector<Quaternion> diag;
  std::size_t rank = 0;
};

// Throws NotEtaHermitianError when A is not square eta-Hermitian.
EtaCongruenceDiag eta_congruence_diagonalize(const QMatrix& a, EtaAxis eta);

}  // namespace quatdec
