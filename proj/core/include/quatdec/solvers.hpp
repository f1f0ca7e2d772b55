#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatdec/matrix.hpp"
#include "quatdec/simdec.hpp"

namespace quatdec {

// The two equations the toolkit solves:
//   Herm:  B X B^eta* + C Y C^eta* + D Z D^eta* = A   (X, Y, Z eta-Hermitian)
//   Mixed: B X C + (B X C)^eta* + D Y D^eta*    = A   (Y eta-Hermitian)
enum class EquationKind { Herm, Mixed };

struct ConditionRecord {
  std::string label;
  std::size_t lhs = 0;  // rank of the assembled left-hand block matrix
  std::size_t rhs = 0;
  bool holds = false;
};

struct ConditionReport {
  std::vector<ConditionRecord> conditions;
  bool overall = false;
};

struct CanonicalRecord {
  std::string label;
  bool holds = false;
};

struct CanonicalReport {
  std::vector<CanonicalRecord> checks;
  bool overall = false;
};

// Rank solvability conditions, computed directly from the theorem's block
// matrices (never through the decomposition, so the rank <-> canonical
// equivalence stays a genuine cross-check between two code paths).
ConditionReport check_herm(const QMatrix& a, const QMatrix& b,
                           const QMatrix& c, const QMatrix& d, EtaAxis eta);

// For the mixed equation C is given in the theorem's p2 x m orientation;
// the decomposition internally uses C^eta*.
ConditionReport check_mixed(const QMatrix& a, const QMatrix& b,
                            const QMatrix& c, const QMatrix& d, EtaAxis eta);

// Canonical-form solvability conditions evaluated on a decomposition of
// (A, B, C, D) (for Herm) or (A, B, C^eta*, D) (for Mixed).
CanonicalReport check_herm_canonical(const SimDecomposition& dec);
CanonicalReport check_mixed_canonical(const SimDecomposition& dec);

/// Values for the free blocks of the general solution. Blocks declared
/// eta-Hermitian (or the skew block Z of the mixed equation) must satisfy
/// their symmetry or solve_* throws InvalidFreeParamsError.
struct FreeParams {
  enum class Mode { Zero, Seeded, Explicit };
  Mode mode = Mode::Zero;
  std::uint64_t seed = 0;
  std::map<std::string, QMatrix> blocks;  // keyed by label, e.g. "X11"

  static FreeParams zero() { return {}; }
  static FreeParams seeded(std::uint64_t seed) {
    return {Mode::Seeded, seed, {}};
  }
  static FreeParams with_blocks(std::map<std::string, QMatrix> blocks) {
    return {Mode::Explicit, 0, std::move(blocks)};
  }
};

/// Either Unsolvable (solvable = false, report says which conditions failed)
/// or a solution with its residual check. For Herm the solution is (X, Y, Z);
/// for Mixed it is (X, Y) and Z stays empty.
struct SolveOutcome {
  ConditionReport report;
  bool solvable = false;
  QMatrix X, Y, Z;
  bool residual_is_zero = false;
};

SolveOutcome solve_herm(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                        const QMatrix& d, EtaAxis eta,
                        const FreeParams& free = FreeParams::zero());

SolveOutcome solve_mixed(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                         const QMatrix& d, EtaAxis eta,
                         const FreeParams& free = FreeParams::zero());

// A minus the reconstructed left-hand side, exact. For Herm pass (X, Y, Z);
// for Mixed pass (X, Y) and an ignored Z.
QMatrix residual(EquationKind kind, const QMatrix& a, const QMatrix& b,
                 const QMatrix& c, const QMatrix& d, const QMatrix& x,
                 const QMatrix& y, const QMatrix& z, EtaAxis eta);

// Independent ground truth: vectorizes the equation over the reals via the
// symmetry-constrained coordinates of the unknowns and tests consistency of
// the resulting linear system by rank. Never used by the solvers.
bool oracle_solvable(EquationKind kind, const QMatrix& a, const QMatrix& b,
                     const QMatrix& c, const QMatrix& d, EtaAxis eta);

/// A pseudorandom instance that is solvable by construction, together with
/// the planted solution (Z0 empty for Mixed).
struct GeneratedInstance {
  QMatrix A, B, C, D;
  QMatrix X0, Y0, Z0;
};

GeneratedInstance gen_instance(EquationKind kind, std::size_t m,
                               std::size_t p1, std::size_t p2, std::size_t p3,
                               EtaAxis eta, std::uint64_t seed);

}  // namespace quatdec
