#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quatdec/matrix.hpp"
#include "quatdec/simdec.hpp"
#include "quatdec/solvers.hpp"

namespace quatdec {

// ---------------------------------------------------------------------------
// Quaternion literals.
//
// A literal is a sequence of signed terms; each term is an optional rational
// coefficient `p` or `p/q` followed by an optional unit in {i, j, k}; an
// omitted coefficient means 1. Examples: 1+2i-3j+4/5k, -i, 0, 3/2.

Quaternion parse_quaternion(std::string_view text);
std::string format_quaternion(const Quaternion& q);

// ---------------------------------------------------------------------------
// Text matrix files.
//
//   % comment
//   eta: j
//   kind: herm
//   matrix A 2 2
//   -1+5i-20k  -25-2i-17j-5k
//   -25-2i+17j-5k  -9-18i-14k
//   ...

enum class ProblemKind { Herm, Mixed, Decompose };

std::string kind_name(ProblemKind kind);

/// Raw parsed file: optional headers plus named matrices in file order.
struct MatrixDocument {
  std::optional<EtaAxis> eta;
  std::optional<ProblemKind> kind;
  std::vector<std::pair<std::string, QMatrix>> matrices;

  const QMatrix* find(std::string_view name) const;
};

MatrixDocument parse_matrix_document(std::istream& in);

/// A validated problem: dimensions consistent for the kind, A eta-Hermitian.
/// For Mixed, C is stored in the theorem's p2 x m orientation.
struct ProblemFile {
  EtaAxis eta = EtaAxis::I;
  ProblemKind kind = ProblemKind::Decompose;
  QMatrix A, B, C, D;
};

ProblemFile build_problem(const MatrixDocument& doc, ProblemKind kind);
ProblemFile parse_problem_file(std::istream& in, ProblemKind kind);

std::string emit_problem_file(const ProblemFile& pf);
std::string emit_solution_file(EquationKind kind, const QMatrix& x,
                               const QMatrix& y, const QMatrix& z);

// ---------------------------------------------------------------------------
// JSON emission. Quaternions are strings in the literal grammar, matrices
// arrays of arrays, ranks plain integers. Output is deterministic.

std::string emit_json(const QMatrix& m);
QMatrix parse_matrix_json(const std::string& text);

std::string emit_json(const SimDecomposition& dec);
std::string emit_json(const ConditionReport& rep, EquationKind kind,
                      EtaAxis eta);
std::string emit_json(const SolveOutcome& out, EquationKind kind, EtaAxis eta);
std::string emit_verify_json(
    EquationKind kind, EtaAxis eta, const QMatrix& residual,
    const std::vector<std::pair<std::string, bool>>& symmetry);

// Fixed-width human-readable table of a matrix, one row per line.
std::string format_matrix(const QMatrix& m);

EtaAxis parse_eta_name(std::string_view name);

}  // namespace quatdec
