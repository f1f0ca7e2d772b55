#include "quatdec/solvers.hpp"

#include <array>
#include <string>
#include <utility>

#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"
#include "quatdec/random.hpp"

namespace quatdec {

namespace {

ConditionRecord record(std::string label, std::size_t lhs, std::size_t rhs) {
  return {std::move(label), lhs, rhs, lhs == rhs};
}

ConditionReport finish(std::vector<ConditionRecord> records) {
  ConditionReport rep{std::move(records), true};
  for (const ConditionRecord& r : rep.conditions) rep.overall &= r.holds;
  return rep;
}

CanonicalReport finish_canonical(std::vector<CanonicalRecord> checks) {
  CanonicalReport rep{std::move(checks), true};
  for (const CanonicalRecord& r : rep.checks) rep.overall &= r.holds;
  return rep;
}

void validate_herm_inputs(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                          const QMatrix& d, EtaAxis eta) {
  if (a.rows() != a.cols())
    throw DimensionError("herm equation: A must be square");
  if (b.rows() != a.rows() || c.rows() != a.rows() || d.rows() != a.rows())
    throw DimensionError("herm equation: B, C, D must share A's row count");
  if (!is_eta_hermitian(a, eta))
    throw NotEtaHermitianError("herm equation: A must be eta-Hermitian");
}

void validate_mixed_inputs(const QMatrix& a, const QMatrix& b,
                           const QMatrix& c, const QMatrix& d, EtaAxis eta) {
  if (a.rows() != a.cols())
    throw DimensionError("mixed equation: A must be square");
  if (b.rows() != a.rows() || d.rows() != a.rows())
    throw DimensionError("mixed equation: B and D must share A's row count");
  if (c.cols() != a.rows())
    throw DimensionError("mixed equation: C must have m columns");
  if (!is_eta_hermitian(a, eta))
    throw NotEtaHermitianError("mixed equation: A must be eta-Hermitian");
}

// ---------------------------------------------------------------------------
// Free-parameter machinery.

enum class BlockSymmetry { Any, Hermitian, Skew };

struct FreeBlockSpec {
  const char* label;
  std::size_t rows, cols;
  BlockSymmetry symmetry;
};

class FreeBlockResolver {
 public:
  FreeBlockResolver(const FreeParams& params, EtaAxis eta,
                    std::vector<FreeBlockSpec> specs)
      : params_(params), eta_(eta), specs_(std::move(specs)) {
    if (params_.mode == FreeParams::Mode::Explicit) {
      for (const auto& [label, mat] : params_.blocks) {
        bool known = false;
        for (const FreeBlockSpec& s : specs_) known |= (label == s.label);
        if (!known)
          throw InvalidFreeParamsError("unknown free block '" + label + "'");
      }
    }
    // Blocks are drawn in declaration order so a seed fixes all of them.
    if (params_.mode == FreeParams::Mode::Seeded) {
      SplitMix64 rng(params_.seed);
      for (const FreeBlockSpec& s : specs_) seeded_[s.label] = draw(rng, s);
    }
  }

  QMatrix get(const std::string& label) const {
    const FreeBlockSpec& spec = find(label);
    QMatrix value = QMatrix::zero(spec.rows, spec.cols);
    switch (params_.mode) {
      case FreeParams::Mode::Zero:
        break;
      case FreeParams::Mode::Seeded:
        value = seeded_.at(label);
        break;
      case FreeParams::Mode::Explicit: {
        auto it = params_.blocks.find(label);
        if (it != params_.blocks.end()) value = it->second;
        break;
      }
    }
    if (value.rows() != spec.rows || value.cols() != spec.cols)
      throw InvalidFreeParamsError("free block '" + label +
                                   "' has the wrong shape");
    if (spec.symmetry == BlockSymmetry::Hermitian &&
        !is_eta_hermitian(value, eta_))
      throw InvalidFreeParamsError("free block '" + label +
                                   "' must be eta-Hermitian");
    if (spec.symmetry == BlockSymmetry::Skew && !is_eta_skew(value, eta_))
      throw InvalidFreeParamsError("free block '" + label +
                                   "' must be skew-eta-Hermitian");
    return value;
  }

 private:
  const FreeBlockSpec& find(const std::string& label) const {
    for (const FreeBlockSpec& s : specs_)
      if (label == s.label) return s;
    throw InternalError("free block spec missing: " + label);
  }

  QMatrix draw(SplitMix64& rng, const FreeBlockSpec& s) const {
    switch (s.symmetry) {
      case BlockSymmetry::Hermitian:
        if (s.rows != s.cols)
          throw InternalError("hermitian free block must be square");
        return random_eta_hermitian(rng, s.rows, eta_);
      case BlockSymmetry::Skew:
        return random_eta_skew(rng, s.rows, eta_);
      case BlockSymmetry::Any:
        break;
    }
    return random_matrix(rng, s.rows, s.cols);
  }

  const FreeParams& params_;
  EtaAxis eta_;
  std::vector<FreeBlockSpec> specs_;
  std::map<std::string, QMatrix> seeded_;
};

// Mirrors the strict upper triangle of a block grid so the assembled matrix
// is eta-Hermitian by construction.
QMatrix assemble_hermitian_grid(const BlockPartition& part,
                                std::vector<std::vector<QMatrix>> grid,
                                EtaAxis eta) {
  const std::size_t n = part.count();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < s; ++t)
      grid[s][t] = eta_conj_transpose(grid[t][s], eta);
  return assemble_blocks(part, part, grid);
}

}  // namespace

// ---------------------------------------------------------------------------
// Rank conditions.

ConditionReport check_herm(const QMatrix& a, const QMatrix& b,
                           const QMatrix& c, const QMatrix& d, EtaAxis eta) {
  validate_herm_inputs(a, b, c, d, eta);
  const std::size_t m = a.rows();
  const std::size_t p1 = b.cols(), p2 = c.cols(), p3 = d.cols();
  const QMatrix bh = eta_conj_transpose(b, eta);
  const QMatrix ch = eta_conj_transpose(c, eta);
  const QMatrix dh = eta_conj_transpose(d, eta);
  auto z = [](std::size_t r, std::size_t cc) { return QMatrix::zero(r, cc); };

  std::vector<ConditionRecord> rec;
  rec.push_back(record("rank(A,B,C,D) == rank(B,C,D)",
                       rank(hstack({a, b, c, d})), rank(hstack({b, c, d}))));
  rec.push_back(record(
      "rank([A B C; D' 0 0]) == rank(B,C) + rank(D)",
      rank(vstack({hstack({a, b, c}), hstack({dh, z(p3, p1), z(p3, p2)})})),
      rank(hstack({b, c})) + rank(d)));
  rec.push_back(record(
      "rank([A B D; C' 0 0]) == rank(B,D) + rank(C)",
      rank(vstack({hstack({a, b, d}), hstack({ch, z(p2, p1), z(p2, p3)})})),
      rank(hstack({b, d})) + rank(c)));
  rec.push_back(record(
      "rank([A C D; B' 0 0]) == rank(C,D) + rank(B)",
      rank(vstack({hstack({a, c, d}), hstack({bh, z(p1, p2), z(p1, p3)})})),
      rank(hstack({c, d})) + rank(b)));

  const QMatrix bordered = vstack(
      {hstack({z(p3, p3), dh, dh, z(p3, p2), z(p3, p1)}),
       hstack({d, -a, z(m, m), z(m, p2), b}),
       hstack({d, z(m, m), a, c, z(m, p1)}),
       hstack({z(p2, p3), ch, z(p2, m), z(p2, p2), z(p2, p1)}),
       hstack({z(p1, p3), z(p1, m), bh, z(p1, p2), z(p1, p1)})});
  const QMatrix pair = vstack(
      {hstack({d, b, z(m, p2)}), hstack({d, z(m, p1), c})});
  rec.push_back(record("rank(bordered5) == 2 rank([D B 0; D 0 C])",
                       rank(bordered), 2 * rank(pair)));
  return finish(std::move(rec));
}

ConditionReport check_mixed(const QMatrix& a, const QMatrix& b,
                            const QMatrix& c, const QMatrix& d, EtaAxis eta) {
  validate_mixed_inputs(a, b, c, d, eta);
  const std::size_t m = a.rows();
  const std::size_t p1 = b.cols(), p2 = c.rows(), p3 = d.cols();
  const QMatrix ce = eta_conj_transpose(c, eta);  // m x p2
  const QMatrix bh = eta_conj_transpose(b, eta);
  const QMatrix dh = eta_conj_transpose(d, eta);
  auto z = [](std::size_t r, std::size_t cc) { return QMatrix::zero(r, cc); };

  std::vector<ConditionRecord> rec;
  rec.push_back(record("rank(A,B,C',D) == rank(B,C',D)",
                       rank(hstack({a, b, ce, d})), rank(hstack({b, ce, d}))));
  rec.push_back(record(
      "rank([A B C'; D' 0 0]) == rank(B,C') + rank(D)",
      rank(vstack({hstack({a, b, ce}), hstack({dh, z(p3, p1), z(p3, p2)})})),
      rank(hstack({b, ce})) + rank(d)));
  rec.push_back(record(
      "rank([A B D; B' 0 0]) == rank(B,D) + rank(B)",
      rank(vstack({hstack({a, b, d}), hstack({bh, z(p1, p1), z(p1, p3)})})),
      rank(hstack({b, d})) + rank(b)));
  rec.push_back(record(
      "rank([A C' D; C 0 0]) == rank(C',D) + rank(C)",
      rank(vstack({hstack({a, ce, d}), hstack({c, z(p2, p2), z(p2, p3)})})),
      rank(hstack({ce, d})) + rank(c)));

  const QMatrix bordered = vstack(
      {hstack({a, z(m, m), b, z(m, p2), d}),
       hstack({z(m, m), -a, z(m, p1), ce, d}),
       hstack({bh, z(p1, m), z(p1, p1), z(p1, p2), z(p1, p3)}),
       hstack({z(p2, m), c, z(p2, p1), z(p2, p2), z(p2, p3)}),
       hstack({dh, dh, z(p3, p1), z(p3, p2), z(p3, p3)})});
  const QMatrix pair = vstack(
      {hstack({b, z(m, p2), d}), hstack({z(m, p1), ce, d})});
  rec.push_back(record("rank(bordered5) == 2 rank([B 0 D; 0 C' D])",
                       rank(bordered), 2 * rank(pair)));
  return finish(std::move(rec));
}

// ---------------------------------------------------------------------------
// Canonical conditions.

CanonicalReport check_herm_canonical(const SimDecomposition& dec) {
  const EtaAxis eta = dec.eta;
  std::vector<CanonicalRecord> checks;
  checks.push_back({"Sigma = 0", dec.sizes.sigma_rank == 0});
  bool coupling_zero = true;
  for (std::size_t s = 1; s <= 9; ++s)
    coupling_zero &= sa_block(dec, s, 10).is_zero();
  checks.push_back({"A(s,10) = 0", coupling_zero});
  checks.push_back({"A49 = A69", sa_block(dec, 4, 9) == sa_block(dec, 6, 9)});
  const QMatrix a46 = sa_block(dec, 4, 6);
  checks.push_back(
      {"A46 eta-Hermitian", a46 == eta_conj_transpose(a46, eta)});
  for (const auto& [s, t] : std::array<std::pair<int, int>, 8>{
           {{2, 9}, {3, 8}, {4, 8}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {8, 9}}})
    checks.push_back({"A" + std::to_string(s) + std::to_string(t) + " = 0",
                      sa_block(dec, s, t).is_zero()});
  return finish_canonical(std::move(checks));
}

CanonicalReport check_mixed_canonical(const SimDecomposition& dec) {
  std::vector<CanonicalRecord> checks;
  checks.push_back({"Sigma = 0", dec.sizes.sigma_rank == 0});
  bool coupling_zero = true;
  for (std::size_t s = 1; s <= 9; ++s)
    coupling_zero &= sa_block(dec, s, 10).is_zero();
  checks.push_back({"A(s,10) = 0", coupling_zero});
  checks.push_back({"A44 = A66", sa_block(dec, 4, 4) == sa_block(dec, 6, 6)});
  checks.push_back({"A49 = A69", sa_block(dec, 4, 9) == sa_block(dec, 6, 9)});
  for (const auto& [s, t] : std::array<std::pair<int, int>, 9>{
           {{2, 9}, {5, 9}, {8, 9}, {6, 8}, {7, 8}, {8, 8}, {3, 5}, {4, 5},
            {5, 5}}})
    checks.push_back({"A" + std::to_string(s) + std::to_string(t) + " = 0",
                      sa_block(dec, s, t).is_zero()});
  return finish_canonical(std::move(checks));
}

// ---------------------------------------------------------------------------
// Residual.

QMatrix residual(EquationKind kind, const QMatrix& a, const QMatrix& b,
                 const QMatrix& c, const QMatrix& d, const QMatrix& x,
                 const QMatrix& y, const QMatrix& z, EtaAxis eta) {
  switch (kind) {
    case EquationKind::Herm:
      return a - (b * x * eta_conj_transpose(b, eta) +
                  c * y * eta_conj_transpose(c, eta) +
                  d * z * eta_conj_transpose(d, eta));
    case EquationKind::Mixed: {
      const QMatrix bxc = b * x * c;
      return a - (bxc + eta_conj_transpose(bxc, eta) +
                  d * y * eta_conj_transpose(d, eta));
    }
  }
  throw InternalError("residual: bad equation kind");
}

// ---------------------------------------------------------------------------
// Solvers.

SolveOutcome solve_herm(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                        const QMatrix& d, EtaAxis eta,
                        const FreeParams& free) {
  SolveOutcome out;
  out.report = check_herm(a, b, c, d, eta);

  const SimDecomposition dec = simultaneous_decompose(a, b, c, d, eta);
  const CanonicalReport canon = check_herm_canonical(dec);
  if (canon.overall != out.report.overall)
    throw InternalError(
        "solve_herm: rank and canonical conditions disagree");
  if (!out.report.overall) return out;

  const BlockSizes& sz = dec.sizes;
  const std::size_t f1 = b.cols() - sz.rank_b();
  const std::size_t f2 = c.cols() - sz.rank_c();
  const std::size_t f3 = d.cols() - sz.rank_d();

  FreeBlockResolver fb(free, eta,
                       {{"X11", sz.m1, sz.m1, BlockSymmetry::Hermitian},
                        {"X12", sz.m1, sz.m2, BlockSymmetry::Any},
                        {"X13", sz.m1, sz.m3, BlockSymmetry::Any},
                        {"X14", sz.m1, sz.m4, BlockSymmetry::Any},
                        {"X16", sz.m1, f1, BlockSymmetry::Any},
                        {"X22", sz.m2, sz.m2, BlockSymmetry::Hermitian},
                        {"X26", sz.m2, f1, BlockSymmetry::Any},
                        {"X33", sz.m3, sz.m3, BlockSymmetry::Hermitian},
                        {"X36", sz.m3, f1, BlockSymmetry::Any},
                        {"X46", sz.m4, f1, BlockSymmetry::Any},
                        {"X56", sz.m5, f1, BlockSymmetry::Any},
                        {"X66", f1, f1, BlockSymmetry::Hermitian},
                        {"Y16", sz.m4, f2, BlockSymmetry::Any},
                        {"Y22", sz.m6, sz.m6, BlockSymmetry::Hermitian},
                        {"Y24", sz.m6, sz.m1, BlockSymmetry::Any},
                        {"Y26", sz.m6, f2, BlockSymmetry::Any},
                        {"Y36", sz.m7, f2, BlockSymmetry::Any},
                        {"Y44", sz.m1, sz.m1, BlockSymmetry::Hermitian},
                        {"Y46", sz.m1, f2, BlockSymmetry::Any},
                        {"Y56", sz.m2, f2, BlockSymmetry::Any},
                        {"Y66", f2, f2, BlockSymmetry::Hermitian},
                        {"Z16", sz.m8, f3, BlockSymmetry::Any},
                        {"Z26", sz.m4, f3, BlockSymmetry::Any},
                        {"Z36", sz.m6, f3, BlockSymmetry::Any},
                        {"Z46", sz.m3, f3, BlockSymmetry::Any},
                        {"Z56", sz.m1, f3, BlockSymmetry::Any},
                        {"Z66", f3, f3, BlockSymmetry::Hermitian}});

  auto A = [&](std::size_t s, std::size_t t) { return sa_block(dec, s, t); };
  auto H = [&](const QMatrix& q) { return eta_conj_transpose(q, eta); };

  const QMatrix x11 = fb.get("X11"), x12 = fb.get("X12"), x13 = fb.get("X13"),
                x14 = fb.get("X14");
  const QMatrix y22 = fb.get("Y22"), y24 = fb.get("Y24"), y44 = fb.get("Y44");
  const QMatrix x22 = fb.get("X22"), x33 = fb.get("X33");

  const BlockPartition px({sz.m1, sz.m2, sz.m3, sz.m4, sz.m5, f1});
  const BlockPartition py({sz.m4, sz.m6, sz.m7, sz.m1, sz.m2, f2});
  const BlockPartition pz({sz.m8, sz.m4, sz.m6, sz.m3, sz.m1, f3});

  // Upper-triangular grids straight from the general-solution formulas; the
  // lower triangles are filled by eta-conjugation.
  std::vector<std::vector<QMatrix>> gx(6, std::vector<QMatrix>(6));
  gx[0] = {x11, x12, x13, x14, A(1, 5), fb.get("X16")};
  gx[1][1] = x22;
  gx[1][2] = A(2, 3);
  gx[1][3] = A(2, 4);
  gx[1][4] = A(2, 5);
  gx[1][5] = fb.get("X26");
  gx[2][2] = x33;
  gx[2][3] = A(3, 4) - A(3, 6);
  gx[2][4] = A(3, 5);
  gx[2][5] = fb.get("X36");
  gx[3][3] = A(4, 4) - A(4, 6);
  gx[3][4] = A(4, 5);
  gx[3][5] = fb.get("X46");
  gx[4][4] = A(5, 5);
  gx[4][5] = fb.get("X56");
  gx[5][5] = fb.get("X66");
  const QMatrix xh = assemble_hermitian_grid(px, std::move(gx), eta);

  std::vector<std::vector<QMatrix>> gy(6, std::vector<QMatrix>(6));
  gy[0] = {A(6, 6) - A(4, 6),        A(6, 7) - A(4, 7), A(6, 8),
           H(A(1, 6)) - H(A(1, 4)) + H(x14), H(A(2, 6)), fb.get("Y16")};
  gy[1][1] = y22;
  gy[1][2] = A(7, 8);
  gy[1][3] = y24;
  gy[1][4] = H(A(2, 7));
  gy[1][5] = fb.get("Y26");
  gy[2][2] = A(8, 8);
  gy[2][3] = H(A(1, 8));
  gy[2][4] = H(A(2, 8));
  gy[2][5] = fb.get("Y36");
  gy[3][3] = y44;
  gy[3][4] = A(1, 2) - x12;
  gy[3][5] = fb.get("Y46");
  gy[4][4] = A(2, 2) - x22;
  gy[4][5] = fb.get("Y56");
  gy[5][5] = fb.get("Y66");
  const QMatrix yh = assemble_hermitian_grid(py, std::move(gy), eta);

  std::vector<std::vector<QMatrix>> gz(6, std::vector<QMatrix>(6));
  gz[0] = {A(9, 9),    H(A(6, 9)), H(A(7, 9)),
           H(A(3, 9)), H(A(1, 9)), fb.get("Z16")};
  gz[1][1] = A(4, 6);
  gz[1][2] = A(4, 7);
  gz[1][3] = H(A(3, 6));
  gz[1][4] = H(A(1, 4) - x14);
  gz[1][5] = fb.get("Z26");
  gz[2][2] = A(7, 7) - y22;
  gz[2][3] = H(A(3, 7));
  gz[2][4] = H(A(1, 7)) - y24;
  gz[2][5] = fb.get("Z36");
  gz[3][3] = A(3, 3) - x33;
  gz[3][4] = H(A(1, 3) - x13);
  gz[3][5] = fb.get("Z46");
  gz[4][4] = A(1, 1) - x11 - y44;  // the coupled diagonal block Z55
  gz[4][5] = fb.get("Z56");
  gz[5][5] = fb.get("Z66");
  const QMatrix zh = assemble_hermitian_grid(pz, std::move(gz), eta);

  out.solvable = true;
  out.X = dec.T1 * xh * H(dec.T1);
  out.Y = dec.T2 * yh * H(dec.T2);
  out.Z = dec.T3 * zh * H(dec.T3);
  out.residual_is_zero =
      residual(EquationKind::Herm, a, b, c, d, out.X, out.Y, out.Z, eta)
          .is_zero();
  return out;
}

SolveOutcome solve_mixed(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                         const QMatrix& d, EtaAxis eta,
                         const FreeParams& free) {
  SolveOutcome out;
  out.report = check_mixed(a, b, c, d, eta);

  const QMatrix ce = eta_conj_transpose(c, eta);
  const SimDecomposition dec = simultaneous_decompose(a, b, ce, d, eta);
  const CanonicalReport canon = check_mixed_canonical(dec);
  if (canon.overall != out.report.overall)
    throw InternalError(
        "solve_mixed: rank and canonical conditions disagree");
  if (!out.report.overall) return out;

  const BlockSizes& sz = dec.sizes;
  const std::size_t f1 = b.cols() - sz.rank_b();
  const std::size_t f2 = c.rows() - sz.rank_c();
  const std::size_t f3 = d.cols() - sz.rank_d();

  FreeBlockResolver fb(free, eta,
                       {{"X11", sz.m1, sz.m4, BlockSymmetry::Any},
                        {"X12", sz.m1, sz.m6, BlockSymmetry::Any},
                        {"X14", sz.m1, sz.m1, BlockSymmetry::Any},
                        {"X16", sz.m1, f2, BlockSymmetry::Any},
                        {"X24", sz.m2, sz.m1, BlockSymmetry::Any},
                        {"X26", sz.m2, f2, BlockSymmetry::Any},
                        {"X32", sz.m3, sz.m6, BlockSymmetry::Any},
                        {"X34", sz.m3, sz.m1, BlockSymmetry::Any},
                        {"X36", sz.m3, f2, BlockSymmetry::Any},
                        {"X46", sz.m4, f2, BlockSymmetry::Any},
                        {"X56", sz.m5, f2, BlockSymmetry::Any},
                        {"X61", f1, sz.m4, BlockSymmetry::Any},
                        {"X62", f1, sz.m6, BlockSymmetry::Any},
                        {"X63", f1, sz.m7, BlockSymmetry::Any},
                        {"X64", f1, sz.m1, BlockSymmetry::Any},
                        {"X65", f1, sz.m2, BlockSymmetry::Any},
                        {"X66", f1, f2, BlockSymmetry::Any},
                        {"Zskew", sz.m2, sz.m2, BlockSymmetry::Skew},
                        {"Y16", sz.m8, f3, BlockSymmetry::Any},
                        {"Y26", sz.m4, f3, BlockSymmetry::Any},
                        {"Y36", sz.m6, f3, BlockSymmetry::Any},
                        {"Y46", sz.m3, f3, BlockSymmetry::Any},
                        {"Y56", sz.m1, f3, BlockSymmetry::Any},
                        {"Y66", f3, f3, BlockSymmetry::Hermitian}});

  auto A = [&](std::size_t s, std::size_t t) { return sa_block(dec, s, t); };
  auto H = [&](const QMatrix& q) { return eta_conj_transpose(q, eta); };

  const QMatrix x11 = fb.get("X11"), x12 = fb.get("X12"), x14 = fb.get("X14"),
                x24 = fb.get("X24"), x32 = fb.get("X32"), x34 = fb.get("X34");
  const Quaternion half = Quaternion::real(make_rational(1, 2));

  // X-hat rows are the B column groups, columns the C' column groups.
  const BlockPartition px({sz.m1, sz.m2, sz.m3, sz.m4, sz.m5, f1});
  const BlockPartition qx({sz.m4, sz.m6, sz.m7, sz.m1, sz.m2, f2});

  const QMatrix x44d = H(A(1, 4)) - H(A(1, 6)) + H(x11);

  std::vector<std::vector<QMatrix>> gx(6);
  gx[0] = {x11, x12, A(1, 8), x14, A(1, 2) - H(x24), fb.get("X16")};
  gx[1] = {A(2, 6), A(2, 7), A(2, 8), x24,
           scale_left(half, A(2, 2)) + fb.get("Zskew"), fb.get("X26")};
  gx[2] = {A(3, 6) - A(3, 4), x32, A(3, 8), x34, H(A(2, 3)), fb.get("X36")};
  gx[3] = {A(4, 6) - A(4, 4), A(4, 7) - A(6, 7), A(4, 8), x44d, H(A(2, 4)),
           fb.get("X46")};
  gx[4] = {A(5, 6), A(5, 7), A(5, 8), H(A(1, 5)), H(A(2, 5)), fb.get("X56")};
  gx[5] = {fb.get("X61"), fb.get("X62"), fb.get("X63"),
           fb.get("X64"), fb.get("X65"), fb.get("X66")};
  const QMatrix xh = assemble_blocks(px, qx, gx);

  const BlockPartition py({sz.m8, sz.m4, sz.m6, sz.m3, sz.m1, f3});
  std::vector<std::vector<QMatrix>> gy(6, std::vector<QMatrix>(6));
  gy[0] = {A(9, 9),    H(A(4, 9)), H(A(7, 9)),
           H(A(3, 9)), H(A(1, 9)), fb.get("Y16")};
  gy[1][1] = A(4, 4);
  gy[1][2] = A(6, 7);
  gy[1][3] = H(A(3, 4));
  gy[1][4] = H(A(1, 4)) - x44d;
  gy[1][5] = fb.get("Y26");
  gy[2][2] = A(7, 7);
  gy[2][3] = H(A(3, 7)) - H(x32);
  gy[2][4] = H(A(1, 7)) - H(x12);
  gy[2][5] = fb.get("Y36");
  gy[3][3] = A(3, 3);
  gy[3][4] = H(A(1, 3)) - x34;
  gy[3][5] = fb.get("Y46");
  gy[4][4] = A(1, 1) - x14 - H(x14);
  gy[4][5] = fb.get("Y56");
  gy[5][5] = fb.get("Y66");
  const QMatrix yh = assemble_hermitian_grid(py, std::move(gy), eta);

  out.solvable = true;
  out.X = dec.T1 * xh * H(dec.T2);
  out.Y = dec.T3 * yh * H(dec.T3);
  out.Z = QMatrix();
  out.residual_is_zero =
      residual(EquationKind::Mixed, a, b, c, d, out.X, out.Y, out.Z, eta)
          .is_zero();
  return out;
}

// ---------------------------------------------------------------------------
// Independent solvability oracle.

namespace {

// Real coordinates of M, four per entry, row-major.
std::vector<Rational> vec_real(const QMatrix& m) {
  std::vector<Rational> v;
  v.reserve(4 * m.rows() * m.cols());
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t t = 0; t < m.cols(); ++t) {
      const Quaternion& q = m(s, t);
      v.push_back(q.w);
      v.push_back(q.x);
      v.push_back(q.y);
      v.push_back(q.z);
    }
  return v;
}

std::vector<Quaternion> all_units() {
  return {Quaternion::one(), Quaternion::unit(EtaAxis::I),
          Quaternion::unit(EtaAxis::J), Quaternion::unit(EtaAxis::K)};
}

// Units spanning the eta-Hermitian scalars: 1 and the two other axes.
std::vector<Quaternion> herm_units(EtaAxis eta) {
  std::vector<Quaternion> out{Quaternion::one()};
  for (EtaAxis axis : {EtaAxis::I, EtaAxis::J, EtaAxis::K})
    if (axis != eta) out.push_back(Quaternion::unit(axis));
  return out;
}

// Basis of the eta-Hermitian n x n matrices.
std::vector<QMatrix> hermitian_basis(std::size_t n, EtaAxis eta) {
  std::vector<QMatrix> basis;
  for (std::size_t s = 0; s < n; ++s)
    for (const Quaternion& u : herm_units(eta)) {
      QMatrix e(n, n);
      e(s, s) = u;
      basis.push_back(std::move(e));
    }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      for (const Quaternion& u : all_units()) {
        QMatrix e(n, n);
        e(s, t) = u;
        e(t, s) = eta_conj(u, eta);
        basis.push_back(std::move(e));
      }
  return basis;
}

std::vector<QMatrix> full_basis(std::size_t rows, std::size_t cols) {
  std::vector<QMatrix> basis;
  for (std::size_t s = 0; s < rows; ++s)
    for (std::size_t t = 0; t < cols; ++t)
      for (const Quaternion& u : all_units()) {
        QMatrix e(rows, cols);
        e(s, t) = u;
        basis.push_back(std::move(e));
      }
  return basis;
}

}  // namespace

bool oracle_solvable(EquationKind kind, const QMatrix& a, const QMatrix& b,
                     const QMatrix& c, const QMatrix& d, EtaAxis eta) {
  std::vector<std::vector<Rational>> columns;
  const std::size_t m = a.rows();

  if (kind == EquationKind::Herm) {
    validate_herm_inputs(a, b, c, d, eta);
    const QMatrix bh = eta_conj_transpose(b, eta);
    const QMatrix ch = eta_conj_transpose(c, eta);
    const QMatrix dh = eta_conj_transpose(d, eta);
    for (const QMatrix& e : hermitian_basis(b.cols(), eta))
      columns.push_back(vec_real(b * e * bh));
    for (const QMatrix& e : hermitian_basis(c.cols(), eta))
      columns.push_back(vec_real(c * e * ch));
    for (const QMatrix& e : hermitian_basis(d.cols(), eta))
      columns.push_back(vec_real(d * e * dh));
  } else {
    validate_mixed_inputs(a, b, c, d, eta);
    const QMatrix dh = eta_conj_transpose(d, eta);
    for (const QMatrix& e : full_basis(b.cols(), c.rows())) {
      const QMatrix bec = b * e * c;
      columns.push_back(vec_real(bec + eta_conj_transpose(bec, eta)));
    }
    for (const QMatrix& e : hermitian_basis(d.cols(), eta))
      columns.push_back(vec_real(d * e * dh));
  }

  const std::vector<Rational> rhs = vec_real(a);
  const std::size_t rows = 4 * m * m;
  RationalMatrix coeff(rows, columns.size());
  RationalMatrix augmented(rows, columns.size() + 1);
  for (std::size_t t = 0; t < columns.size(); ++t)
    for (std::size_t s = 0; s < rows; ++s) {
      coeff(s, t) = columns[t][s];
      augmented(s, t) = columns[t][s];
    }
  for (std::size_t s = 0; s < rows; ++s) augmented(s, columns.size()) = rhs[s];
  return rank(coeff) == rank(augmented);
}

// ---------------------------------------------------------------------------
// Instance generation.

GeneratedInstance gen_instance(EquationKind kind, std::size_t m,
                               std::size_t p1, std::size_t p2, std::size_t p3,
                               EtaAxis eta, std::uint64_t seed) {
  SplitMix64 rng(seed);
  GeneratedInstance out;
  out.B = random_matrix(rng, m, p1);
  out.D = random_matrix(rng, m, p3);
  switch (kind) {
    case EquationKind::Herm: {
      out.C = random_matrix(rng, m, p2);
      out.X0 = random_eta_hermitian(rng, p1, eta);
      out.Y0 = random_eta_hermitian(rng, p2, eta);
      out.Z0 = random_eta_hermitian(rng, p3, eta);
      out.A = out.B * out.X0 * eta_conj_transpose(out.B, eta) +
              out.C * out.Y0 * eta_conj_transpose(out.C, eta) +
              out.D * out.Z0 * eta_conj_transpose(out.D, eta);
      break;
    }
    case EquationKind::Mixed: {
      out.C = random_matrix(rng, p2, m);
      out.X0 = random_matrix(rng, p1, p2);
      out.Y0 = random_eta_hermitian(rng, p3, eta);
      const QMatrix bxc = out.B * out.X0 * out.C;
      out.A = bxc + eta_conj_transpose(bxc, eta) +
              out.D * out.Y0 * eta_conj_transpose(out.D, eta);
      break;
    }
  }
  return out;
}

}  // namespace quatdec
