#include "quatdec/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "quatdec/errors.hpp"

namespace quatdec {

namespace {

using nlohmann::json;

bool is_unit_char(char c) { return c == 'i' || c == 'j' || c == 'k'; }

EtaAxis axis_of(char c) {
  switch (c) {
    case 'i': return EtaAxis::I;
    case 'j': return EtaAxis::J;
    default: return EtaAxis::K;
  }
}

}  // namespace

EtaAxis parse_eta_name(std::string_view name) {
  if (name == "i") return EtaAxis::I;
  if (name == "j") return EtaAxis::J;
  if (name == "k") return EtaAxis::K;
  throw ParseError("eta must be one of i, j, k", 0, 0);
}

Quaternion parse_quaternion(std::string_view text) {
  Quaternion result;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  bool first = true;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, 0, pos + 1);
  };

  while (pos < n) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = (text[pos] == '-');
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    if (pos >= n) fail("dangling sign");

    const bool has_digits = std::isdigit(static_cast<unsigned char>(text[pos]));
    Rational coeff(1);
    if (has_digits) {
      std::size_t start = pos;
      while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      Integer num(std::string(text.substr(start, pos - start)), 10);
      Integer den(1);
      if (pos < n && text[pos] == '/') {
        ++pos;
        if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
          fail("expected digits after '/'");
        start = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        den = Integer(std::string(text.substr(start, pos - start)), 10);
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
    }

    if (negative) coeff = -coeff;

    if (pos < n && is_unit_char(text[pos])) {
      result.axis_coefficient(axis_of(text[pos])) += coeff;
      ++pos;
    } else if (has_digits) {
      result.w += coeff;
    } else {
      fail("expected a coefficient or a unit");
    }
    first = false;
  }
  if (first) throw ParseError("empty quaternion literal", 0, 1);
  return result;
}

std::string format_quaternion(const Quaternion& q) {
  if (q.is_zero()) return "0";
  std::string out;
  auto emit = [&out](const Rational& coeff, char unit) {
    if (is_zero(coeff)) return;
    const bool negative = sgn(coeff) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (unit == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += unit;
    }
  };
  emit(q.w, 0);
  emit(q.x, 'i');
  emit(q.y, 'j');
  emit(q.z, 'k');
  return out;
}

std::string kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Herm: return "herm";
    case ProblemKind::Mixed: return "mixed";
    case ProblemKind::Decompose: return "decompose";
  }
  return "?";
}

const QMatrix* MatrixDocument::find(std::string_view name) const {
  for (const auto& [n, m] : matrices)
    if (n == name) return &m;
  return nullptr;
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next line that is neither blank nor a % comment; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t s = line.find_first_not_of(" \t");
      if (s == std::string::npos) continue;
      if (line[s] == '%') continue;
      out = line;
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

MatrixDocument parse_matrix_document(std::istream& in) {
  MatrixDocument doc;
  LineReader reader{in};
  std::string line;

  while (reader.next(line)) {
    const std::vector<std::string> tokens = split_tokens(line);
    const std::string& head = tokens.front();

    if (head == "eta:") {
      if (tokens.size() != 2)
        throw ParseError("usage: eta: <i|j|k>", reader.line_no, 1);
      doc.eta = parse_eta_name(tokens[1]);
    } else if (head == "kind:") {
      if (tokens.size() != 2)
        throw ParseError("usage: kind: <herm|mixed|decompose>", reader.line_no,
                         1);
      if (tokens[1] == "herm")
        doc.kind = ProblemKind::Herm;
      else if (tokens[1] == "mixed")
        doc.kind = ProblemKind::Mixed;
      else if (tokens[1] == "decompose")
        doc.kind = ProblemKind::Decompose;
      else
        throw ParseError("unknown kind '" + tokens[1] + "'", reader.line_no, 1);
    } else if (head == "matrix") {
      if (tokens.size() != 4)
        throw ParseError("usage: matrix <NAME> <rows> <cols>", reader.line_no,
                         1);
      const std::string& name = tokens[1];
      if (doc.find(name))
        throw ParseError("matrix '" + name + "' declared twice",
                         reader.line_no, 1);
      std::size_t rows = 0, cols = 0;
      try {
        rows = std::stoul(tokens[2]);
        cols = std::stoul(tokens[3]);
      } catch (const std::exception&) {
        throw ParseError("matrix dimensions must be nonnegative integers",
                         reader.line_no, 1);
      }
      QMatrix m(rows, cols);
      if (rows > 0 && cols > 0) {
        for (std::size_t r = 0; r < rows; ++r) {
          std::string data;
          if (!reader.next(data))
            throw ParseError("matrix '" + name + "': unexpected end of file",
                             reader.line_no, 1);
          const std::vector<std::string> entries = split_tokens(data);
          if (entries.size() != cols)
            throw DimensionError("matrix " + name + " row " +
                                 std::to_string(r + 1) + ": expected " +
                                 std::to_string(cols) + " entries, got " +
                                 std::to_string(entries.size()));
          for (std::size_t cidx = 0; cidx < cols; ++cidx) {
            try {
              m(r, cidx) = parse_quaternion(entries[cidx]);
            } catch (const ParseError& e) {
              throw ParseError("matrix " + name + " row " +
                                   std::to_string(r + 1) + ", entry " +
                                   std::to_string(cidx + 1) + ": " + e.what(),
                               reader.line_no, e.column);
            }
          }
        }
      }
      doc.matrices.emplace_back(name, std::move(m));
    } else {
      throw ParseError("unrecognized directive '" + head + "'", reader.line_no,
                       1);
    }
  }
  return doc;
}

ProblemFile build_problem(const MatrixDocument& doc, ProblemKind kind) {
  if (!doc.eta) throw ParseError("missing 'eta:' header", 0, 0);
  ProblemFile pf;
  pf.eta = *doc.eta;
  pf.kind = kind;

  for (const char* name : {"A", "B", "C", "D"})
    if (!doc.find(name))
      throw ParseError(std::string("missing matrix ") + name, 0, 0);
  pf.A = *doc.find("A");
  pf.B = *doc.find("B");
  pf.C = *doc.find("C");
  pf.D = *doc.find("D");

  const std::size_t m = pf.A.rows();
  if (pf.A.cols() != m) throw DimensionError("matrix A must be square");
  if (pf.B.rows() != m) throw DimensionError("matrix B must have m rows");
  if (pf.D.rows() != m) throw DimensionError("matrix D must have m rows");
  if (kind == ProblemKind::Mixed) {
    if (pf.C.cols() != m)
      throw DimensionError("matrix C must have m columns (mixed orientation)");
  } else if (pf.C.rows() != m) {
    throw DimensionError("matrix C must have m rows");
  }
  if (!is_eta_hermitian(pf.A, pf.eta))
    throw SymmetryError(std::string("matrix A is not ") +
                        axis_name(pf.eta) + "-Hermitian");
  return pf;
}

ProblemFile parse_problem_file(std::istream& in, ProblemKind kind) {
  return build_problem(parse_matrix_document(in), kind);
}

namespace {

void emit_matrix_text(std::string& out, const std::string& name,
                      const QMatrix& m) {
  out += "matrix " + name + " " + std::to_string(m.rows()) + " " +
         std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += "  ";
      out += format_quaternion(m(r, c));
    }
    if (m.cols() > 0) out += "\n";
  }
}

}  // namespace

std::string emit_problem_file(const ProblemFile& pf) {
  std::string out;
  out += "eta: ";
  out += axis_name(pf.eta);
  out += "\nkind: " + kind_name(pf.kind) + "\n";
  emit_matrix_text(out, "A", pf.A);
  emit_matrix_text(out, "B", pf.B);
  emit_matrix_text(out, "C", pf.C);
  emit_matrix_text(out, "D", pf.D);
  return out;
}

std::string emit_solution_file(EquationKind kind, const QMatrix& x,
                               const QMatrix& y, const QMatrix& z) {
  std::string out;
  emit_matrix_text(out, "X", x);
  emit_matrix_text(out, "Y", y);
  if (kind == EquationKind::Herm) emit_matrix_text(out, "Z", z);
  return out;
}

// ---------------------------------------------------------------------------
// JSON.

namespace {

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(format_quaternion(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_to_json(const ConditionReport& rep) {
  json conditions = json::array();
  for (const ConditionRecord& r : rep.conditions)
    conditions.push_back(
        {{"label", r.label}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
  return {{"conditions", std::move(conditions)}, {"overall", rep.overall}};
}

std::string eta_string(EtaAxis eta) { return std::string(1, axis_name(eta)); }

std::string kind_string(EquationKind kind) {
  return kind == EquationKind::Herm ? "herm" : "mixed";
}

}  // namespace

std::string emit_json(const QMatrix& m) { return matrix_to_json(m).dump(2); }

QMatrix parse_matrix_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw ParseError("expected a JSON array of rows", 0, 0);
  const std::size_t rows = j.size();
  std::size_t cols = rows > 0 ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("rows of unequal length", 0, 0);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = parse_quaternion(j[r][c].get<std::string>());
  }
  return m;
}

std::string emit_json(const SimDecomposition& dec) {
  const BlockSizes& sz = dec.sizes;
  json j = {{"eta", eta_string(dec.eta)},
            {"sizes",
             {{"m1", sz.m1},
              {"m2", sz.m2},
              {"m3", sz.m3},
              {"m4", sz.m4},
              {"m5", sz.m5},
              {"m6", sz.m6},
              {"m7", sz.m7},
              {"m8", sz.m8},
              {"sigma_rank", sz.sigma_rank},
              {"tail", sz.tail}}},
            {"P", matrix_to_json(dec.P)},
            {"T1", matrix_to_json(dec.T1)},
            {"T2", matrix_to_json(dec.T2)},
            {"T3", matrix_to_json(dec.T3)},
            {"S_A", matrix_to_json(dec.SA)}};
  return j.dump(2);
}

std::string emit_json(const ConditionReport& rep, EquationKind kind,
                      EtaAxis eta) {
  json j = report_to_json(rep);
  j["kind"] = kind_string(kind);
  j["eta"] = eta_string(eta);
  return j.dump(2);
}

std::string emit_json(const SolveOutcome& out, EquationKind kind,
                      EtaAxis eta) {
  json j = report_to_json(out.report);
  j["kind"] = kind_string(kind);
  j["eta"] = eta_string(eta);
  j["solvable"] = out.solvable;
  if (out.solvable) {
    j["X"] = matrix_to_json(out.X);
    j["Y"] = matrix_to_json(out.Y);
    if (kind == EquationKind::Herm) j["Z"] = matrix_to_json(out.Z);
    j["residual_is_zero"] = out.residual_is_zero;
  }
  return j.dump(2);
}

std::string emit_verify_json(
    EquationKind kind, EtaAxis eta, const QMatrix& residual,
    const std::vector<std::pair<std::string, bool>>& symmetry) {
  bool ok = residual.is_zero();
  json checks = json::array();
  for (const auto& [label, holds] : symmetry) {
    checks.push_back({{"label", label}, {"holds", holds}});
    ok &= holds;
  }
  json j = {{"kind", kind_string(kind)},
            {"eta", eta_string(eta)},
            {"residual", matrix_to_json(residual)},
            {"residual_is_zero", residual.is_zero()},
            {"symmetry", std::move(checks)},
            {"ok", ok}};
  return j.dump(2);
}

std::string format_matrix(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    return "  (" + std::to_string(m.rows()) + " x " +
           std::to_string(m.cols()) + " empty)\n";
  std::vector<std::size_t> widths(m.cols(), 0);
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = format_quaternion(m(r, c));
      widths[c] = std::max(widths[c], cells[r][c].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += "  ";
      out += cells[r][c];
      out.append(widths[c] - cells[r][c].size(), ' ');
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace quatdec
