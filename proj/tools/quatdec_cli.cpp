// Command-line interface: decompose, check, solve, verify, gen.
//
// Exit codes: 0 success (or solvable); 2 well-posed input that is
// unsolvable / fails verification; 1 input or internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"
#include "quatdec/io.hpp"
#include "quatdec/simdec.hpp"
#include "quatdec/solvers.hpp"

namespace {

using namespace quatdec;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsolvable = 2;

MatrixDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_matrix_document(in);
}

ProblemKind problem_kind_of(EquationKind eq) {
  return eq == EquationKind::Herm ? ProblemKind::Herm : ProblemKind::Mixed;
}

// The --eq flag decides the kind; a contradicting kind header is an error.
ProblemFile load_problem(const std::string& path, ProblemKind kind) {
  MatrixDocument doc = load_document(path);
  if (doc.kind && *doc.kind != kind)
    throw Error("file '" + path + "' declares kind '" +
                kind_name(*doc.kind) + "' but the command expects '" +
                kind_name(kind) + "'");
  return build_problem(doc, kind);
}

EquationKind parse_eq(const std::string& s) {
  if (s == "herm") return EquationKind::Herm;
  if (s == "mixed") return EquationKind::Mixed;
  throw Error("--eq must be 'herm' or 'mixed'");
}

FreeParams parse_free(const std::string& s) {
  if (s == "zero") return FreeParams::zero();
  if (s.rfind("seed:", 0) == 0)
    return FreeParams::seeded(std::stoull(s.substr(5)));
  throw Error("--free must be 'zero' or 'seed:<n>'");
}

void print_report(const ConditionReport& rep) {
  for (const ConditionRecord& r : rep.conditions)
    std::cout << "  [" << (r.holds ? "ok" : "FAIL") << "]  " << r.label
              << "   (" << r.lhs << (r.holds ? " == " : " != ") << r.rhs
              << ")\n";
}

int run_decompose(const std::string& path, bool json) {
  MatrixDocument doc = load_document(path);
  ProblemKind kind = doc.kind.value_or(ProblemKind::Decompose);
  ProblemFile pf = build_problem(doc, kind);
  const QMatrix c_for_dec = kind == ProblemKind::Mixed
                                ? eta_conj_transpose(pf.C, pf.eta)
                                : pf.C;
  SimDecomposition dec =
      simultaneous_decompose(pf.A, pf.B, c_for_dec, pf.D, pf.eta);
  if (json) {
    std::cout << emit_json(dec) << "\n";
    return kExitOk;
  }
  const BlockSizes& sz = dec.sizes;
  std::cout << "eta: " << axis_name(dec.eta) << "\n";
  std::cout << "block sizes: m1=" << sz.m1 << " m2=" << sz.m2
            << " m3=" << sz.m3 << " m4=" << sz.m4 << " m5=" << sz.m5
            << " m6=" << sz.m6 << " m7=" << sz.m7 << " m8=" << sz.m8
            << " sigma_rank=" << sz.sigma_rank << " tail=" << sz.tail << "\n";
  std::cout << "P =\n" << format_matrix(dec.P);
  std::cout << "T1 =\n" << format_matrix(dec.T1);
  std::cout << "T2 =\n" << format_matrix(dec.T2);
  std::cout << "T3 =\n" << format_matrix(dec.T3);
  std::cout << "S_A =\n" << format_matrix(dec.SA);
  return kExitOk;
}

int run_check(const std::string& path, EquationKind eq, bool json) {
  ProblemFile pf = load_problem(path, problem_kind_of(eq));
  ConditionReport rep = eq == EquationKind::Herm
                            ? check_herm(pf.A, pf.B, pf.C, pf.D, pf.eta)
                            : check_mixed(pf.A, pf.B, pf.C, pf.D, pf.eta);
  if (json) {
    std::cout << emit_json(rep, eq, pf.eta) << "\n";
  } else {
    std::cout << "equation: " << (eq == EquationKind::Herm ? "herm" : "mixed")
              << "   eta: " << axis_name(pf.eta) << "\n";
    print_report(rep);
    std::cout << "solvable: " << (rep.overall ? "yes" : "no") << "\n";
  }
  return rep.overall ? kExitOk : kExitUnsolvable;
}

int run_solve(const std::string& path, EquationKind eq, const FreeParams& free,
              bool json) {
  ProblemFile pf = load_problem(path, problem_kind_of(eq));
  SolveOutcome out = eq == EquationKind::Herm
                         ? solve_herm(pf.A, pf.B, pf.C, pf.D, pf.eta, free)
                         : solve_mixed(pf.A, pf.B, pf.C, pf.D, pf.eta, free);
  if (json) {
    std::cout << emit_json(out, eq, pf.eta) << "\n";
    return out.solvable ? kExitOk : kExitUnsolvable;
  }
  print_report(out.report);
  if (!out.solvable) {
    std::cout << "unsolvable\n";
    return kExitUnsolvable;
  }
  std::cout << "X =\n" << format_matrix(out.X);
  std::cout << "Y =\n" << format_matrix(out.Y);
  if (eq == EquationKind::Herm) std::cout << "Z =\n" << format_matrix(out.Z);
  std::cout << "residual is zero: " << (out.residual_is_zero ? "yes" : "no")
            << "\n";
  return kExitOk;
}

int run_verify(const std::string& problem_path, const std::string& sol_path,
               EquationKind eq, bool json) {
  ProblemFile pf = load_problem(problem_path, problem_kind_of(eq));
  MatrixDocument sol = load_document(sol_path);
  const QMatrix* x = sol.find("X");
  const QMatrix* y = sol.find("Y");
  const QMatrix* z = sol.find("Z");
  if (!x || !y || (eq == EquationKind::Herm && !z))
    throw Error("solution file must declare X, Y" +
                std::string(eq == EquationKind::Herm ? ", Z" : ""));

  const char eta_c = axis_name(pf.eta);
  std::vector<std::pair<std::string, bool>> symmetry;
  if (eq == EquationKind::Herm) {
    symmetry.emplace_back(std::string("X ") + eta_c + "-Hermitian",
                          is_eta_hermitian(*x, pf.eta));
    symmetry.emplace_back(std::string("Y ") + eta_c + "-Hermitian",
                          is_eta_hermitian(*y, pf.eta));
    symmetry.emplace_back(std::string("Z ") + eta_c + "-Hermitian",
                          is_eta_hermitian(*z, pf.eta));
  } else {
    symmetry.emplace_back(std::string("Y ") + eta_c + "-Hermitian",
                          is_eta_hermitian(*y, pf.eta));
  }
  const QMatrix res = residual(eq, pf.A, pf.B, pf.C, pf.D, *x, *y,
                               z ? *z : QMatrix(), pf.eta);
  bool ok = res.is_zero();
  for (const auto& [label, holds] : symmetry) ok &= holds;

  if (json) {
    std::cout << emit_verify_json(eq, pf.eta, res, symmetry) << "\n";
  } else {
    std::cout << "residual =\n" << format_matrix(res);
    std::cout << "residual is zero: " << (res.is_zero() ? "yes" : "no")
              << "\n";
    for (const auto& [label, holds] : symmetry)
      std::cout << "  [" << (holds ? "ok" : "FAIL") << "]  " << label << "\n";
    std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitUnsolvable;
}

int run_gen(EquationKind eq, std::size_t m, std::size_t p1, std::size_t p2,
            std::size_t p3, std::uint64_t seed, EtaAxis eta,
            const std::string& out_path, const std::string& solution_path) {
  GeneratedInstance inst = gen_instance(eq, m, p1, p2, p3, eta, seed);
  ProblemFile pf;
  pf.eta = eta;
  pf.kind = problem_kind_of(eq);
  pf.A = inst.A;
  pf.B = inst.B;
  pf.C = inst.C;
  pf.D = inst.D;
  std::ostringstream header;
  header << "% generated instance: kind=" << kind_name(pf.kind)
         << " m=" << m << " p1=" << p1 << " p2=" << p2 << " p3=" << p3
         << " seed=" << seed << "\n";
  const std::string text = header.str() + emit_problem_file(pf);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
  }
  if (!solution_path.empty()) {
    std::ofstream out(solution_path);
    if (!out) throw Error("cannot write '" + solution_path + "'");
    out << "% planted solution for seed=" << seed << "\n"
        << emit_solution_file(eq, inst.X0, inst.Y0, inst.Z0);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simultaneous decomposition of quaternion matrix "
               "quadruples and solvers for the associated matrix equations"};
  app.require_subcommand(1);

  std::string file, solution_file, eq_str = "herm", free_str = "zero";
  std::string eta_str = "j", out_path, gen_solution_path;
  bool json = false;
  std::size_t m = 2, p1 = 2, p2 = 2, p3 = 2;
  std::uint64_t seed = 0;

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "Simultaneously decompose (A, B, C, D)");
  cmd_decompose->add_option("file", file, "problem file")->required();
  cmd_decompose->add_flag("--json", json, "emit JSON");

  CLI::App* cmd_check =
      app.add_subcommand("check", "Evaluate the rank solvability conditions");
  cmd_check->add_option("--eq", eq_str, "equation kind: herm|mixed")
      ->required();
  cmd_check->add_option("file", file, "problem file")->required();
  cmd_check->add_flag("--json", json, "emit JSON");

  CLI::App* cmd_solve =
      app.add_subcommand("solve", "Construct a general solution");
  cmd_solve->add_option("--eq", eq_str, "equation kind: herm|mixed")
      ->required();
  cmd_solve->add_option("--free", free_str,
                        "free parameter fill: zero|seed:<n>");
  cmd_solve->add_option("file", file, "problem file")->required();
  cmd_solve->add_flag("--json", json, "emit JSON");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Check a given solution against the equation");
  cmd_verify->add_option("--eq", eq_str, "equation kind: herm|mixed")
      ->required();
  cmd_verify->add_option("problem", file, "problem file")->required();
  cmd_verify->add_option("solution", solution_file, "solution file")
      ->required();
  cmd_verify->add_flag("--json", json, "emit JSON");

  CLI::App* cmd_gen =
      app.add_subcommand("gen", "Generate a solvable pseudorandom instance");
  cmd_gen->add_option("--eq", eq_str, "equation kind: herm|mixed")->required();
  cmd_gen->add_option("--m", m, "row count of A")->required();
  cmd_gen->add_option("--p1", p1, "columns of B")->required();
  cmd_gen->add_option("--p2", p2, "columns of C (rows for mixed)")->required();
  cmd_gen->add_option("--p3", p3, "columns of D")->required();
  cmd_gen->add_option("--seed", seed, "deterministic seed")->required();
  cmd_gen->add_option("--eta", eta_str, "eta axis: i|j|k (default j)");
  cmd_gen->add_option("--out", out_path, "write the problem file here");
  cmd_gen->add_option("--solution", gen_solution_path,
                      "also write the planted solution");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_decompose->parsed()) return run_decompose(file, json);
    if (cmd_check->parsed()) return run_check(file, parse_eq(eq_str), json);
    if (cmd_solve->parsed())
      return run_solve(file, parse_eq(eq_str), parse_free(free_str), json);
    if (cmd_verify->parsed())
      return run_verify(file, solution_file, parse_eq(eq_str), json);
    if (cmd_gen->parsed())
      return run_gen(parse_eq(eq_str), m, p1, p2, p3, seed,
                     parse_eta_name(eta_str), out_path, gen_solution_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
