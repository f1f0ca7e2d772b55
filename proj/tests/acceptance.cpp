// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The first four criteria drive the command-line tool
// (path given as argv[1]); the rest run in-process.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatdec/canon3.hpp"
#include "quatdec/elim.hpp"
#include "quatdec/errors.hpp"
#include "quatdec/io.hpp"
#include "quatdec/random.hpp"
#include "quatdec/simdec.hpp"
#include "quatdec/solvers.hpp"
#include "support/sample_instances.hpp"

namespace {

using namespace quatdec;
using nlohmann::json;
namespace herm = quatdec::testing::herm_instance;
namespace mixed = quatdec::testing::mixed_instance;

std::string g_cli_path;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(int criterion, const std::string& what, bool pass,
            double seconds) {
  std::printf("%s  criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL",
              criterion, what.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args;
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

std::vector<std::filesystem::path> g_temp_files;

std::filesystem::path temp_file(const std::string& stem,
                                const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("quatdec_accept_" + std::to_string(getpid()) + "_" +
                     stem);
  std::ofstream out(path);
  out << contents;
  g_temp_files.push_back(path);
  return path;
}

std::string herm_problem_text() {
  ProblemFile pf;
  pf.eta = herm::eta;
  pf.kind = ProblemKind::Herm;
  pf.A = herm::A();
  pf.B = herm::B();
  pf.C = herm::C();
  pf.D = herm::D();
  return emit_problem_file(pf);
}

std::string mixed_problem_text() {
  ProblemFile pf;
  pf.eta = mixed::eta;
  pf.kind = ProblemKind::Mixed;
  pf.A = mixed::A();
  pf.B = mixed::B();
  pf.C = mixed::C();
  pf.D = mixed::D();
  return emit_problem_file(pf);
}

bool check_report_values(const json& j,
                         const std::array<std::size_t, 5>& expected) {
  if (j["overall"] != true || j["conditions"].size() != 5) return false;
  for (std::size_t s = 0; s < 5; ++s) {
    const json& c = j["conditions"][s];
    if (c["lhs"] != expected[s] || c["rhs"] != expected[s] ||
        c["holds"] != true)
      return false;
  }
  return true;
}

// --- criterion 1: rank table of the j-Hermitian reference instance.
void criterion1(const std::filesystem::path& problem) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    const CommandResult res =
        run_cli("check --eq herm --json " + problem.string());
    const json j = json::parse(res.output);
    pass = (res.exit_code == 0) &&
           check_report_values(j, {2, 3, 3, 3, 6});
  } catch (const std::exception&) {
    pass = false;
  }
  const double secs = seconds_since(start);
  pass = pass && secs < 1.0;
  report(1, "check --eq herm reproduces the rank table (2;3;3;3;6)", pass,
         secs);
}

// --- criterion 2: verify the known solution of the herm instance.
void criterion2(const std::filesystem::path& problem) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    const auto sol = temp_file(
        "herm_sol.qm",
        emit_solution_file(EquationKind::Herm, herm::X(), herm::Y(),
                           herm::Z()));
    const CommandResult res = run_cli("verify --eq herm --json " +
                                      problem.string() + " " + sol.string());
    const json j = json::parse(res.output);
    pass = (res.exit_code == 0) && j["residual_is_zero"] == true &&
           j["ok"] == true;
    for (const auto& s : j["symmetry"]) pass = pass && s["holds"] == true;
  } catch (const std::exception&) {
    pass = false;
  }
  report(2, "verify accepts the reference solution with exact zero residual",
         pass, seconds_since(start));
}

// --- criterion 3: solve the herm instance; any member of the family is fine.
void criterion3(const std::filesystem::path& problem) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    const CommandResult res =
        run_cli("solve --eq herm --json " + problem.string());
    const json j = json::parse(res.output);
    pass = (res.exit_code == 0) && j["solvable"] == true &&
           j["residual_is_zero"] == true;
    const QMatrix x = parse_matrix_json(j["X"].dump());
    const QMatrix y = parse_matrix_json(j["Y"].dump());
    const QMatrix z = parse_matrix_json(j["Z"].dump());
    pass = pass && is_eta_hermitian(x, herm::eta) &&
           is_eta_hermitian(y, herm::eta) && is_eta_hermitian(z, herm::eta);
    pass = pass && residual(EquationKind::Herm, herm::A(), herm::B(),
                            herm::C(), herm::D(), x, y, z, herm::eta)
                       .is_zero();
  } catch (const std::exception&) {
    pass = false;
  }
  report(3, "solve --eq herm returns a j-Hermitian triple with zero residual",
         pass, seconds_since(start));
}

// --- criterion 4: mixed reference instance rank table and verification.
void criterion4() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    const auto problem = temp_file("mixed.qm", mixed_problem_text());
    const CommandResult chk =
        run_cli("check --eq mixed --json " + problem.string());
    const json j = json::parse(chk.output);
    pass = (chk.exit_code == 0) && check_report_values(j, {2, 3, 4, 4, 8});

    const auto sol = temp_file(
        "mixed_sol.qm",
        emit_solution_file(EquationKind::Mixed, mixed::X(), mixed::Y(),
                           QMatrix()));
    const CommandResult ver = run_cli("verify --eq mixed --json " +
                                      problem.string() + " " + sol.string());
    const json vj = json::parse(ver.output);
    pass = pass && (ver.exit_code == 0) && vj["residual_is_zero"] == true &&
           vj["ok"] == true;
  } catch (const std::exception&) {
    pass = false;
  }
  report(4, "mixed rank table (2;3;4;4;8) and verified reference solution",
         pass, seconds_since(start));
}

struct Corpus {
  QMatrix a, b, c, d;
  EtaAxis eta;
};

std::vector<Corpus> decomposition_corpus(std::size_t count) {
  std::vector<Corpus> out;
  SplitMix64 rng(20260810);
  const std::array<EtaAxis, 3> axes{EtaAxis::I, EtaAxis::J, EtaAxis::K};
  while (out.size() < count) {
    Corpus ins;
    ins.eta = axes[rng.below(3)];
    const std::size_t m = rng.below(6);
    ins.a = random_eta_hermitian(rng, m, ins.eta, 3, 3);
    ins.b = random_matrix(rng, m, rng.below(6), 3, 3);
    ins.c = random_matrix(rng, m, rng.below(6), 3, 3);
    ins.d = random_matrix(rng, m, rng.below(6), 3, 3);
    out.push_back(std::move(ins));
  }
  return out;
}

// --- criterion 5: decomposition round trip on 200 seeded instances.
void criterion5(const std::vector<Corpus>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  try {
    for (const Corpus& ins : corpus) {
      const SimDecomposition dec =
          simultaneous_decompose(ins.a, ins.b, ins.c, ins.d, ins.eta);
      const TripleSizes ls = triple_sizes(ins.b, ins.c, ins.d);
      const std::size_t m = ins.a.rows();
      const QMatrix ph = eta_conj_transpose(dec.P, ins.eta);
      pass = pass && (dec.P * ins.a * ph == dec.SA);
      pass = pass &&
             (dec.P * ins.b * dec.T1 == pattern_b(ls, m, ins.b.cols()));
      pass = pass &&
             (dec.P * ins.c * dec.T2 == pattern_c(ls, m, ins.c.cols()));
      pass = pass &&
             (dec.P * ins.d * dec.T3 == pattern_d(ls, m, ins.d.cols()));
      const BlockSizes formula =
          block_sizes(ins.a, ins.b, ins.c, ins.d, ins.eta);
      pass = pass && formula.m1 == dec.sizes.m1 &&
             formula.m2 == dec.sizes.m2 && formula.m3 == dec.sizes.m3 &&
             formula.m4 == dec.sizes.m4 && formula.m5 == dec.sizes.m5 &&
             formula.m6 == dec.sizes.m6 && formula.m7 == dec.sizes.m7 &&
             formula.m8 == dec.sizes.m8 &&
             formula.sigma_rank == dec.sizes.sigma_rank &&
             formula.tail == dec.sizes.tail;
      if (!pass) break;
    }
  } catch (const std::exception&) {
    pass = false;
  }
  const double secs = seconds_since(start);
  pass = pass && secs < 300.0;
  report(5, "decomposition round trip on 200 seeded instances (m,p <= 5)",
         pass, secs);
}

// --- criterion 6: size mapping and the 8x8 rank/size linear system.
void criterion6(const std::vector<Corpus>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  try {
    for (const Corpus& ins : corpus) {
      const TripleSizes ls = triple_sizes(ins.b, ins.c, ins.d);
      const BlockSizes bs = block_sizes(ins.a, ins.b, ins.c, ins.d, ins.eta);
      pass = pass && bs.m1 == ls.r6 && bs.m2 == ls.r2 - ls.r6 &&
             bs.m3 == ls.r5 && bs.m4 == ls.r7 &&
             bs.m5 == ls.rank_b - ls.r2 - ls.r5 - ls.r7 &&
             bs.m6 == ls.r4 - ls.r7 && bs.m7 == ls.r1 - ls.r4 &&
             bs.m8 == ls.r3;

      // The 8x8 integer system tying the block sizes to the eight rank
      // quantities; every equation must hold exactly.
      const std::size_t ms[8] = {bs.m1, bs.m2, bs.m3, bs.m4,
                                 bs.m5, bs.m6, bs.m7, bs.m8};
      const long coeff[8][8] = {{1, 1, 1, 1, 1, 0, 0, 0},
                                {1, 1, 0, 1, 0, 1, 1, 0},
                                {1, 0, 1, 1, 0, 1, 0, 1},
                                {1, 1, 1, 2, 1, 1, 1, 0},
                                {1, 1, 1, 2, 1, 1, 0, 1},
                                {1, 1, 1, 2, 0, 1, 1, 1},
                                {1, 1, 1, 2, 1, 1, 1, 1},
                                {0, 0, 1, 1, 0, 1, 0, 1}};
      const long rhs[8] = {
          static_cast<long>(ls.rank_b),
          static_cast<long>(ls.rank_c),
          static_cast<long>(ls.rank_d),
          static_cast<long>(ls.rank_bc),
          static_cast<long>(ls.rank_bd),
          static_cast<long>(ls.rank_cd),
          static_cast<long>(ls.rank_bcd),
          static_cast<long>(ls.rank_pair) - static_cast<long>(ls.rank_b) -
              static_cast<long>(ls.rank_c)};
      for (int row = 0; row < 8; ++row) {
        long acc = 0;
        for (int col = 0; col < 8; ++col)
          acc += coeff[row][col] * static_cast<long>(ms[col]);
        pass = pass && (acc == rhs[row]);
      }
      if (!pass) break;
    }
  } catch (const std::exception&) {
    pass = false;
  }
  report(6, "size-formula cross-check and 8x8 rank/size system", pass,
         seconds_since(start));
}

// --- criterion 7: three-way solvability equivalence, both kinds.
void criterion7() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::size_t solvable_count = 0, unsolvable_count = 0;
  try {
    SplitMix64 rng(777);
    const std::array<EtaAxis, 3> axes{EtaAxis::I, EtaAxis::J, EtaAxis::K};
    for (EquationKind kind : {EquationKind::Herm, EquationKind::Mixed}) {
      for (int it = 0; it < 200; ++it) {
        const EtaAxis eta = axes[rng.below(3)];
        const std::size_t m = 1 + rng.below(3);
        const std::size_t p1 = rng.below(4), p2 = rng.below(4),
                          p3 = rng.below(4);
        QMatrix a, b, c, d;
        if (it % 2 == 0) {  // planted, solvable by construction
          const GeneratedInstance g =
              gen_instance(kind, m, p1, p2, p3, eta, 9000 + it);
          a = g.A;
          b = g.B;
          c = g.C;
          d = g.D;
        } else {  // fully random eta-Hermitian right-hand side
          a = random_eta_hermitian(rng, m, eta);
          b = random_matrix(rng, m, p1);
          c = kind == EquationKind::Herm ? random_matrix(rng, m, p2)
                                         : random_matrix(rng, p2, m);
          d = random_matrix(rng, m, p3);
        }
        const bool by_rank =
            (kind == EquationKind::Herm ? check_herm(a, b, c, d, eta)
                                        : check_mixed(a, b, c, d, eta))
                .overall;
        const QMatrix c_dec = kind == EquationKind::Herm
                                  ? c
                                  : eta_conj_transpose(c, eta);
        const SimDecomposition dec =
            simultaneous_decompose(a, b, c_dec, d, eta);
        const bool by_canon = (kind == EquationKind::Herm
                                   ? check_herm_canonical(dec)
                                   : check_mixed_canonical(dec))
                                  .overall;
        const bool by_oracle = oracle_solvable(kind, a, b, c, d, eta);
        const SolveOutcome out = kind == EquationKind::Herm
                                     ? solve_herm(a, b, c, d, eta)
                                     : solve_mixed(a, b, c, d, eta);
        const bool agree = (by_rank == by_canon) && (by_rank == by_oracle) &&
                           (by_rank == out.solvable) &&
                           (!out.solvable || out.residual_is_zero);
        if (it % 2 == 0 && !by_rank) pass = false;  // planted must solve
        (by_rank ? solvable_count : unsolvable_count)++;
        if (!agree) {
          pass = false;
          break;
        }
      }
    }
  } catch (const std::exception&) {
    pass = false;
  }
  // The corpus must really exercise both outcomes.
  pass = pass && solvable_count >= 100 && unsolvable_count >= 50;
  report(7,
         "three-way solvability equivalence on 400 instances (both kinds)",
         pass, seconds_since(start));
}

// --- criterion 8: scalar/matrix property suites, 500 cases each.
void criterion8() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  try {
    SplitMix64 rng(888);
    const std::array<EtaAxis, 3> axes{EtaAxis::I, EtaAxis::J, EtaAxis::K};

    for (int it = 0; it < 500 && pass; ++it) {  // involution
      const EtaAxis eta = axes[rng.below(3)];
      const QMatrix a = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4));
      pass = eta_conj_transpose(eta_conj_transpose(a, eta), eta) == a;
    }
    for (int it = 0; it < 500 && pass; ++it) {  // antihomomorphism
      const EtaAxis eta = axes[rng.below(3)];
      const std::size_t m = 1 + rng.below(3), k = 1 + rng.below(3),
                        n = 1 + rng.below(3);
      const QMatrix a = random_matrix(rng, m, k);
      const QMatrix b = random_matrix(rng, k, n);
      pass = eta_conj_transpose(a * b, eta) ==
             eta_conj_transpose(b, eta) * eta_conj_transpose(a, eta);
    }
    for (int it = 0; it < 500 && pass; ++it) {  // rank invariance
      const EtaAxis eta = axes[rng.below(3)];
      const QMatrix a = random_matrix(rng, rng.below(5), rng.below(5));
      pass = rank(a) == rank(eta_conj_transpose(a, eta));
    }
    for (int it = 0; it < 500 && pass; ++it) {  // real expansion rank law
      const QMatrix a = random_matrix(rng, rng.below(4), rng.below(4));
      pass = rank(real_expansion(a)) == 4 * rank(a);
    }
    int checked = 0;
    while (checked < 500 && pass) {  // pivoting lemma
      const EtaAxis eta = axes[rng.below(3)];
      const Quaternion q = random_quaternion(rng);
      if (q.is_zero()) continue;
      ++checked;
      const Quaternion u = Quaternion::unit(eta);
      pass = !(q + eta_conj(q, eta)).is_zero() ||
             !((u * q) + eta_conj(u * q, eta)).is_zero();
    }
  } catch (const std::exception&) {
    pass = false;
  }
  report(8, "property suites (500 exact cases each)", pass,
         seconds_since(start));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: quatdec_acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  const auto herm_problem = temp_file("herm.qm", herm_problem_text());
  criterion1(herm_problem);
  criterion2(herm_problem);
  criterion3(herm_problem);
  criterion4();

  const std::vector<Corpus> corpus = decomposition_corpus(200);
  criterion5(corpus);
  criterion6(corpus);
  criterion7();
  criterion8();

  std::error_code ec;
  for (const auto& p : g_temp_files) std::filesystem::remove(p, ec);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
