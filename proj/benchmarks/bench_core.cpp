#include <benchmark/benchmark.h>

#include "quatdec/elim.hpp"
#include "quatdec/random.hpp"
#include "quatdec/simdec.hpp"
#include "quatdec/solvers.hpp"

namespace {

using namespace quatdec;

void BM_Rank(benchmark::State& state) {
  SplitMix64 rng(1);
  const std::size_t n = state.range(0);
  const QMatrix a = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(8)->Arg(16);

void BM_Decompose(benchmark::State& state) {
  const std::size_t n = state.range(0);
  SplitMix64 rng(2);
  const EtaAxis eta = EtaAxis::J;
  const QMatrix a = random_eta_hermitian(rng, n, eta);
  const QMatrix b = random_matrix(rng, n, n);
  const QMatrix c = random_matrix(rng, n, n);
  const QMatrix d = random_matrix(rng, n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(simultaneous_decompose(a, b, c, d, eta));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(6);

void BM_SolveHerm(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const GeneratedInstance g =
      gen_instance(EquationKind::Herm, n, n, n, n, EtaAxis::J, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_herm(g.A, g.B, g.C, g.D, EtaAxis::J));
}
BENCHMARK(BM_SolveHerm)->Arg(2)->Arg(3)->Arg(4);

void BM_OracleHerm(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const GeneratedInstance g =
      gen_instance(EquationKind::Herm, n, n, n, n, EtaAxis::J, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle_solvable(EquationKind::Herm, g.A, g.B, g.C, g.D, EtaAxis::J));
}
BENCHMARK(BM_OracleHerm)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
