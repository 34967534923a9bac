#include <benchmark/benchmark.h>

#include "dhermite/harness.hpp"
#include "dhermite/polys.hpp"
#include "dhermite/rep.hpp"

using namespace dhermite;

static void BM_DhpExact(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dhp_2v_exact(m));
}
BENCHMARK(BM_DhpExact)->Arg(10)->Arg(20)->Arg(40);

static void BM_DhpSequence(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dhp_2v_sequence(m, 0.3, -0.2, xi_of_tau(0.5)));
}
BENCHMARK(BM_DhpSequence)->Arg(40)->Arg(160);

static void BM_MatrixTable(benchmark::State& state) {
  const GroupElement g{0.1, 0.2, {0.3, 0.1}, -0.25, 0.05};
  const RepParams rp(0.3, {0.8, 0.2});
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix_element_table(g, rp, n, n));
}
BENCHMARK(BM_MatrixTable)->Arg(4)->Arg(8);

static void BM_Oracle(benchmark::State& state) {
  const GroupElement g{0.1, 0.2, {0.3, 0.1}, -0.25, 0.05};
  const RepParams rp(0.3, {0.8, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(matrix_elements_oracle(g, rp, 8, 8));
}
BENCHMARK(BM_Oracle);

static void BM_ExpansionResidual(benchmark::State& state) {
  const ExpansionSample s = expansion_sample("expansion.lauricella", 42, 0);
  const SuiteOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(expansion_residual("expansion.lauricella", s, o));
}
BENCHMARK(BM_ExpansionResidual);

static void BM_VolterraResidual(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(volterra_residual(m, VolterraKernel::Corrected));
}
BENCHMARK(BM_VolterraResidual)->Arg(8)->Arg(15);
BENCHMARK_MAIN();
