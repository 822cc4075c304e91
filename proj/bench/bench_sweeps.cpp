// Serial reference kernels against the OpenMP kernels. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "cmdiv/sweeps.hpp"

using namespace cmdiv;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state, std::size_t cases) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
  state.counters["cases"] = static_cast<double>(cases);
}

void BM_NormalizerAbelian(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto out = sweep_normalizer_abelian(state.range(0), mode(state));
    benchmark::DoNotOptimize(out.cases);
    cases = out.cases;
  }
  label(state, cases);
}

void BM_C1Commutation(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto out = sweep_c1_commutation(state.range(0), mode(state));
    benchmark::DoNotOptimize(out.cases);
    cases = out.cases;
  }
  label(state, cases);
}

void BM_UnitBNonabelian(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto out = sweep_unit_b_nonabelian(state.range(0), mode(state));
    benchmark::DoNotOptimize(out.cases);
    cases = out.cases;
  }
  label(state, cases);
}

void BM_OracleAgreement(benchmark::State& state) {
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto out = sweep_oracle_agreement(state.range(0), 500, mode(state));
    benchmark::DoNotOptimize(out.cases);
    cases = out.cases;
  }
  label(state, cases);
}

}  // namespace

BENCHMARK(BM_NormalizerAbelian)->ArgsProduct({{16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_C1Commutation)->ArgsProduct({{20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitBNonabelian)->ArgsProduct({{12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleAgreement)->ArgsProduct({{20}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
