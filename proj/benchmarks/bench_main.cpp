#include <benchmark/benchmark.h>

#include "tourn/counting.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/generators.hpp"
#include "tourn/spectral.hpp"
#include "tourn/spectrum_opt.hpp"

namespace {

using namespace tourn;

void BM_CycleHoms(benchmark::State& state) {
  const Tournament t = gen_uniform(static_cast<std::size_t>(state.range(0)), Seed{1});
  const int len = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cycle_homs(t, len));
}
BENCHMARK(BM_CycleHoms)->ArgsProduct({{100, 500, 2000}, {3, 4, 5}})->Unit(benchmark::kMillisecond);

void BM_TransitiveSubsets(benchmark::State& state) {
  const Tournament t = gen_uniform(static_cast<std::size_t>(state.range(0)), Seed{2});
  for (auto _ : state) benchmark::DoNotOptimize(transitive_subsets(t, 4));
}
BENCHMARK(BM_TransitiveSubsets)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Sigma(benchmark::State& state) {
  const TournamentMatrix a = to_matrix(gen_uniform(static_cast<std::size_t>(state.range(0)), Seed{3}));
  for (auto _ : state) benchmark::DoNotOptimize(sigma(a, 4));
}
BENCHMARK(BM_Sigma)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SkewDecompose(benchmark::State& state) {
  const TournamentMatrix a = to_matrix(gen_uniform(static_cast<std::size_t>(state.range(0)), Seed{4}));
  for (auto _ : state) benchmark::DoNotOptimize(skew_decompose(a));
}
BENCHMARK(BM_SkewDecompose)->Arg(51)->Arg(301)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  EnumerationOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(summarize_all(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SolveStructured(benchmark::State& state) {
  SpectrumInstance inst;
  inst.s3 = 0.02;
  inst.rho = 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(try_solve_structured(inst));
}
BENCHMARK(BM_SolveStructured)->Unit(benchmark::kMillisecond);

void BM_MinOverRho(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_over_rho(0.05, 200));
}
BENCHMARK(BM_MinOverRho)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
