#include <benchmark/benchmark.h>

#include <random>

#include "sisframe/dual.hpp"
#include "sisframe/gram.hpp"

namespace {

using namespace sisframe;

std::vector<int> first_indices(int r) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) idx[static_cast<std::size_t>(k)] = k;
  return idx;
}

void BM_RankProfile(benchmark::State& state) {
  const auto gens = GeneratorSet::bump_family(first_indices(static_cast<int>(state.range(0))), {});
  for (auto _ : state) benchmark::DoNotOptimize(rank_profile(gens, 1024, 1e-8));
}
BENCHMARK(BM_RankProfile)->Arg(2)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FrameVerdict(benchmark::State& state) {
  const auto gens = GeneratorSet::bump_family({0, 2, 5}, {});
  for (auto _ : state) benchmark::DoNotOptimize(frame_verdict(gens));
}
BENCHMARK(BM_FrameVerdict)->Unit(benchmark::kMillisecond);

void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  CMatrix a(n, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < 2 * n + 1; ++j) a(i, j) = {normal(rng), normal(rng)};
  }
  const CMatrix g = a.gram();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(g));
}
BENCHMARK(BM_HermitianEigen)->Arg(3)->Arg(8)->Arg(16);

void BM_BuildGenerators(benchmark::State& state) {
  const Grid grid = Grid::time_window(32, Rational{1, static_cast<std::int64_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(build_generators({0, 1, 2}, {}, grid));
}
BENCHMARK(BM_BuildGenerators)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_PeriodicAnalysis(benchmark::State& state) {
  const auto gens = build_generators({0, 1, 2}, {}, Grid::time_window(32, Rational{1, 256}));
  const AnalysisOperator analysis(gens.time());
  const auto f = synthesize(gens.time(), random_coefficients(3, 8, Weight::constant(), 1));
  for (auto _ : state) benchmark::DoNotOptimize(analysis.apply(f));
}
BENCHMARK(BM_PeriodicAnalysis)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
