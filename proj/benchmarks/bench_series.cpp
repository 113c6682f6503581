#include <benchmark/benchmark.h>

#include "coset/affine_chars.hpp"
#include "coset/coset_verify.hpp"
#include "coset/minimal_model.hpp"
#include "coset/series.hpp"

using namespace coset;

static void BM_EulerProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_product(Sign::minus, -3, n));
}
BENCHMARK(BM_EulerProduct)->Arg(20)->Arg(100)->Arg(200);

// Product of two characters over different denominators (42 and 840).
static void BM_MulMixedDenominators(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const FracSeries a = osp_character({2, 3}, order);
  const FracSeries b = vir_character(MinimalModel(10, 7), {3, 1}, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulMixedDenominators)->Arg(20)->Arg(100)->Arg(200);

static void BM_VirCharacter(benchmark::State& state) {
  const MinimalModel m(10, 7);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vir_character(m, {2, 1}, order));
}
BENCHMARK(BM_VirCharacter)->Arg(20)->Arg(200);

static void BM_OspCharacter(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osp_character({2, 5}, order));
}
BENCHMARK(BM_OspCharacter)->Arg(20)->Arg(200);

static void BM_BranchCharacter(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(branch_character(1, 1, Parity::even, order));
}
BENCHMARK(BM_BranchCharacter)->Arg(10)->Arg(50);

static void BM_VerifyDecomposition(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(order));
}
BENCHMARK(BM_VerifyDecomposition)->Arg(20)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
