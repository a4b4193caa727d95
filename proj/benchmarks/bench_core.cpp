#include <benchmark/benchmark.h>

#include "oddq/catalog.hpp"
#include "oddq/classify.hpp"
#include "oddq/extension.hpp"
#include "oddq/search.hpp"

using namespace oddq;

namespace {

CatalogEntry entry(const char* key) { return build(CatalogKey::parse(key)); }

void BM_JacobiVerify(benchmark::State& state, const char* key) {
  CatalogEntry e = entry(key);
  for (auto _ : state) benchmark::DoNotOptimize(e.algebra.super_jacobi_violations());
}
BENCHMARK_CAPTURE(BM_JacobiVerify, g8_2, "g8:2");
BENCHMARK_CAPTURE(BM_JacobiVerify, dualpair8, "dualpair:8");

void BM_VerifyOddQuadratic(benchmark::State& state, const char* key) {
  CatalogEntry e = entry(key);
  for (auto _ : state) benchmark::DoNotOptimize(verify_odd_quadratic(e.algebra, *e.form));
}
BENCHMARK_CAPTURE(BM_VerifyOddQuadratic, g8_2, "g8:2");
BENCHMARK_CAPTURE(BM_VerifyOddQuadratic, coadjoint8, "coadjoint:8");

void BM_Center(benchmark::State& state) {
  CatalogEntry e = entry("dualpair:8");
  for (auto _ : state) benchmark::DoNotOptimize(e.algebra.center());
}
BENCHMARK(BM_Center);

void BM_WeakFiliformFlag(benchmark::State& state) {
  CatalogEntry e = entry("coadjoint:8");
  for (auto _ : state) benchmark::DoNotOptimize(detect_weak_filiform(e.algebra));
}
BENCHMARK(BM_WeakFiliformFlag);

void BM_SolveDerivations(benchmark::State& state) {
  CatalogEntry e = entry("g6:0");
  for (auto _ : state) benchmark::DoNotOptimize(solve_odd_skew_derivations(e.algebra, *e.form));
}
BENCHMARK(BM_SolveDerivations);

void BM_DecomposeAndExtend(benchmark::State& state) {
  CatalogEntry e = entry("g8:2");
  auto wf = detect_weak_filiform(e.algebra);
  for (auto _ : state) {
    DecompositionResult dec = decompose_weak_filiform(e.algebra, *e.form, *wf.flag);
    benchmark::DoNotOptimize(
        generalized_odd_double_extension(dec.base, dec.base_form, dec.data));
  }
}
BENCHMARK(BM_DecomposeAndExtend);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_dimension(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Classify)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchTwoEven(benchmark::State& state) {
  std::vector<Rational> grid = {-1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(small_search_nonexistence(2, grid));
}
BENCHMARK(BM_SearchTwoEven)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
