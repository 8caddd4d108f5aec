#include <benchmark/benchmark.h>

#include "ctwin/bent.hpp"
#include "ctwin/graphs.hpp"
#include "ctwin/swap_search.hpp"
#include "ctwin/walsh.hpp"

using namespace ctwin;

static void BM_WalshTransform(benchmark::State& state) {
  const auto f = tau_function(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(walsh_transform(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_WalshTransform)->DenseRange(2, 10, 2);

static void BM_BuildDelta(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_delta(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildDelta)->DenseRange(2, 8, 2);

static void BM_VerifySrg(benchmark::State& state) {
  const auto d = build_delta(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_srg(d, Colour::Red));
}
BENCHMARK(BM_VerifySrg)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_VerifySrgByTranslation(benchmark::State& state) {
  const auto d = build_delta(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_srg_by_translation(d, Colour::Red));
}
BENCHMARK(BM_VerifySrgByTranslation)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

static void BM_SearchSwap(benchmark::State& state) {
  const auto d = build_delta(static_cast<unsigned>(state.range(0)));
  SearchOptions opts;
  opts.forward_check = state.range(1) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(search_swap(d, opts));
}
BENCHMARK(BM_SearchSwap)
    ->ArgsProduct({{2, 3}, {0, 1}})
    ->ArgNames({"m", "fc"})
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
