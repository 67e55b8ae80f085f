#include <benchmark/benchmark.h>

#include "skewbrace/brace.hpp"
#include "skewbrace/search.hpp"
#include "skewbrace/ybe.hpp"

namespace {

using namespace skewbrace;

void BM_EnumerateGroups(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groups(order));
}
BENCHMARK(BM_EnumerateGroups)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateBraces(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const bool up_to_iso = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_braces(order, up_to_iso));
}
BENCHMARK(BM_EnumerateBraces)
    ->ArgsProduct({{6, 8}, {0, 1}})
    ->ArgNames({"order", "iso"})
    ->Unit(benchmark::kMillisecond);

void BM_CheckYbe(benchmark::State& state) {
  const SkewBrace b = opposite_brace(symmetric_group_3());
  const YbeMap r = build_r(b);
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(r));
}
BENCHMARK(BM_CheckYbe);

void BM_IdentitySuite(benchmark::State& state) {
  const auto braces = enumerate_braces(8, true).braces;
  for (auto _ : state) {
    for (const SkewBrace& b : braces) benchmark::DoNotOptimize(identity_suite(b.dot(), b.circ()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(braces.size()));
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto braces = enumerate_braces(8, false).braces;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(braces[i++ % braces.size()]));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
