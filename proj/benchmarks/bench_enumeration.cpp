#include <benchmark/benchmark.h>

#include "catwords/oracle.hpp"
#include "catwords/patterns.hpp"
#include "catwords/word.hpp"

using namespace catwords;

static void BM_AllCatalanWords(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_word(n, [&](std::span<const Letter>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AllCatalanWords)->DenseRange(8, 12, 2);

// Pruned DFS: only the last window is checked at each extension.
static void BM_Distribution(benchmark::State& state) {
  const RelationPair pairs[] = {RelationPair::parse("!=,!="), RelationPair::parse(">,!="),
                                RelationPair::parse("=,>=")};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (auto p : pairs) benchmark::DoNotOptimize(distribution(p, n));
}
BENCHMARK(BM_Distribution)->DenseRange(10, 16, 2);

static void BM_AllPairsAtLength(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (auto p : all_pairs()) benchmark::DoNotOptimize(count_avoiding(p, n));
}
BENCHMARK(BM_AllPairsAtLength)->Arg(10)->Arg(12);
