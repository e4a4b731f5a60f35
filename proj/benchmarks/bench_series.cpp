#include <benchmark/benchmark.h>

#include "catwords/families.hpp"
#include "catwords/series.hpp"

using namespace catwords;

static void BM_ClosedForms(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (const auto& f : registry())
      if (f.kind == FamilyKind::Bivariate) benchmark::DoNotOptimize(closed_form_series(f, order));
}
BENCHMARK(BM_ClosedForms)->Arg(12)->Arg(24);

static void BM_FixedPoint(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto strategy = state.range(1) ? AuxStrategy::CoIterate : AuxStrategy::Symbolic;
  for (auto _ : state)
    for (const auto& f : registry())
      if (f.functional_equation)
        benchmark::DoNotOptimize(functional_equation_series(f, order, strategy));
}
BENCHMARK(BM_FixedPoint)->Args({12, 0})->Args({12, 1})->Args({24, 0});

static void BM_Sqrt(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto x = BivariateSeries::x(order), y = BivariateSeries::y(order);
  const auto r = 1 - 2 * x - x * x - 4 * x * x * x * y;
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(r));
}
BENCHMARK(BM_Sqrt)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_MAIN();
