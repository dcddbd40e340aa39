#include <benchmark/benchmark.h>

#include "matecompat/runner.hpp"

using namespace matecompat;

// Fixed 8 realizations of 50 generations at the reference parameters,
// varying only the worker count.
static void BM_Ensemble(benchmark::State& state) {
  SimParams params;
  params.max_generations = 50;
  const auto seeds = seeds_from_base(1, 8);
  const RunOptions options{1.0, 1.0};
  for (auto _ : state) {
    auto res = run_ensemble(params, seeds, static_cast<std::size_t>(state.range(0)), options);
    benchmark::DoNotOptimize(res.traces.data());
  }
}
BENCHMARK(BM_Ensemble)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
