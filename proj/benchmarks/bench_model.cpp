#include <benchmark/benchmark.h>

#include "matecompat/model.hpp"
#include "matecompat/preferred_difference.hpp"

using namespace matecompat;

static void BM_AdvanceGeneration(benchmark::State& state) {
  SimParams params;
  params.population_cap = static_cast<int>(state.range(0));
  params.meetings = state.range(1);
  Rng rng(1);
  const Population pop = init_population(params, rng);
  for (auto _ : state) {
    auto gen = advance_generation(pop, params, rng);
    benchmark::DoNotOptimize(gen.children.females.data());
  }
  state.SetItemsProcessed(state.iterations() * params.meetings);
}
BENCHMARK(BM_AdvanceGeneration)->Args({100, 20000})->Args({1000, 200000});

static void BM_GenerationCompatibility(benchmark::State& state) {
  SimParams params;
  Rng rng(2);
  const Population pop = init_population(params, rng);
  const auto gen = advance_generation(pop, params, rng);
  for (auto _ : state) benchmark::DoNotOptimize(generation_compatibility(gen.mating_log, pop));
}
BENCHMARK(BM_GenerationCompatibility);

static void BM_GenotypeVariety(benchmark::State& state) {
  SimParams params;
  params.population_cap = static_cast<int>(state.range(0));
  Rng rng(3);
  const Population pop = init_population(params, rng);
  for (auto _ : state) benchmark::DoNotOptimize(genotype_variety(pop));
}
BENCHMARK(BM_GenotypeVariety)->Arg(100)->Arg(10000);
