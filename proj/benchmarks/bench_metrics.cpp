#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "matecompat/histogram.hpp"

using namespace matecompat;

namespace {

std::vector<double> gaussian(std::size_t n, double mean, double sd, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(mean, sd);
  std::vector<double> v(n);
  for (auto& x : v) x = nd(gen);
  return v;
}

}  // namespace

static void BM_BuildHistogram(benchmark::State& state) {
  const auto values = gaussian(static_cast<std::size_t>(state.range(0)), 2.7, 5.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_histogram(values, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildHistogram)->Arg(1000)->Arg(100000);

static void BM_Compatibility(benchmark::State& state) {
  const double width = 1.0 / static_cast<double>(state.range(0));
  const auto f = build_histogram(gaussian(100000, 2.7, 5.2, 1), width);
  const auto m = build_histogram(gaussian(100000, -2.9, 5.1, 2), width);
  for (auto _ : state) benchmark::DoNotOptimize(compatibility(f, m));
  state.counters["bins"] = static_cast<double>(f.bins.size());
}
BENCHMARK(BM_Compatibility)->Arg(1)->Arg(10)->Arg(100);
