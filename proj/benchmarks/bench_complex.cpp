#include <benchmark/benchmark.h>

#include "conlap/energy.hpp"
#include "conlap/families.hpp"
#include "conlap/homotopy.hpp"
#include "conlap/morse.hpp"

using namespace conlap;

namespace {

void BM_Whitney(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(whitney_complex(g));
}
BENCHMARK(BM_Whitney)->RangeMultiplier(2)->Range(8, 64);

void BM_Green(benchmark::State& state) {
  const auto c = random_whitney_complex(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(green_matrix(c));
  state.counters["simplices"] = static_cast<double>(c.size());
}
BENCHMARK(BM_Green)->DenseRange(6, 12, 2);

void BM_Curvature(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(levitt_curvatures(g));
}
BENCHMARK(BM_Curvature)->RangeMultiplier(2)->Range(8, 64);

void BM_Classify(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 13);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->DenseRange(6, 12, 2);

}  // namespace
