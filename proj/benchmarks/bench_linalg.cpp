#include <benchmark/benchmark.h>

#include "conlap/families.hpp"
#include "conlap/incidence.hpp"
#include "conlap/linalg.hpp"

using namespace conlap;

namespace {

// connection Laplacians of random clique complexes, growing with n
IntMatrix laplacian(int n) { return connection_matrix(random_whitney_complex(n, 0.5, 11)); }

void BM_Determinant(benchmark::State& state) {
  const auto l = laplacian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(l));
  state.counters["n"] = static_cast<double>(l.rows());
}
BENCHMARK(BM_Determinant)->DenseRange(6, 12, 2);

void BM_Inverse(benchmark::State& state) {
  const auto l = laplacian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_unimodular(l));
  state.counters["n"] = static_cast<double>(l.rows());
}
BENCHMARK(BM_Inverse)->DenseRange(6, 12, 2);

void BM_Inertia(benchmark::State& state) {
  const auto l = laplacian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inertia(l));
  state.counters["n"] = static_cast<double>(l.rows());
}
BENCHMARK(BM_Inertia)->DenseRange(6, 10, 2);

void BM_InertiaByCharpoly(benchmark::State& state) {
  const auto l = laplacian(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inertia_from_characteristic_polynomial(characteristic_polynomial(l)));
  }
  state.counters["n"] = static_cast<double>(l.rows());
}
BENCHMARK(BM_InertiaByCharpoly)->DenseRange(6, 10, 2);

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 1;
  }
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(6, 14, 4);

}  // namespace
