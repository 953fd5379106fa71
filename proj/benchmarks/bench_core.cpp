#include <benchmark/benchmark.h>

#include "spoverma/modulespace.hpp"
#include "spoverma/tableaux.hpp"
#include "spoverma/verma.hpp"

using namespace spoverma;

static void BM_CountKn(benchmark::State& state) {
  Shape s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_kn(s));
}
BENCHMARK(BM_CountKn)->Args({3, 2})->Args({6, 3})->Args({7, 1});

static void BM_CountCst(benchmark::State& state) {
  Shape s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_cst(s));
}
BENCHMARK(BM_CountCst)->Args({3, 2})->Args({5, 2});

static void BM_ExpandVermaFamily(benchmark::State& state) {
  Shape s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::size_t total_terms = 0;
    for_each_verma_vector(s, [&](const BVector&, const SparseVector& v) {
      total_terms += v.terms().size();
    });
    benchmark::DoNotOptimize(total_terms);
  }
}
BENCHMARK(BM_ExpandVermaFamily)->Args({3, 2})->Args({4, 2});

static void BM_ApplyGenerator(benchmark::State& state) {
  Shape s(4, 2);
  SparseVector v = verma_vector({2, 3, 3, 1}, s);
  for (auto _ : state) benchmark::DoNotOptimize(apply_generator(Generator::F1, v));
}
BENCHMARK(BM_ApplyGenerator);

static void BM_RankVermaFamily(benchmark::State& state) {
  Shape s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<SparseVector> family;
  for_each_verma_vector(s, [&](const BVector&, const SparseVector& v) { family.push_back(v); });
  for (auto _ : state) benchmark::DoNotOptimize(rank(family));
}
BENCHMARK(BM_RankVermaFamily)->Args({3, 2});

static void BM_SubmoduleDimension(benchmark::State& state) {
  Shape s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(submodule_dimension(s));
}
BENCHMARK(BM_SubmoduleDimension)->Args({2, 1})->Args({3, 2});

BENCHMARK_MAIN();
