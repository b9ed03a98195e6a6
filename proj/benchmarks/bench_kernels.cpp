#include <benchmark/benchmark.h>

#include "schurforge/cache.hpp"
#include "schurforge/conjectures.hpp"
#include "schurforge/lr.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/segre.hpp"
#include "schurforge/transition.hpp"

using namespace schurforge;

static void BM_LrExpandSquare(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  Partition square = Rectangle(m, m).as_partition();
  for (auto _ : state) {
    auto expansion = lr_expand(square, square);
    benchmark::DoNotOptimize(expansion);
  }
}
BENCHMARK(BM_LrExpandSquare)->DenseRange(2, 4);

static void BM_GDirect(benchmark::State& state) {
  GInput input(2, state.range(0));
  for (auto _ : state) {
    ExactInt value = g_direct(input);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_GDirect)->Arg(6)->Arg(8)->Arg(10);

static void BM_GCauchy(benchmark::State& state) {
  GInput input(state.range(0), state.range(1));
  for (auto _ : state) {
    ExactInt value = g_cauchy(input);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_GCauchy)->Args({2, 8})->Args({2, 12})->Args({3, 9});

static void BM_GTwoRows(benchmark::State& state) {
  std::int64_t ell = state.range(0);
  for (auto _ : state) {
    ExactInt value = g_two_rows(ell);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_GTwoRows)->Arg(4)->Arg(8)->Arg(12);

static void BM_SeptupleTerms(benchmark::State& state) {
  std::int64_t ell = state.range(0);
  for (auto _ : state) {
    auto terms = septuple_terms(ell);
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_SeptupleTerms)->Arg(6)->Arg(8);

static void BM_KostkaBlock(benchmark::State& state) {
  std::int64_t weight = state.range(0);
  std::vector<Partition> labels = partitions_of(weight);
  for (auto _ : state) {
    state.PauseTiming();
    memo_clear();
    state.ResumeTiming();
    ExactInt checksum = 0;
    for (const Partition& shape : labels)
      for (const Partition& content : labels) checksum += kostka(shape, content);
    benchmark::DoNotOptimize(checksum);
  }
}
BENCHMARK(BM_KostkaBlock)->Arg(8)->Arg(10);

static void BM_TermwiseScan(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    memo_clear();
    state.ResumeTiming();
    ValuationReport report = termwise_scan(2, 1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_TermwiseScan)->Arg(2)->Arg(3);

static void BM_SegreResultant(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BiChowClass cls = segre_pullback_resultant(m, n);
    benchmark::DoNotOptimize(cls);
  }
}
BENCHMARK(BM_SegreResultant)->Args({2, 2})->Args({3, 3});

BENCHMARK_MAIN();
