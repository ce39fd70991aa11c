#include <benchmark/benchmark.h>

#include <numeric>

#include "bench_util.hpp"
#include "granred/measures.hpp"
#include "granred/partition.hpp"

namespace {

void BM_partition_by(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto attrs = static_cast<std::size_t>(state.range(1));
  const auto table = granred_bench::random_table(rows, attrs, 4, 11);
  granred::AttributeSubset subset(attrs);
  std::iota(subset.begin(), subset.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(granred::partition_by(table, subset));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_partition_by)
    ->Args({1000, 4})
    ->Args({1000, 16})
    ->Args({100000, 16});

void BM_refine(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto table = granred_bench::random_table(rows, 8, 4, 12);
  const auto base = granred::partition_by(table, {0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(granred::refine(base, table, 2));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_refine)->Arg(1000)->Arg(100000);

void BM_granular_conditional_entropy(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto table = granred_bench::random_table(rows, 8, 4, 13);
  const auto cond = granred::partition_by(table, {0, 1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(granred::granular_conditional_entropy(cond, table));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(rows));
}
BENCHMARK(BM_granular_conditional_entropy)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
