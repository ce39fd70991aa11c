#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "granred/reduction.hpp"

namespace {

void BM_reduce(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto attrs = static_cast<std::size_t>(state.range(1));
  const bool accelerate = state.range(2) != 0;
  const auto table = granred_bench::random_table(rows, attrs, 3, 21);
  granred::ReduceOptions options;
  options.accelerate = accelerate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(granred::reduce(table, options));
  }
  state.SetLabel(accelerate ? "accelerated" : "plain");
}
BENCHMARK(BM_reduce)
    ->Args({500, 12, 0})
    ->Args({500, 12, 1})
    ->Args({5000, 18, 0})
    ->Args({5000, 18, 1})
    ->Args({20000, 18, 0})
    ->Args({20000, 18, 1});

}  // namespace

BENCHMARK_MAIN();
