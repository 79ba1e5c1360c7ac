#include <benchmark/benchmark.h>

#include "bds/binomial.hpp"
#include "bds/pascal_row.hpp"

namespace {

void BM_CentralBinomial(benchmark::State& state, bds::BinomialStrategy strategy) {
  const auto m = state.range(0);
  for (auto _ : state) {
    auto value = bds::binomial(m, m / 2, strategy);
    benchmark::DoNotOptimize(value);
  }
  state.SetComplexityN(m);
}
BENCHMARK_CAPTURE(BM_CentralBinomial, row_recurrence, bds::BinomialStrategy::kRowRecurrence)
    ->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK_CAPTURE(BM_CentralBinomial, multiplicative, bds::BinomialStrategy::kMultiplicative)
    ->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();
BENCHMARK_CAPTURE(BM_CentralBinomial, factorial_quotient, bds::BinomialStrategy::kFactorialQuotient)
    ->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

void BM_PascalRowAdditive(benchmark::State& state) {
  for (auto _ : state) {
    auto row = bds::pascal_row(state.range(0));
    benchmark::DoNotOptimize(row);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PascalRowAdditive)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_PascalRowByRatio(benchmark::State& state) {
  for (auto _ : state) {
    auto row = bds::pascal_row_by_ratio(state.range(0));
    benchmark::DoNotOptimize(row);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PascalRowByRatio)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

}  // namespace
