#include "rq/characters.hpp"
#include "rq/quantities.hpp"
#include "rq/series.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SeriesMultiply(benchmark::State& state) {
  const long n = state.range(0);
  auto a = rq::pochhammer_inf(1, 1, n);
  auto b = rq::agile_series(1, 5, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_SeriesDivide(benchmark::State& state) {
  const long n = state.range(0);
  auto a = rq::agile_series(1, 5, n);
  auto b = rq::agile_series(2, 5, n);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_SeriesDivide)->RangeMultiplier(2)->Range(64, 1024);

void BM_RqSeries(benchmark::State& state) {
  const auto s = rq::RQSpec::make(1, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(rq::rq_series(s, state.range(0)));
}
BENCHMARK(BM_RqSeries)->Arg(100)->Arg(300);

void BM_TauScan(benchmark::State& state) {
  const auto s = rq::RQSpec::make(1, 5, 26);
  for (auto _ : state) {
    rq::TauTable t(s);
    benchmark::DoNotOptimize(rq::tau_relation_scan(t, 25, 676));
  }
}
BENCHMARK(BM_TauScan)->Unit(benchmark::kMillisecond);

}  // namespace
