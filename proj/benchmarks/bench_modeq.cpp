#include "rq/modeq.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_MineSelf(benchmark::State& state) {
  const auto s = rq::RQSpec::make(1, 2, 4);
  const long beta = state.range(0);
  const long box = state.range(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rq::mine(rq::MiningJob{rq::rq_builder(s), rq::rq_builder(s, beta), rq::Shape::box(box)}));
}
BENCHMARK(BM_MineSelf)->Args({2, 4})->Args({5, 6})->Args({7, 8})->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  rq::RationalMatrix m(n + 10, std::vector<rq::Rational>(n));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rq::Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rq::nullspace_rational(m, n));
}
BENCHMARK(BM_Nullspace)->Arg(25)->Arg(49)->Arg(81);

}  // namespace
