#include "rq/numerics.hpp"
#include "rq/recognize.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SingularModulus(benchmark::State& state) {
  const auto ctx = rq::PrecisionContext::with_digits(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rq::singular_modulus(3, ctx));
}
BENCHMARK(BM_SingularModulus)->Arg(60)->Arg(200);

void BM_EvalRq(benchmark::State& state) {
  const auto ctx = rq::PrecisionContext::with_digits(state.range(0));
  const auto s = rq::RQSpec::make(1, 2, 5);
  const rq::Real q = rq::nome(1, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(rq::eval_rq(s, q, ctx));
}
BENCHMARK(BM_EvalRq)->Arg(60)->Arg(200);

void BM_ContinuedFraction(benchmark::State& state) {
  const auto ctx = rq::PrecisionContext::with_digits(60);
  const rq::Real q(std::string("0.2"), ctx.bits());
  rq::CfParams params{ctx.zero(), ctx.zero(), 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(rq::eval_cf(rq::CfKind::theorem6, params, q, ctx));
}
BENCHMARK(BM_ContinuedFraction);

void BM_Recognize(benchmark::State& state) {
  const auto ctx = rq::PrecisionContext::with_digits(10 * state.range(0) + 10);
  const rq::Real x = rq::sqrt(rq::sqrt(ctx.from(2L)) + 1L);
  for (auto _ : state) benchmark::DoNotOptimize(rq::recognize_algebraic(x, state.range(0), ctx));
}
BENCHMARK(BM_Recognize)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
