#include <benchmark/benchmark.h>

#include "hypercheck/formal_series.hpp"
#include "hypercheck/hyp_eval.hpp"
#include "hypercheck/identities.hpp"
#include "hypercheck/pochhammer.hpp"

using namespace hypercheck;

static void BM_Pochhammer(benchmark::State& state) {
  const Rational a(5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(pochhammer(a, state.range(0)));
}
BENCHMARK(BM_Pochhammer)->Arg(8)->Arg(32)->Arg(128);

static void BM_EvalTerminating(benchmark::State& state) {
  const auto spec = hyp({Rational(-state.range(0)), Rational(1, 3), Rational(2, 7)}, {Rational(5, 11), Rational(9, 13)});
  for (auto _ : state) benchmark::DoNotOptimize(eval_terminating(spec));
}
BENCHMARK(BM_EvalTerminating)->Arg(6)->Arg(24)->Arg(96);

static void BM_SeriesMul(benchmark::State& state) {
  const long order = state.range(0);
  const auto p = series_from_hyp(hyp({Rational(1, 3)}, {Rational(5, 7)}), order);
  const auto q = series_from_hyp(hyp({Rational(2, 3)}, {Rational(9, 7)}, Rational(-1)), order);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(p, q));
}
BENCHMARK(BM_SeriesMul)->Arg(10)->Arg(30)->Arg(90);

static void BM_Thm2Sides(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sides_thm2(Rational(1, 3), Rational(5, 7), 2, 4, state.range(0)));
  }
}
BENCHMARK(BM_Thm2Sides)->Arg(30);

static void BM_Numeric3F2(benchmark::State& state) {
  const auto spec = hyp({Rational(1, 2), Rational(-8, 3), Rational(-43, 7)}, {Rational(1, 2), Rational(4, 3)});
  const Rational target(mpq_class(1, mpz_class("1000000000000000000000000000000")));
  for (auto _ : state) benchmark::DoNotOptimize(eval_3f2_unit_numeric(spec, state.range(0), target));
}
BENCHMARK(BM_Numeric3F2)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
