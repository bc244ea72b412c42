#include <benchmark/benchmark.h>

#include "mockforms/registry.hpp"

using namespace mockforms;

static void BM_ThetaExpand(benchmark::State& st) {
  const ExpRational T(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(theta(ExpRational(1, 2), ExpRational(3, 2), T, SignVariant::minus));
}
BENCHMARK(BM_ThetaExpand)->Arg(12)->Arg(48)->Arg(192);

static void BM_Eta(benchmark::State& st) {
  const ExpRational T(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(eta(2, T));
}
BENCHMARK(BM_Eta)->Arg(50)->Arg(500);

static void BM_Numerator(benchmark::State& st) {
  const ExpRational T(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(numerator(3, ExpRational(1, 2), T));
}
BENCHMARK(BM_Numerator)->Arg(10)->Arg(20);

static void BM_SeriesMul(benchmark::State& st) {
  const ExpRational T(st.range(0));
  QXSeries a = theta(ExpRational(1), ExpRational(2), T), b = eta(1, T);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(12)->Arg(40);

static void BM_PhiNumeric(benchmark::State& st) {
  PhiParams p;
  p.m = ExpRational(3, 2);
  NumericPoint pt{{0.1, 0.9}, {0.3, 0.2}, {0.7, 0.4}};
  for (auto _ : st) benchmark::DoNotOptimize(phi_numeric(p, pt));
}
BENCHMARK(BM_PhiNumeric);

static void BM_SpanDim(benchmark::State& st) {
  SpanOptions opt;
  auto gens = build_V(st.range(0), ExpRational(1, 2), opt.trunc);
  for (auto _ : st) benchmark::DoNotOptimize(span_dim(gens, opt));
}
BENCHMARK(BM_SpanDim)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Case(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_case("NUM-0", {{"m", "2"}, {"p", "1"}}));
}
BENCHMARK(BM_Case)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
