#include <benchmark/benchmark.h>

#include <cmath>

#include <moeblox/loxodrome.hpp>

using namespace moeblox;

namespace {

const MoebiusMap kMap = MoebiusMap{1.0, Complex{0.5, 1}, Complex{0, 0.3}, 2.0}.normalized();
const LoxodromeTriple kTriple = apply_map(kMap, standard_triple(SlsParameter::finite(1.0)));

void BM_Product(benchmark::State& state) {
  const Cycle a{1, 0.2, -0.3, -1};
  const Cycle b{0.5, 1, 2, -3};
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_Product);

void BM_ApplyToCycle(benchmark::State& state) {
  const Cycle c{1, 0.2, -0.3, -1};
  for (auto _ : state) benchmark::DoNotOptimize(apply_to_cycle(kMap, c));
}
BENCHMARK(BM_ApplyToCycle);

void BM_StandardMap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(standard_map(kTriple));
}
BENCHMARK(BM_StandardMap);

void BM_ContainsPoint(benchmark::State& state) {
  const ExtendedPoint p = apply_to_point(kMap, std::exp(Complex{1, kTwoPi} * 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(contains_point(kTriple, p).member);
}
BENCHMARK(BM_ContainsPoint);

void BM_ContainsPointOracle(benchmark::State& state) {
  const ExtendedPoint p = apply_to_point(kMap, std::exp(Complex{1, kTwoPi} * 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(contains_point_oracle(kTriple, p));
}
BENCHMARK(BM_ContainsPointOracle);

void BM_SampleCurve(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_curve(kTriple, -3.0, 3.0, count).size());
  state.SetItemsProcessed(state.iterations() * 2 * count);
}
BENCHMARK(BM_SampleCurve)->Arg(256)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
