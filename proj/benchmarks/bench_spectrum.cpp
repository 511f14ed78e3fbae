#include <benchmark/benchmark.h>

#include "echspec/asymptotics.hpp"
#include "echspec/spectrum.hpp"

using namespace echspec;

namespace {

const Ellipsoid kIrrational(Rational(1), Rational::parse("665857/470832"));

void BM_FloorSumNative(benchmark::State& state) {
  const BigInt n(state.range(0)), p(123457), q(98765), m(1000003);
  for (auto _ : state) benchmark::DoNotOptimize(floor_sum(n, p, q, m));
}
BENCHMARK(BM_FloorSumNative)->Range(1 << 10, 1 << 30);

void BM_FloorSumBig(benchmark::State& state) {
  const BigInt n = BigInt(1) << static_cast<unsigned long>(state.range(0));
  const BigInt p = (BigInt(1) << 70) + 12345, q = BigInt(1) << 65, m = (BigInt(1) << 68) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(floor_sum(n, p, q, m));
}
BENCHMARK(BM_FloorSumBig)->Arg(40)->Arg(80)->Arg(160);

void BM_NthCapacity(benchmark::State& state) {
  const BigInt k = BigInt(10) << static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_capacity(kIrrational, k));
}
BENCHMARK(BM_NthCapacity)->Arg(10)->Arg(30)->Arg(60)->Arg(120);

void BM_SpectrumRange(benchmark::State& state) {
  const BigInt k0(1000000);
  const BigInt k1 = k0 + state.range(0) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_range(kIrrational, k0, k1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpectrumRange)->Range(1 << 6, 1 << 16);

void BM_DSequence(benchmark::State& state) {
  const BigInt j0(1000000);
  for (auto _ : state) benchmark::DoNotOptimize(d_sequence(kIrrational, j0, j0 + state.range(0) - 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DSequence)->Arg(1 << 12);

}  // namespace
