#include <benchmark/benchmark.h>

#include "echspec/zeta.hpp"

using namespace echspec;

namespace {

void BM_Hurwitz(benchmark::State& state) {
  const ComplexVal s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, 0.7));
}
BENCHMARK(BM_Hurwitz)->Arg(1)->Arg(10)->Arg(100);

void BM_EchZeta(benchmark::State& state) {
  const Ellipsoid e(Rational(3), Rational(7));
  const auto conv = static_cast<ZetaConvention>(state.range(0));
  const ComplexVal s(-1.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ech_zeta(s, e, conv));
}
BENCHMARK(BM_EchZeta)->DenseRange(0, 2);

}  // namespace
