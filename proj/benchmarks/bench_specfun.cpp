#include <benchmark/benchmark.h>

#include "ooid/specfun.hpp"

namespace {

// One argument per evaluation regime of the Dawson integral.
void BM_Dawson(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(ooid::dawson(z));
}
BENCHMARK(BM_Dawson)->Arg(10)->Arg(150)->Arg(450)->Arg(3000);

void BM_InverseDawson(benchmark::State& state) {
  const double v = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(ooid::inverse_dawson_rising(v));
}
BENCHMARK(BM_InverseDawson)->Arg(10)->Arg(54);

}  // namespace
