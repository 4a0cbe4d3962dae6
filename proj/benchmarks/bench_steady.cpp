#include <benchmark/benchmark.h>

#include "ooid/local_steady.hpp"
#include "ooid/nonlocal_map.hpp"

namespace {

void BM_MapF(benchmark::State& state) {
  const double c1_hat = 0.5 * ooid::c1_crit(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ooid::map_F(c1_hat, 0.5));
}
BENCHMARK(BM_MapF);

void BM_MapFNearCritical(benchmark::State& state) {
  const double c1_hat = (1.0 - 1e-9) * ooid::c1_crit(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ooid::map_F(c1_hat, 0.5));
}
BENCHMARK(BM_MapFNearCritical);

void BM_InvertF(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ooid::invert_F(0.2, 0.5));
}
BENCHMARK(BM_InvertF);

void BM_SolveNonlocal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ooid::solve_nonlocal({0.2, 0.1, 1.0}, n));
}
BENCHMARK(BM_SolveNonlocal)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
