#include <benchmark/benchmark.h>

#include "ooid/ellipse.hpp"
#include "ooid/flow.hpp"

namespace {

void BM_FlowStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ooid::FlowState s = ooid::make_flow_state(ooid::ellipse_markers({2.0, 1.0}, n));
  const ooid::NonlocalParams np{0.2, 0.1, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(ooid::step(s, np, ooid::FlowConfig{}));
}
BENCHMARK(BM_FlowStep)->Arg(128)->Arg(512)->Arg(2048);

void BM_MarkerGeometry(benchmark::State& state) {
  const ooid::Polyline m = ooid::ellipse_markers({2.0, 1.0}, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(ooid::marker_geometry(m));
}
BENCHMARK(BM_MarkerGeometry);

}  // namespace
