#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ooid/ellipse.hpp"
#include "ooid/error.hpp"
#include "ooid/flow.hpp"
#include "ooid/nonlocal_map.hpp"

namespace {

using ooid::FlowConfig;
using ooid::FlowState;
using ooid::NonlocalParams;
using ooid::Polyline;
using ooid::Vec2;

const double kInvPi = 1.0 / std::numbers::pi;

// Rotated, shifted ellipse: no symmetry for the flow to hide behind.
Polyline skewed_ellipse(std::size_t n) {
  Polyline p(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const double x = 1.6 * std::cos(t);
    const double y = 0.9 * std::sin(t);
    p[k] = {0.3 + 0.8 * x - 0.6 * y, -0.2 + 0.6 * x + 0.8 * y};
  }
  return p;
}

Polyline mirror_y(const Polyline& p) {
  Polyline out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Vec2 q = p[(p.size() - k) % p.size()];
    out[k] = {q.x, -q.y};
  }
  return out;
}

TEST(FlowState, Validation) {
  EXPECT_THROW(ooid::make_flow_state(ooid::circle_markers(1.0, 16)), ooid::ArgumentError);
  Polyline eight;
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 64.0;
    eight.push_back({std::sin(t), std::sin(t) * std::cos(t)});
  }
  EXPECT_THROW(ooid::make_flow_state(eight), ooid::TopologyError);

  Polyline cw = ooid::circle_markers(1.0, 64);
  std::reverse(cw.begin(), cw.end());
  const FlowState s = ooid::make_flow_state(cw);
  EXPECT_GT(ooid::signed_area(s.markers), 0.0);
  EXPECT_NEAR(s.area, ooid::signed_area(s.markers), 1e-15);
}

TEST(FlowConfig, Validation) {
  EXPECT_NO_THROW(FlowConfig{}.validate());
  EXPECT_THROW((FlowConfig{.dt_safety = 0.0}.validate()), ooid::ArgumentError);
  EXPECT_THROW((FlowConfig{.dt_safety = 1.5}.validate()), ooid::ArgumentError);
  EXPECT_THROW((FlowConfig{.max_steps = 0}.validate()), ooid::ArgumentError);
  EXPECT_THROW((FlowConfig{.redistribute_every = 0}.validate()), ooid::ArgumentError);
}

TEST(Geometry, UnitCircle) {
  const FlowState s = ooid::make_flow_state(ooid::circle_markers(1.0, 256));
  const auto geo = ooid::geometry_of(s);
  for (std::size_t k = 0; k < geo.size(); ++k) {
    EXPECT_NEAR(geo[k].kappa, 1.0, 1e-3);
    EXPECT_NEAR(ooid::norm(geo[k].normal), 1.0, 1e-15);
    EXPECT_LT(ooid::dot(geo[k].normal, s.markers[k]), 0.0);
    EXPECT_NEAR(geo[k].lever, std::abs(s.markers[k].y) * std::cos(geo[k].gamma), 1e-15);
    EXPECT_GE(geo[k].gamma, 0.0);
    EXPECT_LE(geo[k].gamma, 0.5 * std::numbers::pi);
  }
}

TEST(Geometry, EllipseEndpoints) {
  const Polyline m = ooid::ellipse_markers({2.0, 1.0}, 512);
  const auto geo = ooid::marker_geometry(m);
  EXPECT_NEAR(geo[0].kappa, 2.0, 1e-3);
  EXPECT_NEAR(geo[128].kappa, 0.25, 1e-4);
  EXPECT_NEAR(geo[0].gamma, 0.5 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(geo[128].gamma, 0.0, 1e-12);
}

TEST(Geometry, ConvexPolygonNormalsPointInward) {
  const Polyline hex = ooid::circle_markers(1.0, 6);
  const Vec2 c = ooid::centroid(hex);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const auto geo = ooid::marker_geometry(hex);
    EXPECT_GT(ooid::dot(geo[k].normal, c - hex[k]), 0.0);
  }
}

TEST(Geometry, CollinearAndDuplicateMarkers) {
  const Polyline p = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}};
  EXPECT_EQ(ooid::marker_geometry(p)[1].kappa, 0.0);
  const Polyline dup = {{0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_THROW(ooid::marker_geometry(dup), ooid::DegeneracyError);
}

TEST(Residual, SteadyCircle) {
  const FlowState s = ooid::make_flow_state(ooid::circle_markers(1.0, 256));
  EXPECT_LT(ooid::residual(s, {kInvPi, 0.0, 1.0}).max_abs, 1e-3);
}

TEST(Residual, SynthesizedSteadyShape) {
  const NonlocalParams np{0.2, 0.1, 1.0};
  const ooid::SteadyShape gs = ooid::solve_nonlocal(np, 512);
  const FlowState s = ooid::make_flow_state(ooid::shape_markers(gs, 512));
  EXPECT_LT(ooid::residual(s, np).max_abs, 1e-4);
}

TEST(Residual, RefinesAtSecondOrder) {
  const NonlocalParams np{0.2, 0.1, 1.0};
  const ooid::SteadyShape gs = ooid::solve_nonlocal(np, 2048);
  double prev = 0.0;
  for (std::size_t n : {128, 256, 512}) {
    const double r = ooid::residual(ooid::make_flow_state(ooid::shape_markers(gs, n)), np).max_abs;
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / r), 2.0, 0.3) << n;
    prev = r;
  }
}

TEST(Step, SteadyCircleBarelyMoves) {
  const FlowState s = ooid::make_flow_state(ooid::circle_markers(1.0, 256));
  const FlowState next = ooid::step(s, {kInvPi, 0.0, 1.0}, FlowConfig{});
  EXPECT_LT(next.last_max_displacement, 1e-6);
  EXPECT_EQ(next.step_count, 1u);
  EXPECT_GT(next.time, 0.0);
}

TEST(Step, OversizedCircleShrinksUndersizedGrows) {
  const NonlocalParams np{kInvPi, 0.0, 1.0};
  FlowState big = ooid::make_flow_state(ooid::circle_markers(2.0, 128));
  FlowState small = ooid::make_flow_state(ooid::circle_markers(0.5, 128));
  for (int i = 0; i < 50; ++i) {
    const FlowState b = ooid::step(big, np, FlowConfig{});
    const FlowState s = ooid::step(small, np, FlowConfig{});
    EXPECT_LT(b.area, big.area);
    EXPECT_GT(s.area, small.area);
    big = b;
    small = s;
  }
}

TEST(Step, DisplacementCap) {
  // A large friction coefficient makes the residual large; no marker may move a quarter spacing.
  const FlowState s = ooid::make_flow_state(ooid::ellipse_markers({3.0, 1.0}, 128));
  const double h = ooid::min_edge_length(s.markers);
  const FlowState next = ooid::step(s, {5.0, 50.0, 1.0}, FlowConfig{.dt_safety = 1.0});
  EXPECT_LT(next.last_max_displacement, 0.25 * h);
}

TEST(Step, MirrorEquivariance) {
  const NonlocalParams np{0.2, 0.1, 1.0};
  FlowState a = ooid::make_flow_state(skewed_ellipse(96));
  FlowState b = ooid::make_flow_state(mirror_y(a.markers));
  for (int i = 0; i < 20; ++i) {
    a = ooid::step(a, np, FlowConfig{});
    b = ooid::step(b, np, FlowConfig{});
    const Polyline ma = mirror_y(a.markers);
    double worst = 0.0;
    for (std::size_t k = 0; k < ma.size(); ++k) worst = std::max(worst, ooid::distance(ma[k], b.markers[k]));
    EXPECT_LT(worst, 1e-10) << "step " << i;
    EXPECT_NEAR(a.time, b.time, 1e-12 * a.time);
  }
}

TEST(Step, RedistributionKeepsSpacingUniform) {
  FlowState s = ooid::make_flow_state(skewed_ellipse(128));
  for (int i = 0; i < 30; ++i) s = ooid::step(s, {0.2, 0.1, 1.0}, FlowConfig{});
  EXPECT_LT(ooid::max_edge_length(s.markers), 2.0 * ooid::min_edge_length(s.markers));
}

TEST(Evolve, SteadyShapeConvergesImmediately) {
  const NonlocalParams np{0.2, 0.1, 1.0};
  const FlowState s = ooid::make_flow_state(ooid::shape_markers(ooid::solve_nonlocal(np, 256), 256));
  const ooid::EvolveResult r = ooid::evolve_to_steady(s, np, FlowConfig{.stop_residual = 1e-3});
  EXPECT_TRUE(r.converged());
  EXPECT_EQ(r.state.step_count, 0u);
  EXPECT_EQ(r.history.size(), 1u);
}

TEST(Evolve, EllipseIsNotSteady) {
  const ooid::EllipseSpec e{2.0, 1.0};
  const FlowState s = ooid::make_flow_state(ooid::ellipse_markers(e, 256));
  const ooid::EvolveResult r = ooid::evolve_to_steady(s, ooid::forced_params(e), FlowConfig{.max_steps = 10});
  EXPECT_EQ(r.status, ooid::FlowStatus::MaxSteps);
  EXPECT_GT(r.history.front().max_residual, 0.1);
  EXPECT_EQ(r.history.size(), 11u);
}

TEST(Evolve, HistoryIsConsistent) {
  const FlowState s = ooid::make_flow_state(ooid::circle_markers(1.5, 64));
  const ooid::EvolveResult r = ooid::evolve_to_steady(s, {kInvPi, 0.0, 1.0}, FlowConfig{.max_steps = 25});
  ASSERT_EQ(r.history.size(), 26u);
  for (std::size_t i = 0; i < r.history.size(); ++i) EXPECT_EQ(r.history[i].step, i);
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_GT(r.history[i].time, r.history[i - 1].time);
  EXPECT_EQ(r.history.back().area, r.state.area);
  EXPECT_LT(r.centroid_drift, 1e-12);
}

TEST(Evolve, CircleRecoversSteadyRadius) {
  // dt_safety is raised from the default so 10^4 steps cover enough flow time.
  const NonlocalParams np{kInvPi, 0.0, 1.0};
  for (double r0 : {0.9, 1.1}) {
    const FlowState s = ooid::make_flow_state(ooid::circle_markers(r0, 256));
    const ooid::EvolveResult r =
        ooid::evolve_to_steady(s, np, FlowConfig{.dt_safety = 0.9, .max_steps = 10000, .stop_residual = 1e-6});
    EXPECT_NE(r.status, ooid::FlowStatus::TopologyFailure);
    EXPECT_NEAR(std::sqrt(r.state.area / std::numbers::pi), 1.0, 0.01) << r0;
  }
}

TEST(Evolve, ScaledSteadyShapeReturns) {
  const NonlocalParams np{0.2, 0.1, 1.0};
  const ooid::SteadyShape gs = ooid::solve_nonlocal(np, 512);
  Polyline m = ooid::shape_markers(gs, 128);
  for (Vec2& p : m) p = 1.1 * p;
  const ooid::EvolveResult r = ooid::evolve_to_steady(
      ooid::make_flow_state(m), np, FlowConfig{.dt_safety = 0.9, .max_steps = 10000, .stop_residual = 1e-6});
  EXPECT_TRUE(r.converged());
  EXPECT_LT(ooid::hausdorff_distance(r.state.markers, gs.points), 1e-3 * ooid::diameter(gs.points));
}

// Ring of radii 16 and 20 cut by a slit 0.1 wide at the outer rim. The flat end
// faces advance outward into the slit by up to a quarter spacing per step.
Polyline split_ring() {
  const double outer = 20.0;
  const double inner = 16.0;
  const double half = std::asin(0.05 / outer);
  const double pi2 = 2.0 * std::numbers::pi;
  Polyline p;
  const int arc = 120;
  for (int k = 0; k <= arc; ++k) {
    const double t = half + (pi2 - 2.0 * half) * k / arc;
    p.push_back({outer * std::cos(t), outer * std::sin(t)});
  }
  for (int k = 1; k < 4; ++k) {
    const double r = outer - (outer - inner) * k / 4.0;
    p.push_back({r * std::cos(-half), r * std::sin(-half)});
  }
  for (int k = 0; k <= arc; ++k) {
    const double t = pi2 - half - (pi2 - 2.0 * half) * k / arc;
    p.push_back({inner * std::cos(t), inner * std::sin(t)});
  }
  for (int k = 1; k < 4; ++k) {
    const double r = inner + (outer - inner) * k / 4.0;
    p.push_back({r * std::cos(half), r * std::sin(half)});
  }
  return p;
}

const NonlocalParams kExpanding{1e-4, 0.0, 1.0};

TEST(Evolve, TopologyFailureEndsRunWithPartialHistory) {
  const Polyline ring = split_ring();
  ASSERT_TRUE(ooid::is_simple(ring));
  const ooid::EvolveResult r = ooid::evolve_to_steady(ooid::make_flow_state(ring), kExpanding,
                                                      FlowConfig{.dt_safety = 0.9, .max_steps = 50});
  ASSERT_EQ(r.status, ooid::FlowStatus::TopologyFailure);
  EXPECT_FALSE(r.converged());
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_EQ(r.history.size(), r.state.step_count + 1);
  EXPECT_TRUE(ooid::is_simple(r.state.markers));
}

TEST(Step, TopologyErrorCarriesLastValidState) {
  FlowState s = ooid::make_flow_state(split_ring());
  int steps = 0;
  try {
    for (; steps < 50; ++steps) s = ooid::step(s, kExpanding, FlowConfig{.dt_safety = 0.9});
    FAIL() << "slit never closed";
  } catch (const ooid::FlowTopologyError& e) {
    EXPECT_EQ(e.last_valid().step_count, s.step_count);
    EXPECT_EQ(e.last_valid().markers, s.markers);
    EXPECT_TRUE(ooid::is_simple(e.last_valid().markers));
  }
}

}  // namespace
