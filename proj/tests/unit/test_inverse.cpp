#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ooid/error.hpp"
#include "ooid/flow.hpp"
#include "ooid/inverse.hpp"
#include "ooid/nonlocal_map.hpp"

namespace {

using ooid::Polyline;
using ooid::Vec2;

const ooid::NonlocalParams kTruth{0.2, 0.1, 1.0};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

TEST(EstimateGeometry, UnitCircle) {
  const ooid::GeometryEstimate est = ooid::estimate_geometry(ooid::circle_markers(1.0, 256));
  EXPECT_NEAR(est.area, std::numbers::pi, 1e-3);
  for (const auto& g : est.points) EXPECT_NEAR(g.kappa, 1.0, 1e-3);
  EXPECT_FALSE(est.convexity_warning);
  EXPECT_FALSE(est.reversed);
}

TEST(EstimateGeometry, MatchesAnalyticShape) {
  const ooid::SteadyShape gs = ooid::solve_nonlocal(kTruth, 256);
  const ooid::GeometryEstimate est = ooid::estimate_geometry(gs.points);
  for (std::size_t k = 0; k < gs.points.size(); ++k) {
    EXPECT_NEAR(est.points[k].kappa, gs.kappa[k], 1e-3);
    EXPECT_NEAR(est.points[k].gamma, gs.gamma[k], 1e-3);
  }
}

TEST(EstimateGeometry, Errors) {
  EXPECT_THROW(ooid::estimate_geometry(ooid::circle_markers(1.0, 20)), ooid::ArgumentError);
  Polyline bowtie;
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 64.0;
    bowtie.push_back({std::sin(t), std::sin(2 * t)});
  }
  EXPECT_THROW(ooid::estimate_geometry(bowtie), ooid::TopologyError);
}

TEST(EstimateGeometry, SquareRaisesWarning) {
  Polyline square;
  for (int side = 0; side < 4; ++side) {
    for (int i = 0; i < 10; ++i) {
      const double t = i / 10.0;
      const Vec2 corners[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      square.push_back((1 - t) * corners[side] + t * corners[(side + 1) % 4]);
    }
  }
  EXPECT_TRUE(ooid::estimate_geometry(square).convexity_warning);
  EXPECT_TRUE(ooid::recover_params(square).convexity_warning);
}

TEST(Recover, UnitCircle) {
  const ooid::Recovery r = ooid::recover_params(ooid::circle_markers(1.0, 256));
  EXPECT_NEAR(r.c1, 1.0 / std::numbers::pi, 1e-3);
  EXPECT_NEAR(r.c2, 0.0, 1e-12);
}

TEST(Recover, NoiselessRoundTrip) {
  const ooid::Recovery r = ooid::recover_params(ooid::solve_nonlocal(kTruth, 512).points);
  EXPECT_LT(rel(r.c1, kTruth.c1), 1e-3);
  EXPECT_LT(rel(r.c2, kTruth.c2), 1e-3);
  EXPECT_FALSE(r.c2_clamped);
  EXPECT_FALSE(r.degenerate);
  EXPECT_FALSE(r.convexity_warning);
  EXPECT_LT(r.residual_norm, 1e-4);
}

TEST(Recover, SecondOrderUnderRefinement) {
  double prev = 0.0;
  for (std::size_t n : {128, 256, 512, 1024}) {
    const ooid::Recovery r = ooid::recover_params(ooid::solve_nonlocal(kTruth, n).points);
    const double err = std::max(rel(r.c1, kTruth.c1), rel(r.c2, kTruth.c2));
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / err), 2.0, 0.2) << n;
    prev = err;
  }
}

TEST(Recover, OrientationDoesNotMatter) {
  Polyline pts = ooid::solve_nonlocal(kTruth, 128).points;
  const ooid::Recovery a = ooid::recover_params(pts);
  std::reverse(pts.begin(), pts.end());
  const ooid::Recovery b = ooid::recover_params(pts);
  EXPECT_NEAR(a.c1, b.c1, 1e-13);
  EXPECT_NEAR(a.c2, b.c2, 1e-13);
  EXPECT_TRUE(ooid::estimate_geometry(pts).reversed);
}

TEST(Recover, ScaleLaw) {
  // Lengths scaled by s: c1 A kappa and c2 A y cos(gamma) stay dimensionless
  // only if c1 ~ 1/s and c2 ~ 1/s^3.
  const Polyline pts = ooid::solve_nonlocal(kTruth, 256).points;
  const ooid::Recovery base = ooid::recover_params(pts);
  for (double s : {0.5, 3.0}) {
    Polyline scaled = pts;
    for (Vec2& p : scaled) p = s * p;
    const ooid::Recovery r = ooid::recover_params(scaled);
    EXPECT_NEAR(r.c1 * s / base.c1, 1.0, 0.01);
    EXPECT_NEAR(r.c2 * s * s * s / base.c2, 1.0, 0.01);
  }
}

TEST(Recover, NoisySamples) {
  const Polyline clean = ooid::solve_nonlocal(kTruth, 512).points;
  const double sigma = 1e-4 * ooid::diameter(clean);
  std::mt19937_64 rng(99);
  std::normal_distribution<double> noise(0.0, sigma);
  for (int trial = 0; trial < 5; ++trial) {
    Polyline pts = clean;
    for (Vec2& p : pts) p = p + Vec2{noise(rng), noise(rng)};
    const ooid::Recovery r = ooid::recover_params(pts, 32);
    EXPECT_LT(rel(r.c1, kTruth.c1), 0.05) << trial;
    EXPECT_LT(rel(r.c2, kTruth.c2), 0.05) << trial;
  }
}

}  // namespace
