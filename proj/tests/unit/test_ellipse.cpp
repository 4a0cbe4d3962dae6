#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ooid/ellipse.hpp"
#include "ooid/error.hpp"
#include "ooid/flow.hpp"

namespace {

using ooid::EllipseSpec;

constexpr double kPi = std::numbers::pi;

TEST(Ellipse, Validation) {
  EXPECT_THROW(EllipseSpec({1.0, 2.0}).validate(), ooid::DomainError);
  EXPECT_THROW(EllipseSpec({1.0, 0.0}).validate(), ooid::DomainError);
  EXPECT_THROW(ooid::ellipse_residual({2.0, 1.0}, -0.1), ooid::DomainError);
  EXPECT_THROW(ooid::ellipse_residual({2.0, 1.0}, 2.0), ooid::DomainError);
  EXPECT_THROW(ooid::ellipse_scan({2.0, 1.0}, 1), ooid::ArgumentError);
}

TEST(Ellipse, ForcedConstants) {
  EXPECT_DOUBLE_EQ(ooid::forced_c1({1.0, 1.0}), 1.0 / kPi);
  EXPECT_DOUBLE_EQ(ooid::forced_c1({2.0, 1.0}), 1.0 / (4.0 * kPi));
  EXPECT_DOUBLE_EQ(ooid::forced_c1({3.0, 2.0}), 2.0 / (9.0 * kPi));
  EXPECT_EQ(ooid::forced_c2({1.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(ooid::forced_c2({2.0, 1.0}), 7.0 / (16.0 * kPi));
  EXPECT_DOUBLE_EQ(ooid::forced_c2({3.0, 2.0}), 19.0 / (324.0 * kPi));
}

TEST(Ellipse, ResidualVanishesAtAxisEndpoints) {
  for (const EllipseSpec e : {EllipseSpec{2.0, 1.0}, EllipseSpec{3.0, 2.0}, EllipseSpec{10.0, 0.1}}) {
    EXPECT_NEAR(ooid::ellipse_residual(e, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(ooid::ellipse_residual(e, 0.5 * kPi), 0.0, 1e-14);
    EXPECT_NEAR(ooid::ellipse_residual_reduced(e, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(ooid::ellipse_residual_reduced(e, 0.5 * kPi), 0.0, 1e-14);
  }
}

TEST(Ellipse, QuarterPiValue) {
  const EllipseSpec e{2.0, 1.0};
  EXPECT_NEAR(ooid::ellipse_residual(e, 0.25 * kPi), -0.1936, 1e-3);
  EXPECT_NEAR(ooid::ellipse_residual(e, 0.25 * kPi), -0.19361919665706327, 1e-14);
  EXPECT_NEAR(ooid::ellipse_residual(e, 0.25 * kPi), ooid::ellipse_residual_quarter_pi(e), 1e-12);
}

TEST(Ellipse, EvaluationRoutesAgree) {
  for (const EllipseSpec e : {EllipseSpec{2.0, 1.0}, EllipseSpec{1.3, 1.2}, EllipseSpec{5.0, 0.5}}) {
    const ooid::EllipseScan scan = ooid::ellipse_scan(e, 181);
    for (std::size_t i = 0; i < scan.phi.size(); ++i) {
      EXPECT_NEAR(scan.residual[i], ooid::ellipse_residual_reduced(e, scan.phi[i]), 1e-12);
    }
  }
}

TEST(Ellipse, ScanMaximum) {
  const ooid::EllipseScan scan = ooid::ellipse_scan({2.0, 1.0}, 91);
  EXPECT_EQ(scan.phi.front(), 0.0);
  EXPECT_EQ(scan.phi.back(), 0.5 * kPi);
  EXPECT_NEAR(scan.max_abs, 0.2381, 1e-4);
  EXPECT_NEAR(scan.phi_at_max, 32.0 * kPi / 180.0, 1e-12);
}

TEST(Ellipse, CircleIsSteady) {
  const ooid::EllipseScan scan = ooid::ellipse_scan({1.0, 1.0}, 91);
  for (double r : scan.residual) EXPECT_NEAR(r, 0.0, 1e-15);
}

TEST(Ellipse, ResidualShrinksAsAxesMerge) {
  double prev = ooid::ellipse_scan({2.0, 1.0}, 91).max_abs;
  for (double ratio : {1.1, 1.01, 1.001}) {
    const double m = ooid::ellipse_scan({ratio, 1.0}, 91).max_abs;
    EXPECT_GT(m, 0.0);
    EXPECT_LT(m, prev);
    prev = m;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Ellipse, MatchesMarkerResidual) {
  const EllipseSpec e{2.0, 1.0};
  const std::size_t n = 512;
  const ooid::FlowState s = ooid::make_flow_state(ooid::ellipse_markers(e, n));
  const ooid::ResidualField r = ooid::residual(s, ooid::forced_params(e));
  for (std::size_t k = 0; k <= n / 4; ++k) {
    const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    EXPECT_NEAR(r.values[k], ooid::ellipse_residual(e, std::min(phi, 0.5 * kPi)), 1e-3) << k;
  }
}

}  // namespace
