#include "ooid/ellipse.hpp"

#include <cmath>
#include <numbers>

#include "ooid/error.hpp"

namespace ooid {

namespace {

constexpr double kPi = std::numbers::pi;

void check_phi(double phi) {
  if (!(phi >= 0.0 && phi <= 0.5 * kPi)) throw DomainError("ellipse: phi must lie in [0, pi/2]");
}

}  // namespace

void EllipseSpec::validate() const {
  if (!(std::isfinite(a) && std::isfinite(b) && b > 0.0 && a >= b)) {
    throw DomainError("EllipseSpec: need a >= b > 0");
  }
}

double forced_c1(const EllipseSpec& e) {
  e.validate();
  return e.b / (e.a * e.a * kPi);
}

double forced_c2(const EllipseSpec& e) {
  e.validate();
  const double a = e.a;
  const double b = e.b;
  return (a * a * a - b * b * b) / (a * a * a * a * b * b * kPi);
}

NonlocalParams forced_params(const EllipseSpec& e) { return {forced_c1(e), forced_c2(e), 1.0}; }

double ellipse_residual(const EllipseSpec& e, double phi) {
  check_phi(phi);
  const double c1 = forced_c1(e);
  const double c2 = forced_c2(e);
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  // r(phi) = (a cos, b sin), r' = (-a sin, b cos), r'' = (-a cos, -b sin)
  const double dx = -e.a * s;
  const double dy = e.b * c;
  const double ddx = -e.a * c;
  const double ddy = -e.b * s;
  const double speed = std::hypot(dx, dy);
  const double kappa = (dx * ddy - dy * ddx) / (speed * speed * speed);
  const double cos_gamma = std::abs(dx) / speed;
  const double y = e.b * s;
  const double area = kPi * e.a * e.b;
  return -1.0 + c1 * area * kappa + c2 * area * y * cos_gamma;
}

double ellipse_residual_reduced(const EllipseSpec& e, double phi) {
  check_phi(phi);
  const double c1 = forced_c1(e);
  const double c2 = forced_c2(e);
  const double a = e.a;
  const double b = e.b;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double w = a * a * s * s + b * b * c * c;
  double friction = 0.0;
  if (s > 0.0) friction = c2 * a * b * b * kPi * s / std::sqrt(1.0 + (b * b * c * c) / (a * a * s * s));
  return -1.0 + c1 * a * a * b * b * kPi / (w * std::sqrt(w)) + friction;
}

double ellipse_residual_quarter_pi(const EllipseSpec& e) {
  e.validate();
  const double a = e.a;
  const double b = e.b;
  const double m = 0.5 * (a * a + b * b);
  return -1.0 + b * b * b / (m * std::sqrt(m)) +
         0.5 * std::numbers::sqrt2 * (a * a * a - b * b * b) / (a * a * a * std::sqrt(1.0 + b * b / (a * a)));
}

EllipseScan ellipse_scan(const EllipseSpec& e, std::size_t n_phi) {
  e.validate();
  if (n_phi < 2) throw ArgumentError("ellipse_scan: need at least 2 angles");
  EllipseScan scan;
  scan.ellipse = e;
  scan.c1 = forced_c1(e);
  scan.c2 = forced_c2(e);
  scan.phi.resize(n_phi);
  scan.residual.resize(n_phi);
  for (std::size_t i = 0; i < n_phi; ++i) {
    const double phi = i + 1 == n_phi ? 0.5 * kPi : 0.5 * kPi * static_cast<double>(i) / static_cast<double>(n_phi - 1);
    const double r = ellipse_residual(e, phi);
    scan.phi[i] = phi;
    scan.residual[i] = r;
    if (std::abs(r) > scan.max_abs) {
      scan.max_abs = std::abs(r);
      scan.phi_at_max = phi;
    }
  }
  return scan;
}

Polyline ellipse_markers(const EllipseSpec& e, std::size_t n) {
  e.validate();
  if (n < 4) throw ArgumentError("ellipse_markers: need at least 4 points");
  Polyline out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    out[k] = {e.a * std::cos(t), e.b * std::sin(t)};
  }
  return out;
}

}  // namespace ooid
