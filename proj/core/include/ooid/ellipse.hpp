#pragma once

#include <cstddef>
#include <vector>

#include "ooid/params.hpp"
#include "ooid/polyline.hpp"

namespace ooid {

// Axis-aligned ellipse x = a cos(phi), y = b sin(phi) with a >= b > 0.
struct EllipseSpec {
  double a = 1.0;
  double b = 1.0;

  void validate() const;
};

/// c1 making the residual vanish at the major-axis endpoint (phi = 0): b / (a^2 pi).
double forced_c1(const EllipseSpec& e);

/// c2 making the residual vanish at the minor-axis endpoint (phi = pi/2):
/// (a^3 - b^3) / (a^4 b^2 pi). Zero iff a == b.
double forced_c2(const EllipseSpec& e);

NonlocalParams forced_params(const EllipseSpec& e);

/// Steady-state bracket -1 + c1 A kappa + c2 A y cos(gamma) on the ellipse with
/// the forced constants, evaluated from the parametric derivatives of the curve.
/// 0 <= phi <= pi/2, DomainError otherwise.
double ellipse_residual(const EllipseSpec& e, double phi);

/// The same residual from the reduced expression
///   -1 + c1 a^2 b^2 pi / (a^2 sin^2 + b^2 cos^2)^{3/2} + c2 a b^2 pi sin / sqrt(1 + b^2 cos^2 / (a^2 sin^2)),
/// with the friction term taken as its limit 0 at phi = 0.
double ellipse_residual_reduced(const EllipseSpec& e, double phi);

/// Closed form at phi = pi/4:
///   -1 + b^3 / ((a^2 + b^2) / 2)^{3/2} + (sqrt(2)/2) (a^3 - b^3) / (a^3 sqrt(1 + b^2 / a^2)).
double ellipse_residual_quarter_pi(const EllipseSpec& e);

struct EllipseScan {
  EllipseSpec ellipse;
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<double> phi;  // uniform grid on [0, pi/2]
  std::vector<double> residual;
  double max_abs = 0.0;
  double phi_at_max = 0.0;
};

/// Residual on n_phi uniformly spaced angles in [0, pi/2] (ArgumentError if n_phi < 2).
EllipseScan ellipse_scan(const EllipseSpec& e, std::size_t n_phi);

/// n points uniform in phi, counterclockwise from (a, 0).
Polyline ellipse_markers(const EllipseSpec& e, std::size_t n);

}  // namespace ooid
