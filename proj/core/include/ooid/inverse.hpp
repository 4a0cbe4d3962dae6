#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ooid/flow.hpp"
#include "ooid/polyline.hpp"

namespace ooid {

struct GeometryEstimate {
  std::vector<MarkerGeometry> points;  // in counterclockwise order
  double area = 0.0;
  bool reversed = false;           // input was clockwise and has been reordered
  bool convexity_warning = false;  // some kappa <= 0 or the polygon is not convex
};

/// Per-point kappa, gamma, y of a sampled closed curve with the estimators of
/// marker_geometry, plus the shoelace area. ArgumentError below 32 points,
/// TopologyError if the polygon is not simple. A wider stencil trades
/// resolution for robustness to sampling noise.
GeometryEstimate estimate_geometry(std::span<const Vec2> points, std::size_t stencil = 1);

struct Recovery {
  double c1 = 0.0;
  double c2 = 0.0;
  double residual_norm = 0.0;  // RMS of -1 + c1 A kappa + c2 A y cos(gamma) at the solution
  bool c2_clamped = false;     // unconstrained optimum had c2 < 0
  bool degenerate = false;     // normal matrix numerically singular; c2 = 0
  bool convexity_warning = false;
};

/// Least-squares (c1, c2) for the steady-state identity over all sampled
/// points, via the 2x2 normal equations.
Recovery recover_params(std::span<const Vec2> points, std::size_t stencil = 1);

}  // namespace ooid
