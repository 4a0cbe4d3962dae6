#include "ooid/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "ooid/error.hpp"

namespace ooid {

GeometryEstimate estimate_geometry(std::span<const Vec2> points, std::size_t stencil) {
  if (points.size() < kMinMarkers) throw ArgumentError("estimate_geometry: need at least 32 points");
  if (!is_simple(points)) throw TopologyError("estimate_geometry: polygon is not simple");
  GeometryEstimate est;
  const double area = signed_area(points);
  if (!(std::abs(area) > 0.0)) throw ArgumentError("estimate_geometry: zero enclosed area");
  est.area = std::abs(area);
  if (area < 0.0) {
    Polyline ccw(points.begin(), points.end());
    std::reverse(ccw.begin() + 1, ccw.end());
    est.points = marker_geometry(ccw, stencil);
    est.reversed = true;
  } else {
    est.points = marker_geometry(points, stencil);
  }
  est.convexity_warning = !is_convex(points) ||
                          std::any_of(est.points.begin(), est.points.end(),
                                      [](const MarkerGeometry& g) { return !(g.kappa > 0.0); });
  return est;
}

Recovery recover_params(std::span<const Vec2> points, std::size_t stencil) {
  const GeometryEstimate est = estimate_geometry(points, stencil);
  // Rows: c1 * u_k + c2 * v_k = 1 with u = A kappa, v = A y cos(gamma).
  double suu = 0.0, suv = 0.0, svv = 0.0, su = 0.0, sv = 0.0;
  for (const MarkerGeometry& g : est.points) {
    const double u = est.area * g.kappa;
    const double v = est.area * g.lever;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    su += u;
    sv += v;
  }

  Recovery rec;
  rec.convexity_warning = est.convexity_warning;
  const double det = suu * svv - suv * suv;
  if (!(det > 1e-12 * suu * svv)) {
    rec.degenerate = true;
  } else {
    rec.c1 = (svv * su - suv * sv) / det;
    rec.c2 = (suu * sv - suv * su) / det;
    if (rec.c2 < 0.0) rec.c2_clamped = true;
  }
  if (rec.degenerate || rec.c2_clamped) {
    rec.c1 = su / suu;
    rec.c2 = 0.0;
  }

  double ss = 0.0;
  for (const MarkerGeometry& g : est.points) {
    const double r = -1.0 + rec.c1 * est.area * g.kappa + rec.c2 * est.area * g.lever;
    ss += r * r;
  }
  rec.residual_norm = std::sqrt(ss / static_cast<double>(est.points.size()));
  return rec;
}

}  // namespace ooid
