#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace ooid {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

// Closed polylines are stored without repeating the first point at the end.
using Polyline = std::vector<Vec2>;

// Signed shoelace area; positive for counterclockwise orientation.
double signed_area(std::span<const Vec2> closed);

double perimeter(std::span<const Vec2> closed);

Vec2 centroid(std::span<const Vec2> closed);

// Diagonal of the axis-aligned bounding box.
double bounding_diagonal(std::span<const Vec2> points);

// Largest pairwise distance (brute force).
double diameter(std::span<const Vec2> points);

double min_edge_length(std::span<const Vec2> closed);
double max_edge_length(std::span<const Vec2> closed);

// All turns of the closed polyline share one orientation. Turns with
// |cross| <= tol * |e1| * |e2| count as straight and are accepted.
bool is_convex(std::span<const Vec2> closed, double tol = 1e-12);

// No two non-adjacent edges intersect. Uses a uniform grid so the expected
// cost is linear for well-spaced polylines.
bool is_simple(std::span<const Vec2> closed);

// Largest distance from a mirrored point to its nearest neighbour in the set,
// over reflections across both coordinate axes. Zero for an exactly D2-symmetric set.
double d2_symmetry_defect(std::span<const Vec2> points);

// Symmetric Hausdorff distance between two closed polylines, measured from
// each vertex to the other polyline's edges.
double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b);

// Periodic cubic spline through the vertices of a closed polyline, knots at
// cumulative chord length.
class ClosedSpline {
 public:
  explicit ClosedSpline(std::span<const Vec2> closed);

  double length() const { return knots_.back(); }
  Vec2 at(double t) const;
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Vec2> points_;
  std::vector<double> knots_;  // size n + 1, knots_[n] == total chord length
  std::vector<Vec2> second_;   // second derivatives at the knots
};

// Resample a closed polyline to `count` points equally spaced in the spline's
// chord-length parameter, starting at the first vertex. A polyline whose edges
// are already all equal is reproduced to rounding when count == size.
Polyline resample_uniform(std::span<const Vec2> closed, std::size_t count);

}  // namespace ooid
