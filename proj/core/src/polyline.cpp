#include "ooid/polyline.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "ooid/error.hpp"

namespace ooid {
namespace {

Vec2 edge(std::span<const Vec2> p, std::size_t i) { return p[(i + 1) % p.size()] - p[i]; }

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double nearest_distance(Vec2 p, std::span<const Vec2> set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& s : set) {
    const double dx = s.x - p.x;
    const double dy = s.y - p.y;
    best = std::min(best, dx * dx + dy * dy);
  }
  return std::sqrt(best);
}

double distance_to_closed_polyline(Vec2 p, std::span<const Vec2> closed) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = closed.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = closed[i];
    const Vec2 d = closed[(i + 1) % n] - a;
    const double len2 = dot(d, d);
    const double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    const Vec2 r = p - (a + t * d);
    best = std::min(best, dot(r, r));
  }
  return std::sqrt(best);
}

// Cyclic tridiagonal solve: lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i],
// indices modulo n (Sherman-Morrison on the corner entries).
std::vector<double> solve_cyclic(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  const double alpha = upper[n - 1];  // couples x[n-1] -> x[0]
  const double beta = lower[0];       // couples x[0] -> x[n-1]
  const double gamma = -diag[0];

  auto thomas = [&](std::vector<double> b, std::vector<double> d) {
    std::vector<double> c(upper.begin(), upper.end());
    for (std::size_t i = 1; i < n; ++i) {
      const double m = lower[i] / b[i - 1];
      b[i] -= m * c[i - 1];
      d[i] -= m * d[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
    return x;
  };

  std::vector<double> b = diag;
  b[0] -= gamma;
  b[n - 1] -= alpha * beta / gamma;
  const std::vector<double> x = thomas(b, rhs);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  const std::vector<double> z = thomas(b, u);
  const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
  return out;
}

}  // namespace

double signed_area(std::span<const Vec2> closed) {
  double twice = 0.0;
  const std::size_t n = closed.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(closed[i], closed[(i + 1) % n]);
  return 0.5 * twice;
}

double perimeter(std::span<const Vec2> closed) {
  double total = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) total += norm(edge(closed, i));
  return total;
}

Vec2 centroid(std::span<const Vec2> closed) {
  const std::size_t n = closed.size();
  double cx = 0.0, cy = 0.0, twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = closed[i];
    const Vec2 b = closed[(i + 1) % n];
    const double w = cross(a, b);
    twice += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return {cx / (3.0 * twice), cy / (3.0 * twice)};
}

double bounding_diagonal(std::span<const Vec2> points) {
  if (points.empty()) return 0.0;
  double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
  for (const Vec2& p : points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

double diameter(std::span<const Vec2> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[i].x - points[j].x;
      const double dy = points[i].y - points[j].y;
      best = std::max(best, dx * dx + dy * dy);
    }
  }
  return std::sqrt(best);
}

double min_edge_length(std::span<const Vec2> closed) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < closed.size(); ++i) best = std::min(best, norm(edge(closed, i)));
  return best;
}

double max_edge_length(std::span<const Vec2> closed) {
  double best = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) best = std::max(best, norm(edge(closed, i)));
  return best;
}

bool is_convex(std::span<const Vec2> closed, double tol) {
  const std::size_t n = closed.size();
  if (n < 3) return false;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = edge(closed, i);
    const Vec2 e2 = edge(closed, (i + 1) % n);
    const double c = cross(e1, e2);
    if (std::abs(c) <= tol * norm(e1) * norm(e2)) continue;
    const int s = c > 0.0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  // A star polygon turns one way but winds more than once.
  return sign != 0 && is_simple(closed);
}

bool is_simple(std::span<const Vec2> closed) {
  const std::size_t n = closed.size();
  if (n < 3) return false;

  double x0 = closed[0].x, y0 = closed[0].y, x1 = x0, y1 = y0;
  double mean_edge = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x0 = std::min(x0, closed[i].x);
    x1 = std::max(x1, closed[i].x);
    y0 = std::min(y0, closed[i].y);
    y1 = std::max(y1, closed[i].y);
    mean_edge += norm(edge(closed, i));
  }
  mean_edge /= static_cast<double>(n);
  if (!(mean_edge > 0.0)) return false;
  const double cell = 2.0 * mean_edge;

  auto cell_of = [&](double v, double origin) { return static_cast<long long>((v - origin) / cell); };
  const long long columns = cell_of(x1, x0) + 1;

  std::unordered_map<long long, std::vector<std::size_t>> grid;
  grid.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = closed[i];
    const Vec2 b = closed[(i + 1) % n];
    const long long cx0 = cell_of(std::min(a.x, b.x), x0), cx1 = cell_of(std::max(a.x, b.x), x0);
    const long long cy0 = cell_of(std::min(a.y, b.y), y0), cy1 = cell_of(std::max(a.y, b.y), y0);
    for (long long cy = cy0; cy <= cy1; ++cy) {
      for (long long cx = cx0; cx <= cx1; ++cx) {
        std::vector<std::size_t>& bucket = grid[cy * columns + cx];
        for (std::size_t j : bucket) {
          const bool adjacent = (i + 1) % n == j || (j + 1) % n == i;
          if (adjacent) continue;
          if (segments_intersect(a, b, closed[j], closed[(j + 1) % n])) return false;
        }
        bucket.push_back(i);
      }
    }
  }
  return true;
}

double d2_symmetry_defect(std::span<const Vec2> points) {
  double worst = 0.0;
  for (const Vec2& p : points) {
    worst = std::max(worst, nearest_distance({p.x, -p.y}, points));
    worst = std::max(worst, nearest_distance({-p.x, p.y}, points));
  }
  return worst;
}

double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  double worst = 0.0;
  for (const Vec2& p : a) worst = std::max(worst, distance_to_closed_polyline(p, b));
  for (const Vec2& p : b) worst = std::max(worst, distance_to_closed_polyline(p, a));
  return worst;
}

ClosedSpline::ClosedSpline(std::span<const Vec2> closed) : points_(closed.begin(), closed.end()) {
  const std::size_t n = points_.size();
  if (n < 4) throw ArgumentError("ClosedSpline: need at least 4 points");
  knots_.resize(n + 1, 0.0);
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = norm(edge(points_, i));
    if (!(h[i] > 0.0)) throw DegeneracyError("ClosedSpline: coincident consecutive points");
    knots_[i + 1] = knots_[i] + h[i];
  }

  std::vector<double> lower(n), diag(n), upper(n), rx(n), ry(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    lower[i] = h[prev];
    diag[i] = 2.0 * (h[prev] + h[i]);
    upper[i] = h[i];
    rx[i] = 6.0 * ((points_[next].x - points_[i].x) / h[i] - (points_[i].x - points_[prev].x) / h[prev]);
    ry[i] = 6.0 * ((points_[next].y - points_[i].y) / h[i] - (points_[i].y - points_[prev].y) / h[prev]);
  }
  const std::vector<double> mx = solve_cyclic(lower, diag, upper, rx);
  const std::vector<double> my = solve_cyclic(lower, diag, upper, ry);
  second_.resize(n);
  for (std::size_t i = 0; i < n; ++i) second_[i] = {mx[i], my[i]};
}

Vec2 ClosedSpline::at(double t) const {
  const std::size_t n = points_.size();
  const double total = knots_[n];
  t = std::fmod(t, total);
  if (t < 0.0) t += total;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  std::size_t i = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  i = i == 0 ? 0 : std::min(i - 1, n - 1);
  const std::size_t j = (i + 1) % n;
  const double h = knots_[i + 1] - knots_[i];
  const double u = t - knots_[i];
  const double v = h - u;
  const Vec2 mi = second_[i], mj = second_[j];
  const Vec2 pi = points_[i], pj = points_[j];
  auto blend = [&](double yi, double yj, double si, double sj) {
    return si * v * v * v / (6.0 * h) + sj * u * u * u / (6.0 * h) + (yi / h - si * h / 6.0) * v +
           (yj / h - sj * h / 6.0) * u;
  };
  return {blend(pi.x, pj.x, mi.x, mj.x), blend(pi.y, pj.y, mi.y, mj.y)};
}

Polyline resample_uniform(std::span<const Vec2> closed, std::size_t count) {
  if (count < 4) throw ArgumentError("resample_uniform: need at least 4 output points");
  const ClosedSpline spline(closed);
  const double step = spline.length() / static_cast<double>(count);
  Polyline out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(spline.at(step * static_cast<double>(j)));
  return out;
}

}  // namespace ooid
