#include "ooid/local_steady.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ooid/error.hpp"
#include "ooid/quadrature.hpp"
#include "ooid/roots.hpp"
#include "ooid/specfun.hpp"

namespace ooid {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// kappa without the y >= 0 check; kappa is even in y.
double kappa_formula(double y, const LocalParams& p) {
  if (p.q() == 0.0) return 1.0 / p.c1_hat();
  const double z = p.q() * y;
  return (1.0 - 2.0 * z * dawson(z)) / p.c1_hat();
}

// y on the rising branch with cos(gamma) == c, given z_bar = q * y_bar.
double y_for_cos(double c, const LocalParams& p, double z_bar) {
  if (p.q() == 0.0) return p.c1_hat() * c;
  if (c <= 0.0) return 0.0;
  const double target = p.q() * p.c1_hat() * c;
  if (c >= 1.0) return z_bar / p.q();
  const double z = find_root([target](double u) { return dawson(u) - target; }, 0.0, z_bar);
  return z / p.q();
}

// D(z) - D(z - delta) without cancellation for small delta, by Taylor expansion
// at z with D^(n+1) = -2 z D^(n) - 2 n D^(n-1).
double dawson_drop(double z, double delta) {
  if (delta > 0.25) return dawson(z) - dawson(z - delta);
  double prev = dawson(z);
  double cur = 1.0 - 2.0 * z * prev;
  double power = delta;  // delta^n / n!
  double sum = cur * power;
  for (int n = 1; n < 60; ++n) {
    const double next = -2.0 * z * cur - 2.0 * n * prev;
    prev = cur;
    cur = next;
    power *= -delta / (n + 1);
    const double term = cur * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

int sign_changes(const std::vector<double>& values) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace

double kappa(double y, const LocalParams& p) {
  if (!(y >= 0.0)) throw DomainError("kappa: y must be >= 0");
  return kappa_formula(y, p);
}

double cos_gamma(double y, const LocalParams& p) {
  if (!(y >= 0.0)) throw DomainError("cos_gamma: y must be >= 0");
  double value;
  if (p.q() == 0.0) {
    value = y / p.c1_hat();
  } else {
    const double z = p.q() * y;
    if (z > dawson_maximizer() * (1.0 + 4.0 * kEps)) {
      throw RangeError("cos_gamma: y beyond the curvature zero y0");
    }
    value = dawson(z) / (p.q() * p.c1_hat());
  }
  if (value > 1.0 + 1e-12) throw RangeError("cos_gamma: y beyond y_bar (cos(gamma) > 1)");
  return std::min(value, 1.0);
}

double gamma_of_y(double y, const LocalParams& p) { return std::acos(cos_gamma(y, p)); }

double y_of_gamma(double gamma, const LocalParams& p) {
  if (!(gamma >= 0.0 && gamma <= kHalfPi)) throw DomainError("y_of_gamma: gamma outside [0, pi/2]");
  const double y_bar = find_ybar(p);
  if (gamma == kHalfPi) return 0.0;
  if (gamma == 0.0) return y_bar;
  return y_for_cos(std::cos(gamma), p, p.q() * y_bar);
}

double find_y0(const LocalParams& p) {
  if (p.q() == 0.0) throw NoZeroError("find_y0: kappa is constant for q == 0");
  const double q = p.q();
  return find_root([&p](double y) { return kappa_formula(y, p); }, 0.5 / q, 1.5 / q);
}

double c1_crit(double q) {
  if (!(std::isfinite(q) && q > 0.0)) throw DomainError("c1_crit: undefined for q <= 0");
  return dawson_maximum() / q;
}

bool in_chi_q(const LocalParams& p) { return p.q() == 0.0 || p.c1_hat() <= c1_crit(p.q()); }

CurvatureProfile curvature_profile(const LocalParams& p) {
  return {p, find_y0(p), c1_crit(p.q())};
}

double find_ybar(const LocalParams& p) {
  if (p.q() == 0.0) return p.c1_hat();
  const double target = p.q() * p.c1_hat();
  const double top = dawson_maximum();
  if (std::abs(target - top) <= 4.0 * kEps * top) {
    throw DegenerateLimitError("find_ybar: c1_hat equals the critical value; the curve is unbounded");
  }
  if (target > top) {
    throw NotRealizableError("find_ybar: c1_hat exceeds the critical value for this q");
  }
  const double z_bar =
      find_root([target](double z) { return dawson(z) - target; }, 0.0, dawson_maximizer());
  return z_bar / p.q();
}

double quarter_area(const LocalParams& p) {
  const double y_bar = find_ybar(p);
  if (p.q() == 0.0) return 0.25 * std::numbers::pi * p.c1_hat() * p.c1_hat();
  const double q = p.q();
  const double z_bar = q * y_bar;
  const double top = q * p.c1_hat();
  // dgamma / kappa = -dy / sin(gamma), so the area is integral_0^y_bar y cot(gamma) dy.
  // With y = y_bar (1 - t^2) the inverse-square-root endpoint singularity cancels.
  auto integrand = [&](double t) {
    const double y = y_bar * (1.0 - t * t);
    const double one_minus_c = dawson_drop(z_bar, z_bar * t * t) / top;
    const double c = 1.0 - one_minus_c;
    if (!(one_minus_c > 0.0)) return 0.0;
    const double s = std::sqrt(one_minus_c * (1.0 + c));
    return y * c / s * 2.0 * y_bar * t;
  };
  const QuadratureOptions opts{
      .abs_tol = 1e-300, .rel_tol = 1e-13, .max_intervals = 20000};
  return integrate(integrand, 0.0, 1.0, opts).value;
}

CurveSegment realize_segment(const LocalParams& p, std::size_t n) {
  if (n < kMinSegmentSamples) throw ArgumentError("realize_segment: need at least 16 samples");
  const double y_bar = find_ybar(p);
  const double z_bar = p.q() * y_bar;

  auto y_at = [&](double gamma) { return y_for_cos(std::cos(gamma), p, z_bar); };
  auto dx_dgamma = [&](double gamma) {
    const double y = y_at(gamma);
    return -std::cos(gamma) / kappa_formula(y, p);
  };

  CurveSegment seg{p, {}, 0.0, y_bar};
  seg.samples.resize(n);
  // Five-point Gauss-Legendre on every gamma interval.
  static constexpr std::array<double, 5> kNodes{-0.9061798459386640, -0.5384693101056831, 0.0,
                                                0.5384693101056831, 0.9061798459386640};
  static constexpr std::array<double, 5> kWeights{0.2369268850561891, 0.4786286704993665,
                                                  0.5688888888888889, 0.4786286704993665,
                                                  0.2369268850561891};
  auto gamma_of = [&](std::size_t k) {
    return k + 1 == n ? 0.0 : kHalfPi * (1.0 - static_cast<double>(k) / static_cast<double>(n - 1));
  };
  double x = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double gamma = gamma_of(k);
    SegmentSample& s = seg.samples[k];
    s.gamma = gamma;
    s.y = k == 0 ? 0.0 : (k + 1 == n ? y_bar : y_at(gamma));
    s.kappa = kappa_formula(s.y, p);
    s.x = x;
    if (k + 1 < n) {
      const double next = gamma_of(k + 1);
      const double mid = 0.5 * (gamma + next);
      const double half = 0.5 * (next - gamma);
      double sum = 0.0;
      for (std::size_t j = 0; j < kNodes.size(); ++j) sum += kWeights[j] * dx_dgamma(mid + half * kNodes[j]);
      x += half * sum;
    }
  }
  const double shift = seg.samples.back().x;
  for (SegmentSample& s : seg.samples) s.x -= shift;
  seg.samples.back().x = 0.0;

  seg.area_bar = quarter_area(p);
  return seg;
}

double segment_area(const CurveSegment& seg) {
  if (seg.samples.size() < 2) throw ArgumentError("segment_area: empty segment");
  for (std::size_t k = 0; k + 1 < seg.samples.size(); ++k) {
    if (!(seg.samples[k].kappa > 0.0)) {
      throw InconsistencyError("segment_area: non-positive curvature inside the segment");
    }
  }
  return quarter_area(seg.params);
}

SteadyShape assemble_shape(const CurveSegment& seg) {
  const auto& s = seg.samples;
  const std::size_t n = s.size();
  if (n < 2) throw ArgumentError("assemble_shape: empty segment");

  SteadyShape shape{{}, {}, {}, 4.0 * seg.area_bar, seg.params, std::nullopt};
  shape.points.reserve(4 * (n - 1));
  shape.gamma.reserve(4 * (n - 1));
  shape.kappa.reserve(4 * (n - 1));
  auto emit = [&](double x, double y, const SegmentSample& src) {
    shape.points.push_back({x, y});
    shape.gamma.push_back(src.gamma);
    shape.kappa.push_back(src.kappa);
  };

  // Counterclockwise from P' = (+W, 0): up to Q, over to P, down to Q', back to P'.
  for (std::size_t k = 0; k + 1 < n; ++k) emit(-s[k].x, s[k].y, s[k]);
  for (std::size_t k = n - 1; k > 0; --k) emit(s[k].x, s[k].y, s[k]);
  for (std::size_t k = 0; k + 1 < n; ++k) emit(s[k].x, -s[k].y, s[k]);
  for (std::size_t k = n - 1; k > 0; --k) emit(-s[k].x, -s[k].y, s[k]);

  if (!is_convex(shape.points, 1e-12)) {
    throw InvariantError("assemble_shape: assembled curve is not convex");
  }
  return shape;
}

bool PropertyReport::all_hold() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const PropertyCheck& c) { return c.status == PropertyStatus::Fails; });
}

PropertyReport property_report(const LocalParams& p) {
  PropertyReport report{p, {}};
  auto& c = report.checks;
  const double c1 = p.c1_hat();
  const double q = p.q();
  const bool circle = q == 0.0;
  const double y0 = circle ? 0.0 : find_y0(p);
  const double scale = circle ? c1 : y0;
  auto verdict = [](bool ok) { return ok ? PropertyStatus::Holds : PropertyStatus::Fails; };

  constexpr int kGrid = 10000;
  std::vector<double> grid(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) grid[i] = kappa_formula(4.0 * scale * i / kGrid, p);

  {
    const bool finite = std::all_of(grid.begin(), grid.end(), [](double v) { return std::isfinite(v); });
    c[0] = {"kappa is real", verdict(finite), static_cast<double>(grid.size()),
            "real-valued evaluation; finite on the whole grid"};
  }
  {
    double jump = 0.0;
    for (int i = 1; i <= kGrid; ++i) jump = std::max(jump, std::abs(grid[i] - grid[i - 1]));
    c[1] = {"kappa is continuous", verdict(jump < 1e-3 / c1), jump,
            "largest jump between neighbouring grid points on [0, 4*y_scale]"};
  }
  {
    const double k0 = kappa(0.0, p);
    c[2] = {"kappa(0) = 1/c1_hat", verdict(std::abs(k0 * c1 - 1.0) <= 1e-14), k0, "exact evaluation"};
  }
  {
    const double expected = -4.0 * q * q / c1;
    if (circle) {
      c[3] = {"maximum at y = 0", PropertyStatus::Holds, 0.0,
              "constant curvature: kappa'(0) = kappa''(0) = 0"};
    } else {
      const double h = 1e-3 / q;
      const double kp = kappa_formula(h, p), k0 = kappa_formula(0.0, p), km = kappa_formula(-h, p);
      const double d1 = (kp - km) / (2.0 * h);
      const double d2 = (kp - 2.0 * k0 + km) / (h * h);
      const bool ok = std::abs(d1) <= 1e-12 * q / c1 && std::abs(d2 - expected) <= 1e-5 * std::abs(expected);
      c[3] = {"maximum at y = 0", verdict(ok), d2, "central differences; witness is kappa''(0)"};
    }
  }
  if (circle) {
    c[4] = {"kappa -> 0 as y -> infinity", PropertyStatus::NotApplicable, 1.0 / c1, "constant curvature"};
    c[5] = {"unique zero y0", PropertyStatus::NotApplicable, 0.0, "constant curvature has no zero"};
    c[6] = {"monotone on (0, y0)", PropertyStatus::NotApplicable, 0.0, "no zero to bound the range"};
    return report;
  }
  {
    // Past the inflection of D (q*y ~ 1.5) |kappa| decays like 1 / (2 c1 (q y)^2).
    bool decreasing = true;
    double previous = std::numeric_limits<double>::infinity();
    double reached = std::numeric_limits<double>::quiet_NaN();
    for (int n = -60; n <= 200; ++n) {
      const double y = std::ldexp(1.0, n);
      if (q * y < 2.0) continue;
      const double magnitude = std::abs(kappa_formula(y, p));
      if (!(magnitude < previous)) decreasing = false;
      previous = magnitude;
      if (magnitude < 1e-6 / c1) {
        reached = y;
        break;
      }
    }
    c[4] = {"kappa -> 0 as y -> infinity", verdict(decreasing && std::isfinite(reached)), reached,
            "|kappa(2^n)| strictly decreasing until below 1e-6/c1_hat; witness is that y"};
  }
  {
    constexpr int kSigns = 4000;
    std::vector<double> values(kSigns + 1), split(kSigns + 1);
    for (int i = 0; i <= kSigns; ++i) {
      const double y = 10.0 * y0 * i / kSigns;
      values[i] = kappa_formula(y, p);
      const double ys = 4.0 * y0 * i / kSigns;
      const double z = q * ys;
      const double iota = 2.0 * q * std::numbers::inv_sqrtpi * std::exp(z * z);
      const double zeta = 2.0 * q * q * ys * erfi_scaled(z) * std::exp(z * z);
      split[i] = iota - zeta;
    }
    const int kappa_changes = sign_changes(values);
    const int split_changes = sign_changes(split);
    const bool ok = kappa_changes == 1 && split_changes == 1 &&
                    std::abs(q * y0 - dawson_maximizer()) <= 1e-10;
    c[5] = {"unique zero y0", verdict(ok), y0,
            "one sign change of kappa on [0, 10 y0] and of iota - zeta on [0, 4 y0]; q*y0 = z0"};
  }
  {
    constexpr int kPoints = 1000;
    const double lo = 1e-3 * y0;
    const double hi = (1.0 - 1e-3) * y0;
    const double h = 1e-6 * y0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kPoints; ++i) {
      const double y = lo + (hi - lo) * i / kPoints;
      const double slope = (kappa_formula(y + h, p) - kappa_formula(y - h, p)) / (2.0 * h);
      worst = std::max(worst, slope);
    }
    c[6] = {"monotone on (0, y0)", verdict(worst < 0.0), worst,
            "largest central-difference kappa' on the interior grid"};
  }
  return report;
}

}  // namespace ooid
