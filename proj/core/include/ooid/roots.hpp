#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ooid/error.hpp"

namespace ooid {

struct RootOptions {
  double x_tol = 0.0;  // absolute bracket width at which to stop (0: machine precision)
  int max_iterations = 300;
};

// Bracketed bisection refined by secant steps. The secant candidate is taken
// whenever it falls strictly inside the bracket and the previous step at least
// halved the bracket; otherwise the step is a plain bisection, so at worst every
// other step halves the bracket. Requires f(lo) and f(hi) of opposite sign (or zero).
template <class F>
double find_root(F&& f, double lo, double hi, RootOptions opts = {}) {
  if (!(lo <= hi)) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::isnan(flo) || std::isnan(fhi) || std::signbit(flo) == std::signbit(fhi)) {
    throw NumericError("find_root: root not bracketed");
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool allow_secant = true;

  for (int it = 0; it < opts.max_iterations; ++it) {
    const double width = hi - lo;
    const double floor = 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + opts.x_tol;
    if (width <= floor) break;

    double x = lo + 0.5 * width;
    if (allow_secant) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    if (x <= lo || x >= hi) break;  // no representable interior point left

    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    allow_secant = (hi - lo) <= 0.5 * width;
  }
  return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

}  // namespace ooid
