#include "ooid/specfun.hpp"

#include <cmath>
#include <numbers>

#include "ooid/error.hpp"
#include "ooid/roots.hpp"

namespace ooid {
namespace {

constexpr double kSeriesStop = 1e-17;

// D(x) = sum_k (-2)^k x^(2k+1) / (2k+1)!!, for |x| < 1.
double dawson_maclaurin(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 0; k < 60; ++k) {
    term *= -2.0 * x2 / (2.0 * k + 3.0);
    sum += term;
    if (std::abs(term) < kSeriesStop * std::abs(sum)) break;
  }
  return sum;
}

// exp(-x^2) * sum_k x^(2k+1) / (k! (2k+1)). All terms positive, so no cancellation.
double dawson_positive_series(double x) {
  const double x2 = x * x;
  double power = x;  // x^(2k+1) / k!
  double sum = x;
  for (int k = 1; k < 2000; ++k) {
    power *= x2 / k;
    const double term = power / (2.0 * k + 1.0);
    sum += term;
    if (term < kSeriesStop * sum) break;
  }
  return sum * std::exp(-x2);
}

// (1/2x) sum_k (2k-1)!! / (2x^2)^k, truncated at its smallest term.
double dawson_asymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (2.0 * k + 1.0) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < kSeriesStop * sum) break;
  }
  return sum / (2.0 * x);
}

}  // namespace

double dawson(double x) {
  if (!std::isfinite(x)) throw DomainError("dawson: non-finite argument");
  const double ax = std::abs(x);
  double value;
  if (ax < 1.0) {
    return dawson_maclaurin(x);
  } else if (ax < 8.0) {
    value = dawson_positive_series(ax);
  } else {
    value = dawson_asymptotic(ax);
  }
  return x < 0.0 ? -value : value;
}

double erfi_scaled(double x) { return 2.0 * std::numbers::inv_sqrtpi * dawson(x); }

double dawson_derivative(double x) { return 1.0 - 2.0 * x * dawson(x); }

double dawson_maximizer() {
  static const double z0 = find_root([](double z) { return dawson_derivative(z); }, 0.5, 1.5);
  return z0;
}

double dawson_maximum() {
  static const double d0 = dawson(dawson_maximizer());
  return d0;
}

double inverse_dawson_rising(double value) {
  const double top = dawson_maximum();
  if (!(value >= 0.0 && value <= top)) {
    throw DomainError("inverse_dawson_rising: value outside [0, D(z0)]");
  }
  if (value == 0.0) return 0.0;
  if (value == top) return dawson_maximizer();
  return find_root([value](double z) { return dawson(z) - value; }, 0.0, dawson_maximizer());
}

}  // namespace ooid
