#include "ooid/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "ooid/error.hpp"

namespace ooid {
namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           QuadratureOptions opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: non-finite limits");
  if (a == b) return {};

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  Panel first = gauss_kronrod(f, a, b);
  double total = first.value;
  double total_error = first.error;
  panels.push(first);
  QuadratureResult result{total, total_error, 15, 1};

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (total_error > target()) {
    if (result.intervals >= opts.max_intervals) {
      throw AccuracyError("integrate: subdivision budget exhausted", total, total_error);
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw AccuracyError("integrate: interval cannot be subdivided further", total, total_error);
    }
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    result.evaluations += 30;
    result.intervals += 1;
  }

  // Re-sum from the panels to drop the running-update rounding.
  total = 0.0;
  total_error = 0.0;
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const Panel& p : all) {
    total += p.value;
    total_error += p.error;
  }
  result.value = total;
  result.error_estimate = total_error;
  return result;
}

double quadrature_oracle(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("quadrature_oracle: requires a <= b");
  if (!(tol > 0.0)) throw DomainError("quadrature_oracle: requires tol > 0");
  return integrate(f, a, b, {.abs_tol = tol, .rel_tol = 0.0, .max_intervals = 20000}).value;
}

}  // namespace ooid
