#pragma once

#include <functional>

namespace ooid {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_intervals = 4000;
};

// Globally adaptive 7/15-point Gauss-Kronrod integration. The interval with
// the largest |K15 - G7| is bisected until the summed error estimate drops
// below max(abs_tol, rel_tol * |value|). Deterministic for deterministic f.
// Throws AccuracyError (carrying the best estimate) when max_intervals is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           QuadratureOptions opts = {});

// Verification oracle: integral of f over [a, b] to absolute tolerance tol.
// Requires a <= b and tol > 0 (DomainError otherwise).
double quadrature_oracle(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace ooid
