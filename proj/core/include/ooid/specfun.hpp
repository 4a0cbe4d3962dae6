#pragma once

namespace ooid {

// Target accuracy of the special-function kernel.
struct Accuracy {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;

  bool valid() const noexcept { return abs_tol > 0.0 && rel_tol > 0.0; }
};

inline constexpr Accuracy kDefaultAccuracy{};

/// Dawson function D(x) = exp(-x^2) * integral_0^x exp(t^2) dt.
///
/// Three regimes: alternating Maclaurin series for |x| < 1, the positive-term
/// series of integral_0^x exp(t^2) dt rescaled by exp(-x^2) for 1 <= |x| < 8, and
/// the asymptotic expansion (1/2x) * sum (2k-1)!! / (2x^2)^k for |x| >= 8.
/// Accurate to kDefaultAccuracy everywhere. Throws DomainError for non-finite x.
double dawson(double x);

/// erfi(x) * exp(-x^2) == (2/sqrt(pi)) * D(x). Real replacement for the
/// erf(i x) * exp(-x^2) products of the steady-state curvature.
double erfi_scaled(double x);

/// D'(x) = 1 - 2 x D(x).
double dawson_derivative(double x);

/// The unique positive stationary point z0 of D (its global maximizer),
/// z0 ~ 0.9241388730. Found once by bracketed root finding on 1 - 2xD(x) over [0.5, 1.5].
double dawson_maximizer();

/// D(z0) ~ 0.5410442246.
double dawson_maximum();

/// Inverse of D on its rising branch [0, z0]: returns z with D(z) == value.
/// Requires 0 <= value <= dawson_maximum(); throws DomainError otherwise.
double inverse_dawson_rising(double value);

}  // namespace ooid
