#pragma once

#include <cmath>

#include "ooid/error.hpp"

namespace ooid {

// Parameters of the local steady-state equation -1 + c1_hat*kappa + c2_hat*y*cos(gamma) = 0,
// where the enclosed area has been absorbed: c1_hat = c1*A, c2_hat = c2*A.
// Stored as (c1_hat, q) with q = sqrt(c2_hat / (2 c1_hat)); c2_hat is derived.
class LocalParams {
 public:
  LocalParams(double c1_hat, double q) : c1_hat_(c1_hat), q_(q) {
    if (!(std::isfinite(c1_hat) && c1_hat > 0.0)) throw DomainError("LocalParams: c1_hat must be > 0");
    if (!(std::isfinite(q) && q >= 0.0)) throw DomainError("LocalParams: q must be >= 0");
  }

  static LocalParams from_c2_hat(double c1_hat, double c2_hat) {
    if (!(c2_hat >= 0.0)) throw DomainError("LocalParams: c2_hat must be >= 0");
    if (!(c1_hat > 0.0)) throw DomainError("LocalParams: c1_hat must be > 0");
    return LocalParams(c1_hat, std::sqrt(c2_hat / (2.0 * c1_hat)));
  }

  double c1_hat() const noexcept { return c1_hat_; }
  double q() const noexcept { return q_; }
  double c2_hat() const noexcept { return 2.0 * q_ * q_ * c1_hat_; }

  friend bool operator==(const LocalParams&, const LocalParams&) = default;

 private:
  double c1_hat_;
  double q_;
};

// Physical parameters of the flow Gamma_t = c3 (-1 + c1 A kappa + c2 A y cos(gamma)) n.
//   c1: abrasion [1/length], c2: friction [1/length^3], c3: time scale [length^2/time].
// c3 only rescales time; steady shapes do not depend on it.
struct NonlocalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 1.0;

  void validate() const {
    if (!(std::isfinite(c1) && c1 > 0.0)) throw DomainError("NonlocalParams: c1 must be > 0");
    if (!(std::isfinite(c2) && c2 >= 0.0)) throw DomainError("NonlocalParams: c2 must be >= 0");
    if (!(std::isfinite(c3) && c3 > 0.0)) throw DomainError("NonlocalParams: c3 must be > 0");
  }

  friend bool operator==(const NonlocalParams&, const NonlocalParams&) = default;
};

}  // namespace ooid
