#include "ooid/nonlocal_map.hpp"

#include <cmath>
#include <numbers>

#include "ooid/error.hpp"
#include "ooid/roots.hpp"

namespace ooid {

double q_of(const NonlocalParams& np) {
  np.validate();
  return std::sqrt(np.c2 / (2.0 * np.c1));
}

double map_F(double c1_hat, double q) {
  const LocalParams p(c1_hat, q);
  if (q > 0.0 && !in_chi_q(p)) throw NotRealizableError("map_F: c1_hat outside the realizable set");
  return c1_hat / (4.0 * quarter_area(p));
}

double invert_F(double c1, double q) {
  if (!(std::isfinite(c1) && c1 > 0.0)) throw DomainError("invert_F: c1 must be > 0");
  if (!(std::isfinite(q) && q >= 0.0)) throw DomainError("invert_F: q must be >= 0");
  if (q == 0.0) return 1.0 / (std::numbers::pi * c1);

  const double crit = c1_crit(q);
  double lo = 1e-3 * crit;
  double gap = 1e-6;  // hi = (1 - gap) * crit
  for (int i = 0; map_F(lo, q) < c1; ++i) {
    if (i == 60) throw NumericError("invert_F: cannot bracket large c1");
    lo *= 0.1;
  }
  while (map_F((1.0 - gap) * crit, q) > c1) {
    gap *= 0.1;
    if (gap < 1e-15) throw NumericError("invert_F: c1 is below the smallest value reachable in double precision");
  }
  const double log_target = std::log(c1);
  return find_root([&](double c1_hat) { return std::log(map_F(c1_hat, q)) - log_target; }, lo,
                   (1.0 - gap) * crit);
}

SteadyShape solve_nonlocal(const NonlocalParams& np, std::size_t n) {
  const double q = q_of(np);
  const double c1_hat = invert_F(np.c1, q);
  SteadyShape shape = assemble_shape(realize_segment(LocalParams(c1_hat, q), n));
  shape.nonlocal_params = np;
  return shape;
}

double steady_residual(const SteadyShape& shape, const NonlocalParams& np) {
  double worst = 0.0;
  for (std::size_t i = 0; i < shape.points.size(); ++i) {
    const double r = -1.0 + np.c1 * shape.area * shape.kappa[i] +
                     np.c2 * shape.area * std::abs(shape.points[i].y) * std::cos(shape.gamma[i]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

MapSweep sweep(double q, std::size_t n_rows) {
  if (!(std::isfinite(q) && q > 0.0)) throw DomainError("sweep: q must be > 0");
  if (n_rows < 8) throw ArgumentError("sweep: need at least 8 rows");
  constexpr double kMargin = 1e-3;
  const double crit = c1_crit(q);
  const double lo = kMargin * crit;
  const double hi = (1.0 - kMargin) * crit;

  MapSweep out{q, {}};
  out.rows.reserve(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_rows - 1);
    const double c1_hat = i + 1 == n_rows ? hi : lo * std::pow(hi / lo, t);
    const double area = 4.0 * quarter_area(LocalParams(c1_hat, q));
    out.rows.push_back({c1_hat, area, c1_hat / area});
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (!(out.rows[i].c1 < out.rows[i - 1].c1)) {
      throw InvariantError("sweep: c1 column is not strictly decreasing");
    }
  }
  return out;
}

}  // namespace ooid
