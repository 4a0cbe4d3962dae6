#pragma once

#include <cstddef>
#include <vector>

#include "ooid/local_steady.hpp"
#include "ooid/params.hpp"

namespace ooid {

/// q = sqrt(c2 / (2 c1)); shared by a nonlocal parameter set and its local image.
double q_of(const NonlocalParams& np);

/// F(c1_hat) = c1_hat / A(c1_hat, q) with A = 4 * quarter_area. Strictly
/// decreasing on the open realizable interval; NotRealizableError outside it.
double map_F(double c1_hat, double q);

/// The c1_hat in (0, c1_crit(q)) with map_F(c1_hat, q) == c1 to 1e-10 relative.
/// Closed form 1 / (pi c1) when q == 0. NumericError if no bracket can be found.
double invert_F(double c1, double q);

/// Steady shape of the nonlocal equation: c1_hat = invert_F(c1, q), realized at
/// n samples per quarter. Both parameter sets are recorded on the shape.
SteadyShape solve_nonlocal(const NonlocalParams& np, std::size_t n = kDefaultSegmentSamples);

/// Pointwise steady-state residual -1 + c1 A kappa + c2 A |y| cos(gamma) on the
/// shape's own analytic kappa and gamma, with A = shape.area. Returns max |r|.
double steady_residual(const SteadyShape& shape, const NonlocalParams& np);

struct MapSweepRow {
  double c1_hat;
  double area;
  double c1;
};

struct MapSweep {
  double q = 0.0;
  std::vector<MapSweepRow> rows;  // c1_hat ascending, c1 strictly decreasing
};

/// Evaluate F at n_rows c1_hat values geometrically spaced over
/// [1e-3 c1_crit, (1 - 1e-3) c1_crit]. InvariantError if the c1 column is not
/// strictly decreasing.
MapSweep sweep(double q, std::size_t n_rows);

}  // namespace ooid
