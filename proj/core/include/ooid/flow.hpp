#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ooid/error.hpp"
#include "ooid/local_steady.hpp"
#include "ooid/params.hpp"
#include "ooid/polyline.hpp"

namespace ooid {

inline constexpr std::size_t kMinMarkers = 32;

// Marker polyline evolving under Gamma_t = c3 (-1 + c1 A kappa + c2 A y cos(gamma)) n.
struct FlowState {
  Polyline markers;  // counterclockwise
  double time = 0.0;
  double area = 0.0;  // shoelace area of markers
  std::size_t step_count = 0;
  // Diagnostics of the most recent step.
  double last_dt = 0.0;
  double last_max_displacement = 0.0;
};

/// Validates (>= 32 markers, simple, non-zero area), orients counterclockwise
/// and caches the area. ArgumentError / TopologyError on invalid input.
FlowState make_flow_state(Polyline markers);

struct FlowConfig {
  double dt_safety = 0.2;
  std::size_t max_steps = 1000;
  std::size_t redistribute_every = 1;
  double stop_residual = 1e-6;

  void validate() const;
};

struct MarkerGeometry {
  double kappa;  // circumscribed-circle curvature, positive on convex arcs
  double gamma;  // tangent inclination folded into [0, pi/2]
  double y;
  Vec2 normal;   // inward unit normal
  double lever;  // y cos(gamma) with the sign convention of the friction term: -y * t_x
};

/// Per-vertex geometry of a counterclockwise closed polyline, using the vertex
/// triple (k - stencil, k, k + stencil). The tangent is the second-order
/// non-uniform central difference; curvature comes from the circumscribed
/// circle (collinear triples give 0). DegeneracyError on coincident points.
std::vector<MarkerGeometry> marker_geometry(std::span<const Vec2> closed, std::size_t stencil = 1);

std::vector<MarkerGeometry> geometry_of(const FlowState& state);

struct ResidualField {
  std::vector<double> values;
  double max_abs = 0.0;
};

/// r_k = -1 + c1 A kappa_k + c2 A y_k cos(gamma_k) with A the current shoelace area.
ResidualField residual(const FlowState& state, const NonlocalParams& np);

// Thrown by step() when the moved polyline is no longer simple; carries the
// last valid state.
class FlowTopologyError : public TopologyError {
 public:
  FlowTopologyError(const std::string& what, FlowState last_valid)
      : TopologyError(what), last_valid_(std::move(last_valid)) {}
  const FlowState& last_valid() const noexcept { return last_valid_; }

 private:
  FlowState last_valid_;
};

/// One explicit Euler step. Each marker moves c3 * r_k * dt along its inward normal with
///   dt = dt_safety * h_min^2 / (c3 c1 A + c3 c2 A y_max + 1),
/// capped so no marker moves 0.25 h_min or more; markers are then redistributed
/// uniformly along a periodic cubic spline every `redistribute_every` steps.
FlowState step(const FlowState& state, const NonlocalParams& np, const FlowConfig& cfg);

enum class FlowStatus { Converged, MaxSteps, TopologyFailure };

struct FlowHistoryRow {
  std::size_t step;
  double time;
  double area;
  double max_residual;
};

struct EvolveResult {
  FlowState state;
  FlowStatus status = FlowStatus::MaxSteps;
  std::vector<FlowHistoryRow> history;  // one row per state visited, starting with the input
  double centroid_drift = 0.0;          // distance the centroid moved; the frame is never re-anchored
  std::string diagnostic;

  bool converged() const { return status == FlowStatus::Converged; }
};

/// Step until max |r| < stop_residual or max_steps is reached. A topology
/// failure ends the run with status TopologyFailure and the partial history.
EvolveResult evolve_to_steady(const FlowState& state, const NonlocalParams& np, const FlowConfig& cfg);

/// n markers on the circle of the given radius centered at the origin.
Polyline circle_markers(double radius, std::size_t n);

/// A steady shape resampled to n markers evenly spaced along its boundary.
Polyline shape_markers(const SteadyShape& shape, std::size_t n);

}  // namespace ooid
