#include "ooid/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ooid {

FlowState make_flow_state(Polyline markers) {
  if (markers.size() < kMinMarkers) throw ArgumentError("make_flow_state: need at least 32 markers");
  const double area = signed_area(markers);
  if (!(std::abs(area) > 0.0)) throw ArgumentError("make_flow_state: zero enclosed area");
  if (area < 0.0) std::reverse(markers.begin() + 1, markers.end());
  if (!is_simple(markers)) throw TopologyError("make_flow_state: markers are not a simple polygon");
  FlowState state;
  state.area = signed_area(markers);
  state.markers = std::move(markers);
  return state;
}

void FlowConfig::validate() const {
  if (!(dt_safety > 0.0 && dt_safety <= 1.0)) throw ArgumentError("FlowConfig: dt_safety must be in (0, 1]");
  if (max_steps < 1) throw ArgumentError("FlowConfig: max_steps must be >= 1");
  if (redistribute_every < 1) throw ArgumentError("FlowConfig: redistribute_every must be >= 1");
  if (!(stop_residual >= 0.0)) throw ArgumentError("FlowConfig: stop_residual must be >= 0");
}

std::vector<MarkerGeometry> marker_geometry(std::span<const Vec2> closed, std::size_t stencil) {
  const std::size_t n = closed.size();
  if (stencil < 1 || 2 * stencil >= n) throw ArgumentError("marker_geometry: stencil too wide");
  std::vector<MarkerGeometry> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 a = closed[(k + n - stencil) % n];
    const Vec2 b = closed[k];
    const Vec2 c = closed[(k + stencil) % n];
    const Vec2 d1 = b - a;
    const Vec2 d2 = c - b;
    const double h1 = norm(d1);
    const double h2 = norm(d2);
    const double chord = distance(a, c);
    if (!(h1 > 0.0 && h2 > 0.0 && chord > 0.0)) {
      throw DegeneracyError("marker_geometry: coincident markers");
    }
    Vec2 t = (1.0 / (h1 + h2)) * ((h2 / h1) * d1 + (h1 / h2) * d2);
    t = (1.0 / norm(t)) * t;

    MarkerGeometry& g = out[k];
    g.kappa = 2.0 * cross(d1, d2) / (h1 * h2 * chord);
    g.gamma = std::atan2(std::abs(t.y), std::abs(t.x));
    g.y = b.y;
    g.normal = {-t.y, t.x};
    g.lever = -b.y * t.x;
  }
  return out;
}

std::vector<MarkerGeometry> geometry_of(const FlowState& state) { return marker_geometry(state.markers); }

namespace {

ResidualField residual_from(const std::vector<MarkerGeometry>& geo, double area, const NonlocalParams& np) {
  ResidualField field;
  field.values.resize(geo.size());
  for (std::size_t k = 0; k < geo.size(); ++k) {
    const double r = -1.0 + np.c1 * area * geo[k].kappa + np.c2 * area * geo[k].lever;
    field.values[k] = r;
    field.max_abs = std::max(field.max_abs, std::abs(r));
  }
  return field;
}

}  // namespace

ResidualField residual(const FlowState& state, const NonlocalParams& np) {
  np.validate();
  return residual_from(geometry_of(state), state.area, np);
}

FlowState step(const FlowState& state, const NonlocalParams& np, const FlowConfig& cfg) {
  np.validate();
  cfg.validate();
  const std::vector<MarkerGeometry> geo = geometry_of(state);
  const ResidualField r = residual_from(geo, state.area, np);

  const double h_min = min_edge_length(state.markers);
  double y_max = 0.0;
  for (const Vec2& p : state.markers) y_max = std::max(y_max, std::abs(p.y));
  const double a = state.area;
  double dt = cfg.dt_safety * h_min * h_min / (np.c3 * np.c1 * a + np.c3 * np.c2 * a * y_max + 1.0);
  const double cap = 0.25 * h_min;
  if (np.c3 * r.max_abs * dt >= cap) dt = std::nextafter(cap / (np.c3 * r.max_abs), 0.0);

  FlowState next;
  next.markers.resize(state.markers.size());
  double moved = 0.0;
  for (std::size_t k = 0; k < state.markers.size(); ++k) {
    const double shift = np.c3 * r.values[k] * dt;
    next.markers[k] = state.markers[k] + shift * geo[k].normal;
    moved = std::max(moved, std::abs(shift));
  }
  next.step_count = state.step_count + 1;
  if (next.step_count % cfg.redistribute_every == 0) {
    next.markers = resample_uniform(next.markers, next.markers.size());
  }

  const double area = signed_area(next.markers);
  if (!(area > 0.0) || !is_simple(next.markers)) {
    throw FlowTopologyError("step: polyline self-intersects or lost its orientation", state);
  }
  next.area = area;
  next.time = state.time + dt;
  next.last_dt = dt;
  next.last_max_displacement = moved;
  return next;
}

EvolveResult evolve_to_steady(const FlowState& state, const NonlocalParams& np, const FlowConfig& cfg) {
  cfg.validate();
  EvolveResult result;
  result.state = state;
  const Vec2 start = centroid(state.markers);

  auto record = [&](const FlowState& s) {
    const double worst = residual(s, np).max_abs;
    result.history.push_back({s.step_count, s.time, s.area, worst});
    return worst;
  };

  double worst = record(state);
  std::size_t taken = 0;
  while (true) {
    if (worst < cfg.stop_residual) {
      result.status = FlowStatus::Converged;
      break;
    }
    if (taken == cfg.max_steps) {
      result.status = FlowStatus::MaxSteps;
      break;
    }
    try {
      result.state = step(result.state, np, cfg);
    } catch (const TopologyError& e) {
      result.status = FlowStatus::TopologyFailure;
      result.diagnostic = e.what();
      break;
    } catch (const DegeneracyError& e) {
      result.status = FlowStatus::TopologyFailure;
      result.diagnostic = e.what();
      break;
    }
    ++taken;
    worst = record(result.state);
  }
  result.centroid_drift = distance(centroid(result.state.markers), start);
  return result;
}

Polyline circle_markers(double radius, std::size_t n) {
  if (!(radius > 0.0)) throw DomainError("circle_markers: radius must be > 0");
  Polyline out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out[k] = {radius * std::cos(t), radius * std::sin(t)};
  }
  return out;
}

Polyline shape_markers(const SteadyShape& shape, std::size_t n) {
  // Repeated resampling drives the chord lengths to equality, so the first
  // redistribution inside the flow is close to the identity.
  Polyline out = resample_uniform(shape.points, n);
  for (int pass = 0; pass < 4; ++pass) out = resample_uniform(out, n);
  return out;
}

}  // namespace ooid
