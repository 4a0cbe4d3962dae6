#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/shape_io.hpp"
#include "ooid/ellipse.hpp"
#include "ooid/error.hpp"
#include "ooid/flow.hpp"
#include "ooid/inverse.hpp"
#include "ooid/local_steady.hpp"
#include "ooid/nonlocal_map.hpp"
#include "ooid/specfun.hpp"

namespace ooid::cli {

namespace {

constexpr std::size_t kDefaultMarkers = 256;
constexpr const char* kSamplesEnv = "OOID_SAMPLES";

void kv(std::ostream& out, std::string_view key, double value) { out << fmt::format("{}={:.6g}\n", key, value); }
void kv(std::ostream& out, std::string_view key, std::size_t value) { out << fmt::format("{}={}\n", key, value); }
void kv(std::ostream& out, std::string_view key, std::string_view value) { out << fmt::format("{}={}\n", key, value); }
void kv(std::ostream& out, std::string_view key, bool value) { kv(out, key, std::string_view(value ? "true" : "false")); }

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ArgumentError(fmt::format("{}: cannot parse '{}'", what, text));
  }
  return value;
}

std::size_t default_samples() {
  const char* env = std::getenv(kSamplesEnv);
  if (env == nullptr || *env == '\0') return kDefaultSegmentSamples;
  std::size_t value = 0;
  const std::string_view text(env);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < kMinSegmentSamples) {
    throw ArgumentError(fmt::format("{} must be an integer >= {}", kSamplesEnv, kMinSegmentSamples));
  }
  return value;
}

std::size_t samples_or_default(std::size_t given) { return given == 0 ? default_samples() : given; }

// Marker shape annotated with its measured geometry so it can be written as a shape file.
SteadyShape measured_shape(const Polyline& markers, const NonlocalParams& np) {
  const FlowState state = make_flow_state(markers);
  const std::vector<MarkerGeometry> geo = geometry_of(state);
  SteadyShape shape{state.markers, {}, {}, state.area, LocalParams(np.c1 * state.area, q_of(np)), np};
  for (const MarkerGeometry& g : geo) {
    shape.gamma.push_back(g.gamma);
    shape.kappa.push_back(g.kappa);
  }
  return shape;
}

struct SteadyArgs {
  double c1 = 0.0;
  double c2 = 0.0;
  std::size_t samples = 0;
  std::string out_path;
};

int cmd_steady(const SteadyArgs& a, std::ostream& out) {
  const NonlocalParams np{a.c1, a.c2, 1.0};
  np.validate();
  const SteadyShape shape = solve_nonlocal(np, samples_or_default(a.samples));
  kv(out, "c1", np.c1);
  kv(out, "c2", np.c2);
  kv(out, "c1_hat", shape.local_params.c1_hat());
  kv(out, "q", shape.local_params.q());
  kv(out, "area", shape.area);
  kv(out, "points", shape.points.size());
  kv(out, "max_residual", steady_residual(shape, np));
  if (!a.out_path.empty()) {
    write_shape(a.out_path, shape);
    kv(out, "shape_file", a.out_path);
  }
  return kExitOk;
}

struct LocalArgs {
  double c1_hat = 0.0;
  double q = 0.0;
  std::size_t samples = 0;
  std::string out_path;
};

std::string_view status_name(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::Holds: return "holds";
    case PropertyStatus::Fails: return "fails";
    case PropertyStatus::NotApplicable: return "n/a";
  }
  return "?";
}

int cmd_local(const LocalArgs& a, std::ostream& out) {
  const LocalParams p(a.c1_hat, a.q);
  if (p.q() > 0.0 && !in_chi_q(p)) {
    throw NotRealizableError(fmt::format("c1_hat={:.6g} exceeds the critical value {:.6g} for q={:.6g}",
                                         p.c1_hat(), c1_crit(p.q()), p.q()));
  }
  const CurveSegment seg = realize_segment(p, samples_or_default(a.samples));
  const SteadyShape shape = assemble_shape(seg);
  kv(out, "c1_hat", p.c1_hat());
  kv(out, "q", p.q());
  kv(out, "c2_hat", p.c2_hat());
  kv(out, "y_bar", seg.y_bar);
  kv(out, "half_width", std::abs(seg.samples.front().x));
  if (p.q() > 0.0) {
    kv(out, "y0", find_y0(p));
    kv(out, "c1_crit", c1_crit(p.q()));
  }
  kv(out, "area", shape.area);
  kv(out, "points", shape.points.size());
  const PropertyReport report = property_report(p);
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    kv(out, fmt::format("property{}.{}", i + 1, report.checks[i].name), status_name(report.checks[i].status));
  }
  if (!a.out_path.empty()) {
    write_shape(a.out_path, shape);
    kv(out, "shape_file", a.out_path);
  }
  return kExitOk;
}

int cmd_crit(double q, std::ostream& out) {
  const double crit = c1_crit(q);
  kv(out, "q", q);
  kv(out, "c1_crit", crit);
  kv(out, "y0", dawson_maximizer() / q);
  return kExitOk;
}

struct SweepArgs {
  double q = 0.0;
  std::size_t rows = 16;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const MapSweep s = sweep(a.q, a.rows);
  kv(out, "q", s.q);
  kv(out, "rows", s.rows.size());
  kv(out, "c1_first", s.rows.front().c1);
  kv(out, "c1_last", s.rows.back().c1);
  kv(out, "c1_span_decades", std::log10(s.rows.front().c1 / s.rows.back().c1));
  kv(out, "strictly_decreasing", true);
  std::string csv = "c1_hat,area,c1\n";
  for (const MapSweepRow& r : s.rows) csv += fmt::format("{:.17g},{:.17g},{:.17g}\n", r.c1_hat, r.area, r.c1);
  if (a.out_path.empty()) {
    out << csv;
  } else {
    write_text(a.out_path, csv);
    kv(out, "sweep_file", a.out_path);
  }
  return kExitOk;
}

struct FlowArgs {
  std::string preset;
  std::string init_path;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 1.0;
  bool c1_given = false;
  bool c2_given = false;
  double scale = 1.0;
  std::size_t markers = kDefaultMarkers;
  std::size_t samples = 0;
  FlowConfig cfg;
  std::string out_path;
  std::string final_shape_path;
};

std::string_view flow_status_name(FlowStatus s) {
  switch (s) {
    case FlowStatus::Converged: return "converged";
    case FlowStatus::MaxSteps: return "max_steps";
    case FlowStatus::TopologyFailure: return "topology_failure";
  }
  return "?";
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int cmd_flow(FlowArgs a, std::ostream& out) {
  if (a.preset.empty() == a.init_path.empty()) throw ArgumentError("flow: give exactly one of --preset or --init");
  if (!(a.scale > 0.0 && std::isfinite(a.scale))) throw ArgumentError("flow: --scale must be > 0");

  Polyline markers;
  auto need_c1 = [&](std::string_view what) {
    if (!a.c1_given) throw ArgumentError(fmt::format("flow: --c1 is required for {}", what));
  };
  if (!a.init_path.empty()) {
    need_c1("--init");
    markers = read_shape_points(a.init_path);
  } else {
    const std::vector<std::string_view> parts = split(a.preset, ':');
    if (parts[0] == "circle" && parts.size() == 2) {
      need_c1("the circle preset");
      markers = circle_markers(parse_number(parts[1], "circle radius"), a.markers);
    } else if (parts[0] == "ellipse" && parts.size() == 3) {
      const EllipseSpec e{parse_number(parts[1], "ellipse a"), parse_number(parts[2], "ellipse b")};
      markers = ellipse_markers(e, a.markers);
      if (!a.c1_given) a.c1 = forced_c1(e);
      if (!a.c2_given) a.c2 = forced_c2(e);
    } else if (parts[0] == "steady" && parts.size() == 1) {
      need_c1("the steady preset");
      const NonlocalParams np{a.c1, a.c2, a.c3};
      np.validate();
      markers = shape_markers(solve_nonlocal(np, samples_or_default(a.samples)), a.markers);
    } else {
      throw ArgumentError(fmt::format("flow: unknown preset '{}'", a.preset));
    }
  }
  for (Vec2& p : markers) p = a.scale * p;

  const NonlocalParams np{a.c1, a.c2, a.c3};
  np.validate();
  a.cfg.validate();
  const FlowState start = make_flow_state(std::move(markers));
  const EvolveResult result = evolve_to_steady(start, np, a.cfg);

  if (!a.out_path.empty()) {
    std::string csv = "step,time,area,max_residual\n";
    for (const FlowHistoryRow& r : result.history) {
      csv += fmt::format("{},{:.17g},{:.17g},{:.17g}\n", r.step, r.time, r.area, r.max_residual);
    }
    write_text(a.out_path, csv);
  }

  kv(out, "c1", np.c1);
  kv(out, "c2", np.c2);
  kv(out, "c3", np.c3);
  kv(out, "markers", result.state.markers.size());
  kv(out, "status", flow_status_name(result.status));
  kv(out, "steps", result.state.step_count);
  kv(out, "time", result.state.time);
  kv(out, "initial_area", result.history.front().area);
  kv(out, "initial_residual", result.history.front().max_residual);
  kv(out, "final_area", result.state.area);
  kv(out, "final_residual", result.history.back().max_residual);
  kv(out, "centroid_drift", result.centroid_drift);
  if (!a.out_path.empty()) kv(out, "series_file", a.out_path);

  if (result.status == FlowStatus::TopologyFailure) {
    throw TopologyError(fmt::format("flow stopped after step {}: {}", result.state.step_count, result.diagnostic));
  }
  if (!a.final_shape_path.empty()) {
    write_shape(a.final_shape_path, measured_shape(result.state.markers, np));
    kv(out, "shape_file", a.final_shape_path);
  }
  return kExitOk;
}

struct EllipseArgs {
  double a = 0.0;
  double b = 0.0;
  std::size_t phi_count = 91;
  std::string out_path;
};

int cmd_ellipse_check(const EllipseArgs& a, std::ostream& out) {
  const EllipseSpec e{a.a, a.b};
  const EllipseScan scan = ellipse_scan(e, a.phi_count);
  const double quarter = 0.25 * std::numbers::pi;
  kv(out, "a", e.a);
  kv(out, "b", e.b);
  kv(out, "c1", scan.c1);
  kv(out, "c2", scan.c2);
  kv(out, "residual_pi_4", ellipse_residual(e, quarter));
  kv(out, "residual_pi_4_closed_form", ellipse_residual_quarter_pi(e));
  kv(out, "max_abs_residual", scan.max_abs);
  kv(out, "phi_at_max", scan.phi_at_max);
  kv(out, "phi_count", scan.phi.size());
  if (!a.out_path.empty()) {
    std::string csv = "phi,residual,residual_reduced\n";
    for (std::size_t i = 0; i < scan.phi.size(); ++i) {
      csv += fmt::format("{:.17g},{:.17g},{:.17g}\n", scan.phi[i], scan.residual[i],
                         ellipse_residual_reduced(e, scan.phi[i]));
    }
    write_text(a.out_path, csv);
    kv(out, "scan_file", a.out_path);
  }
  return kExitOk;
}

struct RecoverArgs {
  std::string in_path;
  std::size_t stencil = 1;
};

int cmd_recover(const RecoverArgs& a, std::ostream& out) {
  const Polyline points = read_shape_points(a.in_path);
  const Recovery rec = recover_params(points, a.stencil);
  kv(out, "points", points.size());
  kv(out, "area", std::abs(signed_area(points)));
  kv(out, "c1", rec.c1);
  kv(out, "c2", rec.c2);
  kv(out, "residual_norm", rec.residual_norm);
  kv(out, "c2_clamped", rec.c2_clamped);
  kv(out, "degenerate", rec.degenerate);
  kv(out, "convexity_warning", rec.convexity_warning);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady shapes of a nonlocal abrasion-friction curve flow", "ooid"};
  app.require_subcommand(1);

  SteadyArgs steady;
  auto* steady_cmd = app.add_subcommand("steady", "Solve the nonlocal steady shape for (c1, c2)");
  steady_cmd->add_option("--c1", steady.c1, "Abrasion coefficient (> 0)")->required();
  steady_cmd->add_option("--c2", steady.c2, "Friction coefficient (>= 0)")->required();
  steady_cmd->add_option("--samples", steady.samples, "Samples per quarter arc (default $OOID_SAMPLES or 256)");
  steady_cmd->add_option("--out", steady.out_path, "Shape CSV to write");

  LocalArgs local;
  auto* local_cmd = app.add_subcommand("local", "Realize the local steady shape for (c1_hat, q)");
  local_cmd->add_option("--c1-hat", local.c1_hat, "Scaled abrasion coefficient (> 0)")->required();
  local_cmd->add_option("--q", local.q, "Shape parameter (>= 0)")->required();
  local_cmd->add_option("--samples", local.samples, "Samples per quarter arc (default $OOID_SAMPLES or 256)");
  local_cmd->add_option("--out", local.out_path, "Shape CSV to write");

  double crit_q = 0.0;
  auto* crit_cmd = app.add_subcommand("crit", "Critical c1_hat for a given q");
  crit_cmd->add_option("--q", crit_q, "Shape parameter (> 0)")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the map c1_hat -> c1 at fixed q");
  sweep_cmd->add_option("--q", sweep_args.q, "Shape parameter (> 0)")->required();
  sweep_cmd->add_option("--rows", sweep_args.rows, "Number of rows (>= 8)");
  sweep_cmd->add_option("--out", sweep_args.out_path, "CSV to write (default: standard output)");

  FlowArgs flow;
  auto* flow_cmd = app.add_subcommand("flow", "Evolve a marker curve under the nonlocal flow");
  flow_cmd->add_option("--preset", flow.preset, "circle:R, ellipse:A:B or steady");
  flow_cmd->add_option("--init", flow.init_path, "Initial shape CSV");
  auto* c1_opt = flow_cmd->add_option("--c1", flow.c1, "Abrasion coefficient");
  auto* c2_opt = flow_cmd->add_option("--c2", flow.c2, "Friction coefficient (default 0)");
  flow_cmd->add_option("--c3", flow.c3, "Time scale (default 1)");
  flow_cmd->add_option("--scale", flow.scale, "Scale factor applied to the initial markers");
  flow_cmd->add_option("--markers", flow.markers, "Marker count for presets (default 256)");
  flow_cmd->add_option("--samples", flow.samples, "Samples per quarter for the steady preset");
  flow_cmd->add_option("--steps", flow.cfg.max_steps, "Maximum number of steps");
  flow_cmd->add_option("--dt-safety", flow.cfg.dt_safety, "Time step safety factor in (0, 1]");
  flow_cmd->add_option("--stop-residual", flow.cfg.stop_residual, "Stop once max |residual| is below this");
  flow_cmd->add_option("--redistribute-every", flow.cfg.redistribute_every, "Steps between redistributions");
  flow_cmd->add_option("--out", flow.out_path, "Time series CSV to write");
  flow_cmd->add_option("--final-shape", flow.final_shape_path, "Shape CSV of the final markers");

  EllipseArgs ellipse;
  auto* ellipse_cmd = app.add_subcommand("ellipse-check", "Residual of an ellipse under its forced constants");
  ellipse_cmd->add_option("--a", ellipse.a, "Semi-major axis")->required();
  ellipse_cmd->add_option("--b", ellipse.b, "Semi-minor axis")->required();
  ellipse_cmd->add_option("--phi-count", ellipse.phi_count, "Angles in [0, pi/2] (default 91)");
  ellipse_cmd->add_option("--out", ellipse.out_path, "Residual CSV to write");

  RecoverArgs recover;
  auto* recover_cmd = app.add_subcommand("recover", "Recover (c1, c2) from a sampled steady shape");
  recover_cmd->add_option("--in", recover.in_path, "Shape CSV")->required();
  recover_cmd->add_option("--stencil", recover.stencil, "Neighbour offset of the curvature stencil (default 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    if (steady_cmd->parsed()) return cmd_steady(steady, out);
    if (local_cmd->parsed()) return cmd_local(local, out);
    if (crit_cmd->parsed()) return cmd_crit(crit_q, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out);
    if (flow_cmd->parsed()) {
      flow.c1_given = c1_opt->count() > 0;
      flow.c2_given = c2_opt->count() > 0;
      return cmd_flow(flow, out);
    }
    if (ellipse_cmd->parsed()) return cmd_ellipse_check(ellipse, out);
    if (recover_cmd->parsed()) return cmd_recover(recover, out);
  } catch (const DegenerateLimitError& e) {
    err << "error: degenerate limit: " << e.what() << "\n";
    return kExitNotRealizable;
  } catch (const NotRealizableError& e) {
    err << "error: not realizable: " << e.what() << "\n";
    return kExitNotRealizable;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const TopologyError& e) {
    err << "error: topology: " << e.what() << "\n";
    return kExitTopology;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace ooid::cli
