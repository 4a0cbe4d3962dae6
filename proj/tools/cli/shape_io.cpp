#include "cli/shape_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "ooid/error.hpp"

namespace ooid::cli {

namespace {

double nonlocal_c1(const SteadyShape& s) {
  return s.nonlocal_params ? s.nonlocal_params->c1 : std::numeric_limits<double>::quiet_NaN();
}

double nonlocal_c2(const SteadyShape& s) {
  return s.nonlocal_params ? s.nonlocal_params->c2 : std::numeric_limits<double>::quiet_NaN();
}

std::string json_number(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : "null"; }

double parse_double(std::string_view text, const std::filesystem::path& path, std::size_t line) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ArgumentError(fmt::format("{}:{}: cannot parse number '{}'", path.string(), line, text));
  }
  return value;
}

}  // namespace

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ArgumentError(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out) throw ArgumentError(fmt::format("write to '{}' failed", path.string()));
}

std::string shape_metadata_json(const SteadyShape& shape) {
  return fmt::format(
      "{{\n  \"c1\": {},\n  \"c2\": {},\n  \"c1_hat\": {},\n  \"q\": {},\n  \"area\": {},\n"
      "  \"points\": {},\n  \"columns\": [\"x\", \"y\", \"gamma\", \"kappa\"]\n}}\n",
      json_number(nonlocal_c1(shape)), json_number(nonlocal_c2(shape)),
      json_number(shape.local_params.c1_hat()), json_number(shape.local_params.q()),
      json_number(shape.area), shape.points.size());
}

void write_shape(const std::filesystem::path& path, const SteadyShape& shape) {
  std::string text = fmt::format("# c1={:.17g} c2={:.17g} c1_hat={:.17g} q={:.17g} area={:.17g}\n",
                                 nonlocal_c1(shape), nonlocal_c2(shape), shape.local_params.c1_hat(),
                                 shape.local_params.q(), shape.area);
  text += "x,y,gamma,kappa\n";
  for (std::size_t i = 0; i < shape.points.size(); ++i) {
    text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", shape.points[i].x, shape.points[i].y,
                        shape.gamma[i], shape.kappa[i]);
  }
  write_text(path, text);
  std::filesystem::path sidecar = path;
  sidecar += ".json";
  write_text(sidecar, shape_metadata_json(shape));
}

Polyline read_shape_points(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError(fmt::format("cannot open '{}'", path.string()));
  Polyline points;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#' || line == "\r") continue;
    if (!header_seen && (line.front() == 'x' || line.front() == 'X')) {
      header_seen = true;
      continue;
    }
    const std::string_view view(line);
    const auto first = view.find(',');
    if (first == std::string_view::npos) {
      throw ArgumentError(fmt::format("{}:{}: expected at least two columns", path.string(), line_no));
    }
    const auto second = view.find(',', first + 1);
    const double x = parse_double(view.substr(0, first), path, line_no);
    const double y = parse_double(view.substr(first + 1, second == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : second - first - 1),
                                  path, line_no);
    points.push_back({x, y});
  }
  if (points.empty()) throw ArgumentError(fmt::format("'{}' contains no points", path.string()));
  return points;
}

}  // namespace ooid::cli
