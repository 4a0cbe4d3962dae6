#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ooid/local_steady.hpp"
#include "ooid/polyline.hpp"

namespace ooid::cli {

// Shape file: one metadata comment line
//   # c1=... c2=... c1_hat=... q=... area=...
// followed by the header x,y,gamma,kappa and one row per point. c1 and c2 are
// written as "nan" for shapes without nonlocal parameters. A JSON sidecar with
// the same metadata is written to <path>.json.
void write_shape(const std::filesystem::path& path, const SteadyShape& shape);

std::string shape_metadata_json(const SteadyShape& shape);

// Reads the x,y columns of a shape file. Comment lines starting with '#' and a
// header line are skipped. ArgumentError on I/O failure or malformed rows.
Polyline read_shape_points(const std::filesystem::path& path);

// Writes `text` to `path`, replacing any existing file. ArgumentError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ooid::cli
