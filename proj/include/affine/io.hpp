#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "affine/incidence.hpp"

namespace affine {

/// A loaded plane together with non-fatal diagnostics (unknown fields).
struct LoadedPlane {
  IncidencePlane plane;
  std::vector<std::string> warnings;
};

/// Incidence document: {"points": N, "lines": [[i, j, ...], ...]}.
/// Unknown top-level fields produce warnings. Throws Error(MalformedDocument).
LoadedPlane load_plane(const nlohmann::json& doc);
LoadedPlane load_plane_text(std::string_view text);
LoadedPlane load_plane_file(const std::filesystem::path& path);

nlohmann::ordered_json plane_document(const IncidencePlane& plane);

}  // namespace affine
