#include "affine/io.hpp"

#include <fstream>
#include <sstream>

#include "affine/error.hpp"

namespace affine {

LoadedPlane load_plane(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "document must be an object");

  std::vector<std::string> warnings;
  for (const auto& [key, _] : doc.items()) {
    if (key != "points" && key != "lines") warnings.push_back("ignoring unknown field '" + key + "'");
  }

  const auto points = doc.find("points");
  if (points == doc.end() || !points->is_number_integer() || points->get<std::int64_t>() < 0) {
    throw Error(ErrorCode::MalformedDocument, "'points' must be a non-negative integer");
  }
  const auto num_points = points->get<std::int64_t>();

  const auto lines_it = doc.find("lines");
  if (lines_it == doc.end() || !lines_it->is_array()) {
    throw Error(ErrorCode::MalformedDocument, "'lines' must be an array");
  }

  std::vector<std::vector<PointId>> lines;
  lines.reserve(lines_it->size());
  for (std::size_t l = 0; l < lines_it->size(); ++l) {
    const auto& entry = (*lines_it)[l];
    if (!entry.is_array()) throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(l) + " is not an array");
    std::vector<PointId> line;
    for (const auto& v : entry) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() >= num_points) {
        throw Error(ErrorCode::MalformedDocument,
                    "line " + std::to_string(l) + " has an invalid point index " + v.dump());
      }
      line.emplace_back(static_cast<std::uint32_t>(v.get<std::int64_t>()));
    }
    lines.push_back(std::move(line));
  }
  return LoadedPlane{IncidencePlane(static_cast<std::size_t>(num_points), std::move(lines)), std::move(warnings)};
}

LoadedPlane load_plane_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return load_plane(doc);
}

LoadedPlane load_plane_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_plane_text(buf.str());
}

nlohmann::ordered_json plane_document(const IncidencePlane& plane) {
  nlohmann::ordered_json doc;
  doc["points"] = plane.num_points();
  auto lines = nlohmann::ordered_json::array();
  for (const auto& line : plane.lines()) {
    auto arr = nlohmann::ordered_json::array();
    for (PointId p : line) arr.push_back(p.value);
    lines.push_back(std::move(arr));
  }
  doc["lines"] = std::move(lines);
  return doc;
}

}  // namespace affine
