#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "affine/builder.hpp"
#include "affine/collineation.hpp"
#include "affine/endo.hpp"
#include "affine/incidence.hpp"
#include "affine/transgroup.hpp"
#include "oracle.hpp"

namespace testing_support {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(AFFINE_FIXTURE_DIR) / name;
}

inline affine::LineId line_of(const affine::IncidencePlane& plane, std::vector<int> pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    const auto on = plane.points_on(affine::LineId(l));
    if (on.size() == pts.size() && std::equal(on.begin(), on.end(), pts.begin(),
                                              [](affine::PointId a, int b) { return a.get() == std::uint32_t(b); })) {
      return affine::LineId(l);
    }
  }
  throw std::logic_error("no such line");
}

inline affine::PointBijection perm(const std::vector<std::uint32_t>& image) {
  return affine::PointBijection::from_indices(image);
}

inline oracle::Perm raw(const affine::PointBijection& f) {
  oracle::Perm out;
  for (auto p : f.image()) out.push_back(static_cast<int>(p.get()));
  return out;
}

inline oracle::Lines raw_lines(const affine::IncidencePlane& plane) {
  oracle::Lines out;
  for (const auto& l : plane.lines()) {
    oracle::Line r;
    for (auto p : l) r.push_back(static_cast<int>(p.get()));
    out.push_back(r);
  }
  return out;
}

inline std::vector<oracle::Perm> raw_maps(const std::vector<affine::ClassifiedMap>& maps) {
  std::vector<oracle::Perm> out;
  for (const auto& m : maps) out.push_back(raw(m.map));
  return out;
}

// AG(2,p) together with its translation group.
struct PlaneGroup {
  affine::IncidencePlane plane;
  affine::TranslationGroup group;
  explicit PlaneGroup(std::uint32_t p)
      : plane(affine::build_prime_plane(p)), group(affine::build_group(plane, affine::enumerate_translations(plane))) {}
};

// Element index of the translation by (dx, dy).
inline affine::ElementIndex shift_index(const PlaneGroup& pg, std::uint32_t p, std::uint32_t dx, std::uint32_t dy) {
  std::vector<std::uint32_t> img(p * p);
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) img[x * p + y] = ((x + dx) % p) * p + (y + dy) % p;
  }
  return pg.group.find(perm(img)).value();
}

}  // namespace testing_support
