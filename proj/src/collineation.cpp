#include "affine/collineation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "affine/builder.hpp"
#include "affine/error.hpp"

namespace affine {

PointBijection::PointBijection(std::vector<PointId> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (PointId p : image_) {
    if (p.get() >= image_.size() || hit[p.get()]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    hit[p.get()] = true;
  }
}

PointBijection PointBijection::identity(std::size_t n) {
  std::vector<PointId> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = PointId(i);
  return PointBijection(Unchecked{}, std::move(image));
}

PointBijection PointBijection::from_indices(std::span<const std::uint32_t> image) {
  std::vector<PointId> ids;
  ids.reserve(image.size());
  for (auto v : image) ids.emplace_back(v);
  return PointBijection(std::move(ids));
}

bool PointBijection::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i].get() != i) return false;
  }
  return true;
}

PointBijection PointBijection::inverse() const {
  std::vector<PointId> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i].get()] = PointId(i);
  return PointBijection(Unchecked{}, std::move(inv));
}

PointBijection compose(const PointBijection& outer, const PointBijection& inner) {
  if (outer.size() != inner.size()) throw Error(ErrorCode::SizeMismatch, "composing maps of different degree");
  std::vector<PointId> image(inner.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = outer.image_[inner.image_[i].get()];
  return PointBijection(PointBijection::Unchecked{}, std::move(image));
}

const char* to_string(MapKind kind) noexcept {
  switch (kind) {
    case MapKind::General: return "general";
    case MapKind::Collineation: return "collineation";
    case MapKind::Dilation: return "dilation";
    case MapKind::Translation: return "translation";
  }
  return "unknown";
}

namespace {

void require_size(const IncidencePlane& plane, const PointBijection& f) {
  if (f.size() != plane.num_points()) {
    throw Error(ErrorCode::SizeMismatch, "map acts on " + std::to_string(f.size()) + " points, plane has " +
                                             std::to_string(plane.num_points()));
  }
}

// Image of one line is a line of the same size.
bool maps_line_onto_line(const IncidencePlane& plane, const PointBijection& f, LineId l) {
  const auto pts = plane.points_on(l);
  const auto target = plane.unique_join(f(pts[0]), f(pts[1]));
  if (!target || plane.points_on(*target).size() != pts.size()) return false;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (!plane.incident(f(pts[i]), *target)) return false;
  }
  return true;
}

bool preserves_directions(const IncidencePlane& plane, const PointBijection& f) {
  const auto& part = *plane.partition();
  const std::size_t n = plane.num_points();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const auto src = plane.unique_join(PointId(p), PointId(q));
      const auto dst = plane.unique_join(f(PointId(p)), f(PointId(q)));
      if (part[*src] != part[*dst]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_collineation(const IncidencePlane& plane, const PointBijection& f) {
  require_size(plane, f);
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    if (!maps_line_onto_line(plane, f, LineId(l))) return false;
  }
  return true;
}

bool is_dilation(const IncidencePlane& plane, const PointBijection& f) {
  plane.require_verified("is_dilation");
  return is_collineation(plane, f) && preserves_directions(plane, f);
}

std::vector<PointId> fixed_points(const PointBijection& f) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(PointId(i)) == PointId(i)) out.emplace_back(i);
  }
  return out;
}

bool is_translation(const IncidencePlane& plane, const PointBijection& f) {
  require_size(plane, f);
  if (f.is_identity()) return true;
  return fixed_points(f).empty() && is_dilation(plane, f);
}

ClassifiedMap classify(const IncidencePlane& plane, PointBijection f) {
  ClassifiedMap out;
  out.fixed_points = fixed_points(f);
  out.map = std::move(f);
  if (!is_collineation(plane, out.map)) {
    out.kind = MapKind::General;
  } else if (!plane.is_verified() || !is_dilation(plane, out.map)) {
    out.kind = MapKind::Collineation;
  } else if (out.map.is_identity() || out.fixed_points.empty()) {
    out.kind = MapKind::Translation;
    out.direction = direction(plane, out);
  } else {
    out.kind = MapKind::Dilation;
  }
  return out;
}

std::optional<LineId> trace(const IncidencePlane& plane, const ClassifiedMap& f, PointId p) {
  if (f.kind != MapKind::Dilation && f.kind != MapKind::Translation) {
    throw Error(ErrorCode::NotDilation, "traces are defined for dilations only");
  }
  const PointId image = f.map(p);
  if (image == p) return std::nullopt;
  return line_through(plane, p, image);
}

std::optional<DirectionId> direction(const IncidencePlane& plane, const ClassifiedMap& sigma) {
  if (sigma.kind != MapKind::Translation) {
    throw Error(ErrorCode::NotTranslation, "direction is defined for translations only");
  }
  plane.require_verified("direction");
  if (sigma.map.is_identity()) return std::nullopt;
  const auto& part = *plane.partition();
  std::optional<DirectionId> dir;
  for (std::size_t p = 0; p < plane.num_points(); ++p) {
    const auto line = trace(plane, sigma, PointId(p));
    if (!line) {
      throw Error(ErrorCode::NotTranslation, "non-identity translation fixes point " + std::to_string(p));
    }
    const DirectionId d = part[*line];
    if (!dir) {
      dir = d;
    } else if (*dir != d) {
      std::ostringstream os;
      os << "trace of point " << p << " lies in class " << d << ", expected " << *dir;
      throw Error(ErrorCode::TraceClassMismatch, os.str());
    }
  }
  return dir;
}

std::uint32_t plane_order(const IncidencePlane& plane) {
  plane.require_verified("plane_order");
  return static_cast<std::uint32_t>(plane.points_on(LineId(0u)).size());
}

namespace {

class CollineationSearch {
 public:
  explicit CollineationSearch(const IncidencePlane& plane)
      : plane_(plane), n_(plane.num_points()), image_(n_), used_(n_, false) {}

  std::vector<ClassifiedMap> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool collinear(PointId a, PointId b, PointId c) const {
    return plane_.incident(c, *plane_.unique_join(a, b));
  }

  // Every triple ending at k keeps its collinearity status under the map.
  bool consistent(std::size_t k) const {
    const PointId pk(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (collinear(PointId(i), PointId(j), pk) != collinear(image_[i], image_[j], image_[k])) return false;
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (k == n_) {
      PointBijection f(image_);
      if (is_collineation(plane_, f)) found_.push_back(classify(plane_, std::move(f)));
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c]) continue;
      image_[k] = PointId(c);
      if (!consistent(k)) continue;
      used_[c] = true;
      extend(k + 1);
      used_[c] = false;
    }
  }

  const IncidencePlane& plane_;
  std::size_t n_;
  std::vector<PointId> image_;
  std::vector<bool> used_;
  std::vector<ClassifiedMap> found_;
};

}  // namespace

std::vector<ClassifiedMap> enumerate_collineations(const IncidencePlane& plane, std::size_t max_points) {
  plane.require_verified("enumerate_collineations");
  if (plane.num_points() > max_points) {
    throw Error(ErrorCode::OrderTooLarge, "collineation search limited to " + std::to_string(max_points) +
                                              " points, plane has " + std::to_string(plane.num_points()));
  }
  auto found = CollineationSearch(plane).run();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<ClassifiedMap> enumerate_dilations(const IncidencePlane& plane, std::uint32_t max_order) {
  plane.require_verified("enumerate_dilations");
  const auto order = plane_order(plane);
  if (order > max_order) {
    throw Error(ErrorCode::OrderTooLarge,
                "dilation enumeration limited to order " + std::to_string(max_order) + ", plane has order " +
                    std::to_string(order));
  }

  const std::size_t n = plane.num_points();
  const PointId a(0u);
  const PointId b = plane.points_on(plane.lines_through(a)[0])[1];
  const LineId base = line_through(plane, a, b);

  PointId anchor{};
  for (std::size_t c = 0; c < n; ++c) {
    if (!plane.incident(PointId(c), base)) {
      anchor = PointId(c);
      break;
    }
  }

  std::vector<ClassifiedMap> out;
  std::vector<PointId> image(n);
  for (std::size_t ai = 0; ai < n; ++ai) {
    const PointId a_img(ai);
    const LineId base_img = parallel_through_point(plane, base, a_img);
    for (PointId b_img : plane.points_on(base_img)) {
      if (b_img == a_img) continue;
      image[a.get()] = a_img;
      image[b.get()] = b_img;
      // Off the base line: meet of the parallels to AC through A' and BC through B'.
      for (std::size_t ci = 0; ci < n; ++ci) {
        const PointId c(ci);
        if (plane.incident(c, base)) continue;
        const LineId via_a = parallel_through_point(plane, line_through(plane, a, c), a_img);
        const LineId via_b = parallel_through_point(plane, line_through(plane, b, c), b_img);
        image[ci] = *intersect(plane, via_a, via_b);
      }
      // On the base line: use the anchor, which is off it.
      const PointId anchor_img = image[anchor.get()];
      for (PointId d : plane.points_on(base)) {
        if (d == a || d == b) continue;
        const LineId via_anchor = parallel_through_point(plane, line_through(plane, anchor, d), anchor_img);
        image[d.get()] = *intersect(plane, via_anchor, base_img);
      }

      std::vector<bool> hit(n, false);
      bool bijective = true;
      for (PointId p : image) {
        if (hit[p.get()]) {
          bijective = false;
          break;
        }
        hit[p.get()] = true;
      }
      if (!bijective) continue;
      PointBijection f(image);
      if (!is_dilation(plane, f)) continue;
      out.push_back(classify(plane, std::move(f)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClassifiedMap> select_translations(const IncidencePlane& plane, std::span<const ClassifiedMap> dilations) {
  std::vector<ClassifiedMap> out;
  for (const auto& d : dilations) {
    if (d.kind == MapKind::Translation) {
      out.push_back(d);
    } else if (d.kind == MapKind::Dilation && d.fixed_points.empty()) {
      auto t = d;
      t.kind = MapKind::Translation;
      t.direction = direction(plane, t);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassifiedMap> enumerate_translations(const IncidencePlane& plane, std::uint32_t max_order) {
  const auto dilations = enumerate_dilations(plane, max_order);
  return select_translations(plane, dilations);
}

}  // namespace affine

namespace affine {

CheckResult check_composition_closed(std::span<const ClassifiedMap> maps) {
  CheckResult r{.name = "composition_closed"};
  auto contains = [&](const PointBijection& f) {
    const auto it = std::lower_bound(maps.begin(), maps.end(), f,
                                     [](const ClassifiedMap& m, const PointBijection& key) { return m.map < key; });
    return it != maps.end() && it->map == f;
  };
  if (!std::is_sorted(maps.begin(), maps.end())) return r.fail({}, "map list is not in canonical order");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    ++r.cases;
    if (!contains(maps[i].map.inverse())) return r.fail({i}, "inverse is not in the list");
    for (std::size_t j = 0; j < maps.size(); ++j) {
      ++r.cases;
      if (!contains(compose(maps[i].map, maps[j].map))) return r.fail({i, j}, "composite is not in the list");
    }
  }
  return r;
}

CheckResult check_two_fixed_points_identity(std::span<const ClassifiedMap> maps) {
  CheckResult r{.name = "two_fixed_points_identity"};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    ++r.cases;
    if (fixed_points(maps[i].map).size() >= 2 && !maps[i].map.is_identity()) {
      return r.fail({i}, "non-identity map fixes two distinct points");
    }
  }
  return r;
}

CheckResult check_traces_parallel(const IncidencePlane& plane, std::span<const ClassifiedMap> translations) {
  CheckResult r{.name = "traces_parallel"};
  for (std::size_t i = 0; i < translations.size(); ++i) {
    if (translations[i].map.is_identity()) continue;
    ++r.cases;
    try {
      if (!direction(plane, translations[i])) return r.fail({i}, "non-identity translation without direction");
    } catch (const Error& e) {
      return r.fail({i}, e.what());
    }
  }
  return r;
}

}  // namespace affine
