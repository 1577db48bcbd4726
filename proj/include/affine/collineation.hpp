#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affine/check.hpp"
#include "affine/incidence.hpp"

namespace affine {

inline constexpr std::size_t kDefaultMaxCollineationPoints = 9;

/// A permutation of the points of a plane, stored as its image array.
/// Ordering is lexicographic on the image array, which puts the identity
/// first among permutations of the same size.
class PointBijection {
 public:
  PointBijection() = default;
  /// Throws std::invalid_argument if `image` is not a permutation of [0, n).
  explicit PointBijection(std::vector<PointId> image);

  static PointBijection identity(std::size_t n);
  static PointBijection from_indices(std::span<const std::uint32_t> image);

  std::size_t size() const noexcept { return image_.size(); }
  PointId operator()(PointId p) const { return image_[p.get()]; }
  std::span<const PointId> image() const noexcept { return image_; }
  bool is_identity() const noexcept;

  PointBijection inverse() const;

  friend auto operator<=>(const PointBijection&, const PointBijection&) = default;

 private:
  struct Unchecked {};
  PointBijection(Unchecked, std::vector<PointId> image) : image_(std::move(image)) {}
  friend PointBijection compose(const PointBijection& outer, const PointBijection& inner);

  std::vector<PointId> image_;
};

/// (outer ∘ inner)(P) = outer(inner(P)). Throws SizeMismatch.
PointBijection compose(const PointBijection& outer, const PointBijection& inner);

enum class MapKind { General, Collineation, Dilation, Translation };

const char* to_string(MapKind kind) noexcept;

/// A point bijection tagged with its most specific kind. The identity is
/// tagged as a translation.
struct ClassifiedMap {
  PointBijection map;
  MapKind kind = MapKind::General;
  std::vector<PointId> fixed_points;
  std::optional<DirectionId> direction;  // present only for non-identity translations

  friend bool operator==(const ClassifiedMap& a, const ClassifiedMap& b) { return a.map == b.map; }
  friend auto operator<=>(const ClassifiedMap& a, const ClassifiedMap& b) { return a.map <=> b.map; }
};

/// Every line maps onto a line. Throws SizeMismatch.
bool is_collineation(const IncidencePlane& plane, const PointBijection& f);

/// A collineation with line(f(P), f(Q)) parallel to line(P, Q) for all P != Q.
/// Requires a verified plane; throws SizeMismatch.
bool is_dilation(const IncidencePlane& plane, const PointBijection& f);

std::vector<PointId> fixed_points(const PointBijection& f);

/// The identity, or a dilation without fixed points.
bool is_translation(const IncidencePlane& plane, const PointBijection& f);

/// Runs the predicates above and fills in fixed points and direction.
ClassifiedMap classify(const IncidencePlane& plane, PointBijection f);

/// Line through p and f(p); nullopt when p is fixed. Throws NotDilation.
std::optional<LineId> trace(const IncidencePlane& plane, const ClassifiedMap& f, PointId p);

/// Parallel class holding every trace of a translation; nullopt for the
/// identity. All traces are computed and compared.
/// Throws NotTranslation, or TraceClassMismatch if two traces disagree.
std::optional<DirectionId> direction(const IncidencePlane& plane, const ClassifiedMap& sigma);

/// Depth-first search over point images, pruned by requiring that
/// collinearity of every assigned triple is preserved in both directions.
/// Throws NotVerified, or OrderTooLarge when num_points > max_points.
std::vector<ClassifiedMap> enumerate_collineations(const IncidencePlane& plane,
                                                   std::size_t max_points = kDefaultMaxCollineationPoints);

/// Dilations by two-point determination: a dilation is fixed by the images
/// A', B' of two base points, and every other image is the meet of two
/// parallels through already known images. Each candidate is validated with
/// is_dilation. Output is sorted by image array.
/// Throws NotVerified, or OrderTooLarge when the plane's order exceeds
/// max_order.
std::vector<ClassifiedMap> enumerate_dilations(const IncidencePlane& plane, std::uint32_t max_order = 13);

/// Identity plus every fixed-point-free dilation, each tagged with its
/// direction. Sorted by image array, so the identity comes first.
std::vector<ClassifiedMap> enumerate_translations(const IncidencePlane& plane, std::uint32_t max_order = 13);

/// Filters a dilation list down to the translations.
std::vector<ClassifiedMap> select_translations(const IncidencePlane& plane, std::span<const ClassifiedMap> dilations);

/// Composites and inverses of listed maps stay in the list; the witness is
/// the offending pair (or single index for an inverse).
CheckResult check_composition_closed(std::span<const ClassifiedMap> maps);

/// A map in the list fixing two distinct points is the identity.
CheckResult check_two_fixed_points_identity(std::span<const ClassifiedMap> maps);

/// Every non-identity translation in the list has all of its traces in one
/// parallel class.
CheckResult check_traces_parallel(const IncidencePlane& plane, std::span<const ClassifiedMap> translations);

/// Number of points on a line of a verified plane.
std::uint32_t plane_order(const IncidencePlane& plane);

}  // namespace affine
