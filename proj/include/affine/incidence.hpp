#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affine/ids.hpp"

namespace affine {

/// Lines grouped into parallel classes. `class_of` is indexed by line id.
struct DirectionPartition {
  std::vector<DirectionId> class_of;
  std::vector<std::vector<LineId>> classes;

  std::size_t num_classes() const noexcept { return classes.size(); }
  DirectionId operator[](LineId l) const { return class_of[l.get()]; }
};

/// Outcome of a single incidence axiom. On failure the witness fields say
/// which configuration broke it; `count` is the number of joining lines (A.1)
/// or parallels (A.2) that were found instead of exactly one.
struct AxiomOutcome {
  bool passed = false;
  std::vector<PointId> points;
  std::optional<LineId> line;
  std::size_t count = 0;
  std::string detail;
};

struct AxiomReport {
  AxiomOutcome unique_join;       // A.1
  AxiomOutcome unique_parallel;   // A.2
  AxiomOutcome triangle;          // A.3

  bool all_passed() const noexcept {
    return unique_join.passed && unique_parallel.passed && triangle.passed;
  }
};

enum class AxiomStatus { Unchecked, Verified, Failed };

/// A finite point/line incidence structure. Lines are stored as sorted point
/// sets in input order. The structure is immutable once verify_axioms has
/// run on it.
class IncidencePlane {
 public:
  /// Throws Error(MalformedDocument) on out-of-range points, repeated points
  /// within a line, lines with fewer than two points, or duplicate lines.
  IncidencePlane(std::size_t num_points, std::vector<std::vector<PointId>> lines);

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }

  std::span<const PointId> points_on(LineId l) const { return lines_[l.get()]; }
  std::span<const LineId> lines_through(PointId p) const { return lines_through_[p.get()]; }
  const std::vector<std::vector<PointId>>& lines() const noexcept { return lines_; }

  bool incident(PointId p, LineId l) const { return incidence_[p.get() * lines_.size() + l.get()] != 0; }

  /// Number of lines containing both points, saturated at 2.
  std::size_t join_count(PointId p, PointId q) const;

  /// The joining line when exactly one exists.
  std::optional<LineId> unique_join(PointId p, PointId q) const;

  AxiomStatus axiom_status() const noexcept { return status_; }
  bool is_verified() const noexcept { return status_ == AxiomStatus::Verified; }

  /// Present once the plane has been verified.
  const std::optional<DirectionPartition>& partition() const noexcept { return partition_; }

  /// Throws Error(NotVerified) unless the axioms have been verified.
  void require_verified(const char* operation) const;

 private:
  friend AxiomReport verify_axioms(IncidencePlane& plane);

  static constexpr std::int32_t kNoJoin = -1;
  static constexpr std::int32_t kManyJoins = -2;

  std::size_t num_points_;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> lines_through_;
  std::vector<std::uint8_t> incidence_;  // row-major points x lines
  std::vector<std::int32_t> join_;       // row-major points x points
  AxiomStatus status_ = AxiomStatus::Unchecked;
  std::optional<DirectionPartition> partition_;
};

/// Runs all three axioms exhaustively without touching the plane.
AxiomReport check_axioms(const IncidencePlane& plane);

/// Runs check_axioms, records the status on the plane and, when every axiom
/// holds, caches the parallel partition.
AxiomReport verify_axioms(IncidencePlane& plane);

/// Throws SamePoint, NoJoin or MultipleJoins.
LineId line_through(const IncidencePlane& plane, PointId p, PointId q);

/// Equal lines or lines without a common point.
bool parallel(const IncidencePlane& plane, LineId l, LineId m);

/// The line through p that is parallel to l. Requires a verified plane.
LineId parallel_through_point(const IncidencePlane& plane, LineId l, PointId p);

/// Union-find over the disjointness relation, audited for transitivity.
/// Throws NotEquivalence if two lines land in one class without being
/// parallel. Requires a verified plane.
DirectionPartition parallel_partition(const IncidencePlane& plane);

/// The partition computation without the verified-plane precondition; used by
/// verify_axioms itself and by tests on malformed structures.
DirectionPartition compute_parallel_partition(const IncidencePlane& plane);

/// Direction class of the line through two distinct points.
DirectionId direction_of_join(const IncidencePlane& plane, PointId p, PointId q);

}  // namespace affine
