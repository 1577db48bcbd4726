#include "affine/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "affine/disjoint_set.hpp"
#include "affine/error.hpp"

namespace affine {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NotVerified: return "NotVerified";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::MultipleJoins: return "MultipleJoins";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotDilation: return "NotDilation";
    case ErrorCode::NotTranslation: return "NotTranslation";
    case ErrorCode::TraceClassMismatch: return "TraceClassMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
  }
  return "Unknown";
}

IncidencePlane::IncidencePlane(std::size_t num_points, std::vector<std::vector<PointId>> lines)
    : num_points_(num_points), lines_(std::move(lines)), lines_through_(num_points) {
  std::set<std::vector<PointId>> seen;
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto& line = lines_[l];
    std::sort(line.begin(), line.end());
    if (line.size() < 2) {
      throw Error(ErrorCode::MalformedDocument,
                  "line " + std::to_string(l) + " has fewer than two points");
    }
    if (line.back().get() >= num_points_) {
      throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(l) + " references point " +
                                                    std::to_string(line.back().value) + " >= " +
                                                    std::to_string(num_points_));
    }
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(l) + " repeats a point");
    }
    if (!seen.insert(line).second) {
      throw Error(ErrorCode::MalformedDocument, "duplicate line at index " + std::to_string(l));
    }
  }

  const std::size_t n = num_points_;
  const std::size_t m = lines_.size();
  incidence_.assign(n * m, 0);
  join_.assign(n * n, kNoJoin);
  for (std::size_t l = 0; l < m; ++l) {
    const auto& line = lines_[l];
    for (PointId p : line) {
      incidence_[p.get() * m + l] = 1;
      lines_through_[p.get()].push_back(LineId(l));
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        for (auto idx : {line[i].get() * n + line[j].get(), line[j].get() * n + line[i].get()}) {
          join_[idx] = join_[idx] == kNoJoin ? static_cast<std::int32_t>(l) : kManyJoins;
        }
      }
    }
  }
}

std::size_t IncidencePlane::join_count(PointId p, PointId q) const {
  const auto j = join_[p.get() * num_points_ + q.get()];
  if (j == kNoJoin) return 0;
  if (j == kManyJoins) return 2;
  return 1;
}

std::optional<LineId> IncidencePlane::unique_join(PointId p, PointId q) const {
  const auto j = join_[p.get() * num_points_ + q.get()];
  if (j < 0) return std::nullopt;
  return LineId(static_cast<std::uint32_t>(j));
}

void IncidencePlane::require_verified(const char* operation) const {
  if (status_ != AxiomStatus::Verified) {
    throw Error(ErrorCode::NotVerified, std::string(operation) + " requires a verified affine plane");
  }
}

namespace {

bool disjoint(const IncidencePlane& plane, LineId l, LineId m) {
  for (PointId p : plane.points_on(l)) {
    if (plane.incident(p, m)) return false;
  }
  return true;
}

AxiomOutcome check_unique_join(const IncidencePlane& plane) {
  AxiomOutcome out;
  const std::size_t n = plane.num_points();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const auto count = plane.join_count(PointId(p), PointId(q));
      if (count != 1) {
        out.points = {PointId(p), PointId(q)};
        out.count = count;
        out.detail = count == 0 ? "points have no joining line" : "points have more than one joining line";
        return out;
      }
    }
  }
  out.passed = true;
  return out;
}

AxiomOutcome check_unique_parallel(const IncidencePlane& plane) {
  AxiomOutcome out;
  for (std::size_t p = 0; p < plane.num_points(); ++p) {
    const PointId point(p);
    for (std::size_t l = 0; l < plane.num_lines(); ++l) {
      const LineId line(l);
      if (plane.incident(point, line)) continue;
      std::size_t count = 0;
      for (LineId r : plane.lines_through(point)) {
        if (disjoint(plane, r, line)) ++count;
      }
      if (count != 1) {
        out.points = {point};
        out.line = line;
        out.count = count;
        out.detail = count == 0 ? "no line through the point misses the line"
                                : "several lines through the point miss the line";
        return out;
      }
    }
  }
  out.passed = true;
  return out;
}

bool collinear(const IncidencePlane& plane, PointId a, PointId b, PointId c) {
  for (LineId l : plane.lines_through(a)) {
    if (plane.incident(b, l) && plane.incident(c, l)) return true;
  }
  return false;
}

AxiomOutcome check_triangle(const IncidencePlane& plane) {
  AxiomOutcome out;
  const std::size_t n = plane.num_points();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!collinear(plane, PointId(a), PointId(b), PointId(c))) {
          out.passed = true;
          out.points = {PointId(a), PointId(b), PointId(c)};
          return out;
        }
      }
    }
  }
  out.count = n;
  out.detail = n < 3 ? "fewer than three points" : "every triple of points is collinear";
  return out;
}

}  // namespace

AxiomReport check_axioms(const IncidencePlane& plane) {
  return AxiomReport{check_unique_join(plane), check_unique_parallel(plane), check_triangle(plane)};
}

AxiomReport verify_axioms(IncidencePlane& plane) {
  auto report = check_axioms(plane);
  if (report.all_passed()) {
    plane.partition_ = compute_parallel_partition(plane);
    plane.status_ = AxiomStatus::Verified;
  } else {
    plane.partition_.reset();
    plane.status_ = AxiomStatus::Failed;
  }
  return report;
}

LineId line_through(const IncidencePlane& plane, PointId p, PointId q) {
  if (p == q) throw Error(ErrorCode::SamePoint, "line_through needs two distinct points");
  if (auto l = plane.unique_join(p, q)) return *l;
  std::ostringstream os;
  os << "points " << p << " and " << q;
  if (plane.join_count(p, q) == 0) throw Error(ErrorCode::NoJoin, os.str() + " have no joining line");
  throw Error(ErrorCode::MultipleJoins, os.str() + " lie on several lines");
}

bool parallel(const IncidencePlane& plane, LineId l, LineId m) {
  return l == m || disjoint(plane, l, m);
}

LineId parallel_through_point(const IncidencePlane& plane, LineId l, PointId p) {
  plane.require_verified("parallel_through_point");
  if (plane.incident(p, l)) return l;
  for (LineId r : plane.lines_through(p)) {
    if (disjoint(plane, r, l)) return r;
  }
  // Unreachable on a plane satisfying A.2.
  throw Error(ErrorCode::NotVerified, "no parallel found through point");
}

DirectionPartition compute_parallel_partition(const IncidencePlane& plane) {
  const std::size_t m = plane.num_lines();
  DisjointSet sets(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (parallel(plane, LineId(a), LineId(b))) sets.unite(a, b);
    }
  }

  DirectionPartition part;
  part.class_of.resize(m);
  std::vector<std::int64_t> class_of_root(m, -1);
  for (std::size_t l = 0; l < m; ++l) {
    const auto root = sets.find(l);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(part.classes.size());
      part.classes.emplace_back();
    }
    const auto cls = static_cast<std::size_t>(class_of_root[root]);
    part.class_of[l] = DirectionId(cls);
    part.classes[cls].push_back(LineId(l));
  }

  for (const auto& cls : part.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!parallel(plane, cls[i], cls[j])) {
          std::ostringstream os;
          os << "lines " << cls[i] << " and " << cls[j]
             << " share a parallel class but meet; parallelism is not transitive";
          throw Error(ErrorCode::NotEquivalence, os.str());
        }
      }
    }
  }
  return part;
}

DirectionPartition parallel_partition(const IncidencePlane& plane) {
  plane.require_verified("parallel_partition");
  return *plane.partition();
}

DirectionId direction_of_join(const IncidencePlane& plane, PointId p, PointId q) {
  plane.require_verified("direction_of_join");
  return (*plane.partition())[line_through(plane, p, q)];
}

}  // namespace affine
