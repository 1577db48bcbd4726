#include "affine/report.hpp"

namespace affine {

namespace {

Json points_json(std::span<const PointId> pts) {
  auto arr = Json::array();
  for (PointId p : pts) arr.push_back(p.value);
  return arr;
}

Json optional_direction(const std::optional<DirectionId>& d) { return d ? Json(d->value) : Json(nullptr); }

}  // namespace

Json to_json(const AxiomOutcome& outcome) {
  Json j;
  j["passed"] = outcome.passed;
  if (outcome.passed) {
    if (!outcome.points.empty()) j["example"] = points_json(outcome.points);
    return j;
  }
  Json w;
  w["points"] = points_json(outcome.points);
  w["line"] = outcome.line ? Json(outcome.line->value) : Json(nullptr);
  w["count"] = outcome.count;
  w["detail"] = outcome.detail;
  j["witness"] = std::move(w);
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  j["A1_unique_join"] = to_json(report.unique_join);
  j["A2_unique_parallel"] = to_json(report.unique_parallel);
  j["A3_triangle"] = to_json(report.triangle);
  j["passed"] = report.all_passed();
  return j;
}

Json to_json(const CheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["passed"] = check.passed;
  j["cases"] = check.cases;
  if (!check.passed) {
    j["witness"] = check.witness;
    j["detail"] = check.detail;
  }
  return j;
}

Json to_json(const RingAxiomResult& result) {
  Json j;
  j["name"] = result.name;
  j["passed"] = result.passed;
  j["cases"] = result.cases;
  if (!result.passed) {
    Json w;
    w["endomorphisms"] = result.witness ? Json(result.witness->endos) : Json::array();
    w["translation"] =
        result.witness && result.witness->translation ? Json(*result.witness->translation) : Json(nullptr);
    j["witness"] = std::move(w);
    j["detail"] = result.detail;
  }
  return j;
}

Json to_json(const RingReport& report) {
  Json j;
  if (report.end_count) j["end_count"] = *report.end_count;
  j["tp_count"] = report.tp_count;
  auto axioms = Json::array();
  for (const auto& a : report.axioms) axioms.push_back(to_json(a));
  j["axioms"] = std::move(axioms);
  j["mul_commutative_probe"] = to_json(report.mul_commutative);
  j["passed"] = report.all_passed();
  return j;
}

Json to_json(const ModularComparison& cmp) {
  Json j;
  j["modulus"] = cmp.modulus;
  j["matches"] = cmp.matches;
  j["labels"] = cmp.labels;
  if (!cmp.matches) j["detail"] = cmp.detail;
  return j;
}

Json maps_json(std::span<const ClassifiedMap> maps) {
  auto arr = Json::array();
  for (const auto& m : maps) {
    auto img = Json::array();
    for (PointId p : m.map.image()) img.push_back(p.value);
    arr.push_back(std::move(img));
  }
  return arr;
}

Json tables_json(std::span<const GroupSelfMap> maps) {
  auto arr = Json::array();
  for (const auto& m : maps) arr.push_back(m.table);
  return arr;
}

Json group_json(const TranslationGroup& g) {
  Json j;
  j["order"] = g.order();
  j["elements"] = maps_json(g.elements);
  auto dirs = Json::array();
  for (const auto& d : g.direction_of) dirs.push_back(optional_direction(d));
  j["directions"] = std::move(dirs);
  j["inverse"] = g.inverse;
  auto rows = Json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto row = Json::array();
    for (std::size_t k = 0; k < g.order(); ++k) row.push_back(g.cayley(i, k));
    rows.push_back(std::move(row));
  }
  j["cayley"] = std::move(rows);
  return j;
}

Json plane_summary(const IncidencePlane& plane) {
  Json j;
  j["points"] = plane.num_points();
  j["lines"] = plane.num_lines();
  j["verified"] = plane.is_verified();
  if (plane.partition()) {
    j["order"] = plane.points_on(LineId(0u)).size();
    j["parallel_classes"] = plane.partition()->num_classes();
  }
  return j;
}

}  // namespace affine
