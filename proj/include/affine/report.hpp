#pragma once

#include <span>

#include <nlohmann/json.hpp>

#include "affine/endo.hpp"
#include "affine/incidence.hpp"
#include "affine/transgroup.hpp"

namespace affine {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "affine-report/1";

Json to_json(const AxiomOutcome& outcome);
Json to_json(const AxiomReport& report);
Json to_json(const CheckResult& check);
Json to_json(const RingAxiomResult& result);
Json to_json(const RingReport& report);
Json to_json(const ModularComparison& cmp);

/// Image array of each map.
Json maps_json(std::span<const ClassifiedMap> maps);
Json tables_json(std::span<const GroupSelfMap> maps);

/// Elements, directions, inverses and Cayley table.
Json group_json(const TranslationGroup& g);

Json plane_summary(const IncidencePlane& plane);

}  // namespace affine
