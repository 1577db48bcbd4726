#include "affine/commands.hpp"

#include <optional>

#include "affine/error.hpp"
#include "affine/io.hpp"

namespace affine::cli {

namespace {

Json envelope(const char* command) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["plane_summary"] = nullptr;
  j["results"] = Json::object();
  j["status"] = "pass";
  return j;
}

void set_error(CommandResult& out, const std::string& message) {
  out.exit_code = kUsageError;
  out.report["status"] = "error";
  out.report["error"] = message;
  out.summary.push_back("error: " + message);
}

void set_outcome(CommandResult& out, bool passed) {
  out.exit_code = passed ? kPass : kCheckFailed;
  out.report["status"] = passed ? "pass" : "fail";
}

std::optional<LoadedPlane> load(const std::filesystem::path& path, CommandResult& out) {
  try {
    auto loaded = load_plane_file(path);
    if (!loaded.warnings.empty()) {
      out.report["warnings"] = loaded.warnings;
      for (const auto& w : loaded.warnings) out.summary.push_back("warning: " + w);
    }
    return loaded;
  } catch (const Error& e) {
    set_error(out, e.what());
    return std::nullopt;
  }
}

// Loads and verifies; on failure fills `out` and returns nullopt.
std::optional<LoadedPlane> load_verified(const std::filesystem::path& path, CommandResult& out) {
  auto loaded = load(path, out);
  if (!loaded) return std::nullopt;
  const auto axioms = verify_axioms(loaded->plane);
  out.report["plane_summary"] = plane_summary(loaded->plane);
  if (!axioms.all_passed()) {
    out.report["results"]["axioms"] = to_json(axioms);
    set_error(out, "input is not an affine plane; run `check` for the axiom report");
    return std::nullopt;
  }
  return loaded;
}

std::string pass_fail(bool passed) { return passed ? "pass" : "FAIL"; }

// Collects checks into a JSON array and tracks the conjunction.
class CheckLog {
 public:
  void add(const CheckResult& c) {
    passed_ = passed_ && c.passed;
    json_.push_back(to_json(c));
    lines_.push_back(c.name + ": " + pass_fail(c.passed) + " (" + std::to_string(c.cases) + " cases)" +
                     (c.passed ? "" : " - " + c.detail));
  }
  bool passed() const { return passed_; }
  Json json() const { return json_; }
  void drain_into(std::vector<std::string>& out) { out.insert(out.end(), lines_.begin(), lines_.end()); }

 private:
  bool passed_ = true;
  Json json_ = Json::array();
  std::vector<std::string> lines_;
};

CheckResult failed_build(const Error& e) {
  CheckResult c{.name = "group_axioms"};
  c.fail({}, e.what());
  return c;
}

}  // namespace

CommandResult run_build(std::uint32_t order, const Bounds& bounds) {
  CommandResult out;
  try {
    const auto plane = build_prime_plane(order, bounds.max_order);
    out.report = plane_document(plane);
    out.summary.push_back("built AG(2," + std::to_string(order) + "): " + std::to_string(plane.num_points()) +
                          " points, " + std::to_string(plane.num_lines()) + " lines");
  } catch (const Error& e) {
    out.report = envelope("build");
    set_error(out, e.what());
  }
  return out;
}

CommandResult run_check(const std::filesystem::path& plane_path) {
  CommandResult out;
  out.report = envelope("check");
  auto loaded = load(plane_path, out);
  if (!loaded) return out;
  const auto axioms = verify_axioms(loaded->plane);
  out.report["plane_summary"] = plane_summary(loaded->plane);
  out.report["results"]["axioms"] = to_json(axioms);
  out.summary.push_back("A.1 unique join: " + pass_fail(axioms.unique_join.passed));
  out.summary.push_back("A.2 unique parallel: " + pass_fail(axioms.unique_parallel.passed));
  out.summary.push_back("A.3 triangle: " + pass_fail(axioms.triangle.passed));
  set_outcome(out, axioms.all_passed());
  return out;
}

CommandResult run_groups(const std::filesystem::path& plane_path, GroupsOptions opts, const Bounds& bounds) {
  CommandResult out;
  out.report = envelope("groups");
  auto loaded = load_verified(plane_path, out);
  if (!loaded) return out;
  const auto& plane = loaded->plane;

  if (!opts.collineations && !opts.dilations && !opts.translations && !opts.check_abelian && !opts.check_normal &&
      !opts.check_directions) {
    opts.translations = true;
  }
  const bool need_dilations = opts.dilations || opts.check_normal || opts.check_directions;
  const bool need_group = opts.translations || opts.check_abelian || opts.check_normal || opts.check_directions;

  CheckLog checks;
  auto& results = out.report["results"];
  try {
    if (opts.collineations) {
      const auto cols = enumerate_collineations(plane, bounds.max_points);
      results["collineations"] = {{"count", cols.size()}, {"maps", maps_json(cols)}};
      out.summary.push_back("collineations: " + std::to_string(cols.size()));
      auto closed = check_composition_closed(cols);
      closed.name = "collineations_form_group";
      checks.add(closed);
    }

    std::vector<ClassifiedMap> dilations;
    if (need_dilations) {
      dilations = enumerate_dilations(plane, bounds.max_order);
      results["dilations"] = {{"count", dilations.size()}, {"maps", maps_json(dilations)}};
      out.summary.push_back("dilations: " + std::to_string(dilations.size()));
      auto closed = check_composition_closed(dilations);
      closed.name = "dilations_form_group";
      checks.add(closed);
      checks.add(check_two_fixed_points_identity(dilations));
    }

    if (need_group) {
      auto translations =
          need_dilations ? select_translations(plane, dilations) : enumerate_translations(plane, bounds.max_order);
      checks.add(check_traces_parallel(plane, translations));
      std::optional<TranslationGroup> group;
      try {
        group = build_group(plane, std::move(translations));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotClosed && e.code() != ErrorCode::MissingIdentity) throw;
        checks.add(failed_build(e));
      }
      if (group) {
        out.summary.push_back("translations: " + std::to_string(group->order()));
        Json tr = {{"count", group->order()}};
        if (opts.translations) {
          tr["group"] = group_json(*group);
          tr["generators"] = generators(*group);
        }
        results["translations"] = std::move(tr);
        checks.add(check_group_axioms(*group));
        if (opts.check_abelian) checks.add(check_abelian(*group));
        if (opts.check_normal) {
          checks.add(check_normal_in_dilations(*group, dilations));
          checks.add(check_conjugation_permutes(*group, dilations));
        }
        if (opts.check_directions) {
          checks.add(check_composition_direction(*group));
          checks.add(check_conjugation_direction(*group, dilations));
        }
      }
    }
  } catch (const Error& e) {
    set_error(out, e.what());
    return out;
  }

  results["checks"] = checks.json();
  checks.drain_into(out.summary);
  set_outcome(out, checks.passed());
  return out;
}

CommandResult run_endo(const std::filesystem::path& plane_path, EndoOptions opts, const Bounds& bounds) {
  CommandResult out;
  out.report = envelope("endo");
  auto loaded = load_verified(plane_path, out);
  if (!loaded) return out;
  const auto& plane = loaded->plane;
  auto& results = out.report["results"];

  bool passed = true;
  try {
    const auto group = build_group(plane, enumerate_translations(plane, bounds.max_order));
    results["translation_count"] = group.order();
    const auto endos = enumerate_endomorphisms(group, bounds.max_group);
    results["endomorphisms"] = {{"count", endos.size()}};
    if (opts.dump) results["endomorphisms"]["tables"] = tables_json(endos);
    out.summary.push_back("|End| = " + std::to_string(endos.size()));

    if (opts.trace_preserving || opts.check_ring) {
      const auto tp = select_trace_preserving(group, endos);
      results["trace_preserving"] = {{"count", tp.size()}};
      if (opts.dump) results["trace_preserving"]["tables"] = tables_json(tp);
      out.summary.push_back("|End^TP| = " + std::to_string(tp.size()));

      if (opts.check_ring) {
        const auto ring = check_ring_axioms(group, tp, endos.size());
        results["ring"] = to_json(ring);
        results["integers_mod_p"] = to_json(compare_with_integers_mod(group, tp));
        for (const auto& a : ring.axioms) out.summary.push_back(a.name + ": " + pass_fail(a.passed));
        out.summary.push_back("ring: " + pass_fail(ring.all_passed()));
        passed = ring.all_passed();
      }
    }
  } catch (const Error& e) {
    set_error(out, e.what());
    return out;
  }
  set_outcome(out, passed);
  return out;
}

CommandResult run_verify_all(const std::filesystem::path& plane_path, const Bounds& bounds) {
  CommandResult out;
  out.report = envelope("verify-all");
  auto& results = out.report["results"];
  results["stages"] = Json::array();
  results["claims"] = Json::array();

  bool all = true;
  auto stage = [&](const char* name, bool ok) {
    results["stages"].push_back({{"stage", name}, {"passed", ok}});
    out.summary.push_back(std::string("stage ") + name + ": " + pass_fail(ok));
    all = all && ok;
  };
  auto claim = [&](const char* id, const char* statement, const CheckResult& c) {
    Json j = {{"id", id}, {"claim", statement}};
    j["check"] = to_json(c);
    results["claims"].push_back(std::move(j));
    out.summary.push_back(std::string("  ") + id + ": " + pass_fail(c.passed));
    return c.passed;
  };

  auto loaded = load(plane_path, out);
  if (!loaded) return out;
  auto& plane = loaded->plane;
  const auto axioms = verify_axioms(plane);
  out.report["plane_summary"] = plane_summary(plane);
  results["axioms"] = to_json(axioms);
  CheckResult axiom_check{.name = "axioms", .cases = 3};
  for (const auto* a : {&axioms.unique_join, &axioms.unique_parallel, &axioms.triangle}) {
    if (!a->passed && axiom_check.passed) axiom_check.fail({}, a->detail);
  }
  claim("incidence_axioms", "unique join, unique parallel and a triangle", axiom_check);
  stage("axioms", axioms.all_passed());
  if (!axioms.all_passed()) {
    set_outcome(out, false);
    return out;
  }

  try {
    // Dilations and translations.
    const auto dilations = enumerate_dilations(plane, bounds.max_order);
    const auto translations = select_translations(plane, dilations);
    results["counts"] = {{"dilations", dilations.size()}, {"translations", translations.size()}};
    bool ok = true;
    auto closed = check_composition_closed(dilations);
    ok &= claim("dilation_group", "dilations form a group under composition", closed);
    ok &= claim("dilation_two_fixed_points", "a dilation with two fixed points is the identity",
                check_two_fixed_points_identity(dilations));
    ok &= claim("translation_traces", "all traces of a non-identity translation are parallel",
                check_traces_parallel(plane, translations));

    std::optional<TranslationGroup> group;
    try {
      group = build_group(plane, translations);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotClosed && e.code() != ErrorCode::MissingIdentity) throw;
      ok &= claim("translation_group", "translations form a group under composition", failed_build(e));
    }
    if (group) {
      ok &= claim("translation_group", "translations form a group under composition", check_group_axioms(*group));
      ok &= claim("translation_abelian", "the translation group is commutative", check_abelian(*group));
      ok &= claim("translation_normal", "translations form a normal subgroup of the dilations",
                  check_normal_in_dilations(*group, dilations));
      ok &= claim("conjugation_direction", "a translation and its conjugate by a dilation share a direction",
                  check_conjugation_direction(*group, dilations));
      ok &= claim("composition_direction", "composing translations of one direction keeps that direction",
                  check_composition_direction(*group));
    }
    stage("groups", ok);
    if (!group) {
      set_outcome(out, false);
      return out;
    }

    // Endomorphisms.
    const auto endos = enumerate_endomorphisms(*group, bounds.max_group);
    const auto tp = select_trace_preserving(*group, endos);
    results["counts"]["endomorphisms"] = endos.size();
    results["counts"]["trace_preserving"] = tp.size();
    ok = true;
    ok &= claim("endomorphism_sum", "the sum of two endomorphisms is an endomorphism",
                check_endomorphism_closure(*group, endos, SelfMapOp::Add));
    ok &= claim("endomorphism_composite", "the composite of two endomorphisms is an endomorphism",
                check_endomorphism_closure(*group, endos, SelfMapOp::Compose));

    const std::vector<GroupSelfMap> distinguished = {zero_endo(*group), unit_endo(*group), inversion_endo(*group)};
    CheckResult special{.name = "distinguished_endomorphisms"};
    for (std::size_t i = 0; i < distinguished.size(); ++i) {
      ++special.cases;
      auto probe = GroupSelfMap(distinguished[i].table);
      classify(*group, probe);
      if (!*probe.endomorphism || !*probe.trace_preserving) {
        special.fail({i}, "zero, unit or inversion map is not a trace-preserving endomorphism");
        break;
      }
    }
    ok &= claim("distinguished_trace_preserving", "zero, unit and inversion are trace-preserving endomorphisms",
                special);
    ok &= claim("trace_preserving_sum", "the sum of trace-preserving endomorphisms is trace-preserving",
                check_trace_preserving_closure(*group, tp, SelfMapOp::Add));
    ok &= claim("trace_preserving_composite", "the composite of trace-preserving endomorphisms is trace-preserving",
                check_trace_preserving_closure(*group, tp, SelfMapOp::Compose));
    ok &= claim("endomorphism_identities", "a + 0 = a, a + (-a) = 0, a o 1 = a, -a = phi o a, phi o phi = 1",
                check_identities(*group, endos));
    stage("endomorphisms", ok);

    // Ring.
    const auto ring = check_ring_axioms(*group, tp, endos.size());
    results["ring"] = to_json(ring);
    auto ring_check = [&](std::initializer_list<const char*> names, const char* name) {
      CheckResult c{.name = name};
      for (const char* n : names) {
        const auto& a = ring.at(n);
        c.cases += a.cases;
        if (!a.passed && c.passed) {
          c.fail(a.witness ? a.witness->endos : std::vector<std::size_t>{}, a.name + ": " + a.detail);
        }
      }
      return c;
    };
    ok = true;
    ok &= claim("tp_additive_group", "trace-preserving endomorphisms form a commutative group under addition",
                ring_check({"add_closure", "add_associative", "add_identity", "add_inverses", "add_commutative"},
                           "additive_group"));
    ok &= claim("tp_unitary_ring", "trace-preserving endomorphisms form an associative unitary ring",
                ring_check({"add_closure", "add_associative", "add_identity", "add_inverses", "add_commutative",
                            "mul_closure", "mul_associative", "left_distributive", "right_distributive",
                            "mul_identity"},
                           "unitary_ring"));
    results["observations"] = {{"mul_commutative", to_json(ring.mul_commutative)},
                               {"integers_mod_p", to_json(compare_with_integers_mod(*group, tp))}};
    stage("ring", ok);
  } catch (const Error& e) {
    set_error(out, e.what());
    return out;
  }

  set_outcome(out, all);
  return out;
}

}  // namespace affine::cli
