#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "affine/builder.hpp"
#include "affine/collineation.hpp"
#include "affine/endo.hpp"
#include "affine/report.hpp"

namespace affine::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct Bounds {
  std::uint32_t max_order = kDefaultMaxOrder;
  std::size_t max_group = kDefaultMaxGroupOrder;
  std::size_t max_points = kDefaultMaxCollineationPoints;
};

/// Exit code, the structured report, and human-readable summary lines.
struct CommandResult {
  int exit_code = kPass;
  Json report;
  std::vector<std::string> summary;
};

struct GroupsOptions {
  bool collineations = false;
  bool dilations = false;
  bool translations = false;
  bool check_abelian = false;
  bool check_normal = false;
  bool check_directions = false;
};

struct EndoOptions {
  bool trace_preserving = false;
  bool check_ring = false;
  bool dump = false;
};

/// On success the report is the incidence document of AG(2, order).
CommandResult run_build(std::uint32_t order, const Bounds& bounds = {});
CommandResult run_check(const std::filesystem::path& plane_path);
CommandResult run_groups(const std::filesystem::path& plane_path, GroupsOptions opts, const Bounds& bounds = {});
CommandResult run_endo(const std::filesystem::path& plane_path, EndoOptions opts, const Bounds& bounds = {});
/// Axioms, dilation and translation groups, endomorphisms and the ring, in
/// dependency order, with one entry per verified claim.
CommandResult run_verify_all(const std::filesystem::path& plane_path, const Bounds& bounds = {});

}  // namespace affine::cli
