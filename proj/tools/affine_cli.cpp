// Command-line front end: the report goes to stdout (or --out), the summary
// to stderr.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "affine/commands.hpp"

namespace {

using affine::cli::Bounds;
using affine::cli::CommandResult;

// Default bounds may come from the environment; explicit flags win.
template <class T>
void env_default(T& value, const char* name) {
  if (const char* s = std::getenv(name)) {
    try {
      value = static_cast<T>(std::stoull(s));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring " << name << "=" << s << "\n";
    }
  }
}

int emit(const CommandResult& r, const std::string& out_path) {
  for (const auto& line : r.summary) std::cerr << line << "\n";
  const std::string text = r.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return affine::cli::kUsageError;
    }
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  Bounds bounds;
  env_default(bounds.max_order, "AFFINE_MAX_ORDER");
  env_default(bounds.max_group, "AFFINE_MAX_GROUP");
  env_default(bounds.max_points, "AFFINE_MAX_POINTS");

  CLI::App app{"Finite affine planes: axioms, dilations, translations and endomorphisms"};
  app.set_version_flag("--version", std::string(affine::cli::kToolVersion));
  app.require_subcommand(1);

  std::string out_path;
  std::string plane_path;
  auto add_common = [&](CLI::App* sub, bool takes_plane) {
    if (takes_plane) sub->add_option("plane", plane_path, "Incidence document (JSON)")->required();
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_option("--max-order", bounds.max_order, "Largest plane order to enumerate");
    sub->add_option("--max-group", bounds.max_group, "Largest translation group for endomorphisms");
    sub->add_option("--max-points", bounds.max_points, "Largest plane for the collineation search");
  };

  std::uint32_t order = 0;
  auto* build = app.add_subcommand("build", "Write the incidence document of AG(2, p)");
  build->add_option("--order", order, "Prime order p")->required();
  add_common(build, false);

  auto* check = app.add_subcommand("check", "Check the affine plane axioms");
  add_common(check, true);

  affine::cli::GroupsOptions gopts;
  auto* groups = app.add_subcommand("groups", "Enumerate dilations and translations and check group theorems");
  add_common(groups, true);
  groups->add_flag("--collineations", gopts.collineations, "Enumerate all collineations");
  groups->add_flag("--dilations", gopts.dilations, "Enumerate dilations");
  groups->add_flag("--translations", gopts.translations, "Enumerate translations and the Cayley table");
  groups->add_flag("--check-abelian", gopts.check_abelian, "Check that translations commute");
  groups->add_flag("--check-normal", gopts.check_normal, "Check normality in the dilation group");
  groups->add_flag("--check-directions", gopts.check_directions, "Check direction rules");

  affine::cli::EndoOptions eopts;
  auto* endo = app.add_subcommand("endo", "Enumerate endomorphisms of the translation group");
  add_common(endo, true);
  endo->add_flag("--trace-preserving", eopts.trace_preserving, "Also select the trace-preserving ones");
  endo->add_flag("--check-ring", eopts.check_ring, "Verify the ring axioms on trace-preserving endomorphisms");
  endo->add_flag("--dump", eopts.dump, "Include the index tables");

  auto* verify = app.add_subcommand("verify-all", "Run every check in dependency order");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : affine::cli::kUsageError;
  }

  CommandResult r;
  if (*build) {
    r = affine::cli::run_build(order, bounds);
  } else if (*check) {
    r = affine::cli::run_check(plane_path);
  } else if (*groups) {
    r = affine::cli::run_groups(plane_path, gopts, bounds);
  } else if (*endo) {
    r = affine::cli::run_endo(plane_path, eopts, bounds);
  } else {
    r = affine::cli::run_verify_all(plane_path, bounds);
  }
  return emit(r, out_path);
}
