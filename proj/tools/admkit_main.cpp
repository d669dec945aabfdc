// Command-line front end: validates a run config, executes the requested
// checks and writes the JSON report (plus optional CSV plot data).

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "admkit/catalog.hpp"
#include "admkit/run.hpp"
#include "admkit/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Flux-integral diagnostics for asymptotically flat charged 3-manifolds"};
  app.set_version_flag("--version", admkit::kVersion);

  bool list_catalog = false;
  bool print_schema = false;
  app.add_flag("--list-catalog", list_catalog, "list the built-in exact solutions");
  app.add_flag("--schema", print_schema, "print the report JSON schema");

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed_override = 0;
  bool seed_given = false;
  CLI::App* run_cmd = app.add_subcommand("run", "execute the checks in a config file");
  run_cmd->add_option("config", config_path, "path to the JSON run config")->required();
  run_cmd->add_option("--out", out_dir, "output directory for report artifacts");
  run_cmd->add_option("--seed", seed_override, "override the config seed")
      ->each([&](const std::string&) { seed_given = true; });

  CLI11_PARSE(app, argc, argv);

  if (list_catalog) {
    for (const auto& signature : admkit::catalog_signatures()) {
      std::cout << signature << "\n";
    }
    return 0;
  }
  if (print_schema) {
    std::cout << admkit::report_schema_text();
    return 0;
  }
  if (!run_cmd->parsed()) {
    std::cout << app.help();
    return 0;
  }

  admkit::RunConfig config;
  try {
    config = admkit::load_config_file(config_path);
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
  if (seed_given) config.seed = seed_override;

  try {
    const admkit::RunResult result = admkit::run(config, out_dir);
    std::cerr << "report: " << result.report_path << "\n";
    if (!result.csv_path.empty()) std::cerr << "csv: " << result.csv_path << "\n";
    return result.status;
  } catch (const std::exception& err) {
    std::cerr << "run failed: " << err.what() << "\n";
    return 3;
  }
}
