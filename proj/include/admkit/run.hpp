#ifndef ADMKIT_RUN_HPP
#define ADMKIT_RUN_HPP

#include <optional>
#include <string>

#include "admkit/catalog.hpp"
#include "admkit/config.hpp"
#include "admkit/report.hpp"

namespace admkit {

// A fully built scene: the metric plus whatever fields the config attached.
struct Scene {
  MetricField metric;
  std::optional<CatalogEntry> entry;  // set when the metric is a catalog member
  ScalarField conformal_exponent = ScalarField::constant(0.0);
  bool has_conformal = false;
  VectorField electric;
  bool has_electric = false;
  VectorField magnetic;
  bool has_magnetic = false;
  ScalarField scalar_field = ScalarField::constant(1.0);
  bool has_scalar = false;
};

Scene build_scene(const SceneConfig& config);

struct RunResult {
  int status = 0;  // 0 ok, 1 FLAG classification, 3 numerical failure
  JsonValue report = JsonValue::object();
  std::vector<CsvRow> csv_rows;
  std::string report_path;
  std::string csv_path;
};

// Executes every configured check, assembles the JSON report (and CSV plot
// rows when requested) and writes both under out_dir. Numerical failures in a
// check abort that check only; the partial report is still written.
RunResult run(const RunConfig& config, const std::string& out_dir);

}  // namespace admkit

#endif  // ADMKIT_RUN_HPP
