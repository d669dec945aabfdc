#ifndef ADMKIT_CONFIG_HPP
#define ADMKIT_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace admkit {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegionConfig {
  double r_in = 2.0;
  double r_out = 50.0;
  int samples = 200;
};

struct NumericsConfig {
  std::vector<double> radii = {16.0, 32.0, 64.0, 128.0, 256.0};
  int theta_nodes = 32;
  int phi_nodes = 64;
  double fd_step_rel = 1e-4;
  double marginal_tolerance = 1e-4;
  double conclusion_tolerance = 5e-3;
  std::string fit = "fixed";  // fixed | auto | richardson
  double fit_exponent = 1.0;
  std::string adm_measure = "euclidean";  // euclidean | induced
  int bulk_radial_nodes = 16;
  int threads = 1;
  RegionConfig region;
};

struct CheckConfig {
  std::string name;
  double r0 = 1.0;                                  // boundary / identity checks
  bool include_divergence = true;                   // dominant_charge_margin
  std::string index_convention = "contravariant";   // transform_residuals
  std::string field = "electric";                   // flux_charge
};

struct SceneConfig {
  std::string metric = "euclidean()";  // catalog reference
  // Alternative closed-form metric: six expressions g11,g12,g13,g22,g23,g33.
  std::vector<std::string> metric_components;
  double metric_inner_radius = 0.0;
  double metric_tau = 1.0;
  std::string conformal_exponent;  // expression or radial_conformal(a=.., tau=..)
  std::string electric = "none";   // none | catalog | coulomb(q0=..)
  std::vector<std::string> electric_components;  // three expressions
  std::string magnetic = "none";
  std::vector<std::string> magnetic_components;
  std::string scalar_field;  // expression or harmonic_hair(a=..)
};

struct OutputConfig {
  std::string report = "report.json";
  std::string csv;  // empty: no plot data
};

struct RunConfig {
  SceneConfig scene;
  std::vector<CheckConfig> checks;
  NumericsConfig numerics;
  OutputConfig output;
  std::uint64_t seed = 20260809ull;
};

// Parses and validates the JSON config surface. Unknown keys anywhere are
// rejected; every check name must be resolvable.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

bool known_check(const std::string& name);
const std::vector<std::string>& known_checks();

// Catalog reference syntax: name(k=v, ...) with numeric arguments.
struct CatalogRef {
  std::string name;
  std::vector<std::pair<std::string, double>> args;
  double arg(const std::string& key, double fallback) const;
  bool has(const std::string& key) const;
};
CatalogRef parse_catalog_ref(const std::string& text);

}  // namespace admkit

#endif  // ADMKIT_CONFIG_HPP
