#include "admkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace admkit {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
    }
  }
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError("config: " + where + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError("config: " + where + " must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError("config: " + where + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> as_string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError("config: " + where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(as_string(e, where + " entry"));
  return out;
}

void parse_scene(const json& j, SceneConfig& scene) {
  require_keys(j,
               {"metric", "metric_components", "metric_inner_radius", "metric_tau",
                "conformal_exponent", "electric", "electric_components", "magnetic",
                "magnetic_components", "scalar_field"},
               "scene");
  if (j.contains("metric")) scene.metric = as_string(j["metric"], "scene.metric");
  if (j.contains("metric_components")) {
    scene.metric_components = as_string_list(j["metric_components"], "scene.metric_components");
    if (scene.metric_components.size() != 6) {
      throw ConfigError("config: scene.metric_components needs exactly 6 expressions");
    }
  }
  if (j.contains("metric_inner_radius")) {
    scene.metric_inner_radius = as_number(j["metric_inner_radius"], "scene.metric_inner_radius");
  }
  if (j.contains("metric_tau")) scene.metric_tau = as_number(j["metric_tau"], "scene.metric_tau");
  if (j.contains("conformal_exponent")) {
    scene.conformal_exponent = as_string(j["conformal_exponent"], "scene.conformal_exponent");
  }
  if (j.contains("electric")) scene.electric = as_string(j["electric"], "scene.electric");
  if (j.contains("electric_components")) {
    scene.electric_components = as_string_list(j["electric_components"], "scene.electric_components");
    if (scene.electric_components.size() != 3) {
      throw ConfigError("config: scene.electric_components needs exactly 3 expressions");
    }
  }
  if (j.contains("magnetic")) scene.magnetic = as_string(j["magnetic"], "scene.magnetic");
  if (j.contains("magnetic_components")) {
    scene.magnetic_components = as_string_list(j["magnetic_components"], "scene.magnetic_components");
    if (scene.magnetic_components.size() != 3) {
      throw ConfigError("config: scene.magnetic_components needs exactly 3 expressions");
    }
  }
  if (j.contains("scalar_field")) {
    scene.scalar_field = as_string(j["scalar_field"], "scene.scalar_field");
  }
}

void parse_numerics(const json& j, NumericsConfig& num) {
  require_keys(j,
               {"radii", "theta_nodes", "phi_nodes", "fd_step_rel", "marginal_tolerance",
                "conclusion_tolerance", "fit", "fit_exponent", "adm_measure",
                "bulk_radial_nodes", "threads", "region"},
               "numerics");
  if (j.contains("radii")) {
    if (!j["radii"].is_array()) throw ConfigError("config: numerics.radii must be an array");
    num.radii.clear();
    for (const auto& e : j["radii"]) num.radii.push_back(as_number(e, "numerics.radii entry"));
    if (num.radii.size() < 3) throw ConfigError("config: numerics.radii needs at least 3 entries");
    if (!std::is_sorted(num.radii.begin(), num.radii.end(),
                        [](double a, double b) { return a <= b; })) {
      throw ConfigError("config: numerics.radii must be strictly increasing");
    }
  }
  if (j.contains("theta_nodes")) num.theta_nodes = as_int(j["theta_nodes"], "numerics.theta_nodes");
  if (j.contains("phi_nodes")) num.phi_nodes = as_int(j["phi_nodes"], "numerics.phi_nodes");
  if (j.contains("fd_step_rel")) num.fd_step_rel = as_number(j["fd_step_rel"], "numerics.fd_step_rel");
  if (j.contains("marginal_tolerance")) {
    num.marginal_tolerance = as_number(j["marginal_tolerance"], "numerics.marginal_tolerance");
  }
  if (j.contains("conclusion_tolerance")) {
    num.conclusion_tolerance = as_number(j["conclusion_tolerance"], "numerics.conclusion_tolerance");
  }
  if (j.contains("fit")) {
    num.fit = as_string(j["fit"], "numerics.fit");
    if (num.fit != "fixed" && num.fit != "auto" && num.fit != "richardson") {
      throw ConfigError("config: numerics.fit must be fixed, auto or richardson");
    }
  }
  if (j.contains("fit_exponent")) num.fit_exponent = as_number(j["fit_exponent"], "numerics.fit_exponent");
  if (j.contains("adm_measure")) {
    num.adm_measure = as_string(j["adm_measure"], "numerics.adm_measure");
    if (num.adm_measure != "euclidean" && num.adm_measure != "induced") {
      throw ConfigError("config: numerics.adm_measure must be euclidean or induced");
    }
  }
  if (j.contains("bulk_radial_nodes")) {
    num.bulk_radial_nodes = as_int(j["bulk_radial_nodes"], "numerics.bulk_radial_nodes");
  }
  if (j.contains("threads")) {
    num.threads = as_int(j["threads"], "numerics.threads");
    if (num.threads < 1) throw ConfigError("config: numerics.threads must be >= 1");
  }
  if (j.contains("region")) {
    const json& r = j["region"];
    require_keys(r, {"r_in", "r_out", "samples"}, "numerics.region");
    if (r.contains("r_in")) num.region.r_in = as_number(r["r_in"], "region.r_in");
    if (r.contains("r_out")) num.region.r_out = as_number(r["r_out"], "region.r_out");
    if (r.contains("samples")) num.region.samples = as_int(r["samples"], "region.samples");
  }
}

void parse_checks(const json& j, std::vector<CheckConfig>& checks) {
  if (!j.is_array()) throw ConfigError("config: checks must be an array");
  for (const auto& e : j) {
    if (!e.is_object()) throw ConfigError("config: each check must be an object");
    require_keys(e, {"name", "r0", "include_divergence", "index_convention", "field"},
                 "check");
    CheckConfig check;
    if (!e.contains("name")) throw ConfigError("config: check missing 'name'");
    check.name = as_string(e["name"], "check.name");
    if (!known_check(check.name)) {
      throw ConfigError("config: unknown check name '" + check.name + "'");
    }
    if (e.contains("r0")) check.r0 = as_number(e["r0"], "check.r0");
    if (e.contains("include_divergence")) {
      if (!e["include_divergence"].is_boolean()) {
        throw ConfigError("config: check.include_divergence must be a boolean");
      }
      check.include_divergence = e["include_divergence"].get<bool>();
    }
    if (e.contains("index_convention")) {
      check.index_convention = as_string(e["index_convention"], "check.index_convention");
      if (check.index_convention != "contravariant" && check.index_convention != "covariant") {
        throw ConfigError("config: check.index_convention must be contravariant or covariant");
      }
    }
    if (e.contains("field")) {
      check.field = as_string(e["field"], "check.field");
      if (check.field != "electric" && check.field != "magnetic") {
        throw ConfigError("config: check.field must be electric or magnetic");
      }
    }
    checks.push_back(std::move(check));
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config: JSON parse error: ") + err.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  require_keys(j, {"scene", "checks", "numerics", "output", "seed"}, "top level");

  RunConfig config;
  if (j.contains("scene")) parse_scene(j["scene"], config.scene);
  if (j.contains("numerics")) parse_numerics(j["numerics"], config.numerics);
  if (j.contains("checks")) parse_checks(j["checks"], config.checks);
  if (j.contains("output")) {
    require_keys(j["output"], {"report", "csv"}, "output");
    if (j["output"].contains("report")) {
      config.output.report = as_string(j["output"]["report"], "output.report");
    }
    if (j["output"].contains("csv")) {
      config.output.csv = as_string(j["output"]["csv"], "output.csv");
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw ConfigError("config: seed must be an unsigned integer");
    }
    config.seed = j["seed"].get<std::uint64_t>();
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "decay_report",
      "adm_mass",
      "flux_charge",
      "dominant_charge_margin",
      "eq2_residual",
      "transform_residuals",
      "mass_additivity",
      "mass_difference_identity",
      "scalar_relation_residual",
      "theorem_electric",
      "theorem_electromagnetic",
      "boundary_condition",
      "scalar_field_theorem",
  };
  return names;
}

bool known_check(const std::string& name) {
  const auto& names = known_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

double CatalogRef::arg(const std::string& key, double fallback) const {
  for (const auto& [k, v] : args) {
    if (k == key) return v;
  }
  return fallback;
}

bool CatalogRef::has(const std::string& key) const {
  for (const auto& [k, v] : args) {
    if (k == key) return true;
  }
  return false;
}

CatalogRef parse_catalog_ref(const std::string& text) {
  CatalogRef ref;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  const std::size_t name_start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
    ++pos;
  }
  ref.name = text.substr(name_start, pos - name_start);
  if (ref.name.empty()) throw ConfigError("catalog reference: missing name in '" + text + "'");
  skip_ws();
  if (pos == text.size()) return ref;  // bare name, no arguments
  if (text[pos] != '(') {
    throw ConfigError("catalog reference: expected '(' in '" + text + "'");
  }
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      const std::size_t key_start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        ++pos;
      }
      const std::string key = text.substr(key_start, pos - key_start);
      skip_ws();
      if (key.empty() || pos == text.size() || text[pos] != '=') {
        throw ConfigError("catalog reference: expected key=value in '" + text + "'");
      }
      ++pos;
      skip_ws();
      char* end = nullptr;
      const double v = std::strtod(text.c_str() + pos, &end);
      if (end == text.c_str() + pos) {
        throw ConfigError("catalog reference: malformed number in '" + text + "'");
      }
      pos = static_cast<std::size_t>(end - text.c_str());
      ref.args.emplace_back(key, v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ConfigError("catalog reference: expected ',' or ')' in '" + text + "'");
    }
  }
  skip_ws();
  if (pos != text.size()) {
    throw ConfigError("catalog reference: trailing input in '" + text + "'");
  }
  return ref;
}

}  // namespace admkit
