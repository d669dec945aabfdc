#include "admkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace admkit {

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
  if (kind_ != Kind::Object) throw std::logic_error("JsonValue::set on non-object");
  for (auto& [k, v] : object_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  object_.emplace_back(key, std::move(value));
  return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
  if (kind_ != Kind::Array) throw std::logic_error("JsonValue::push on non-array");
  array_.push_back(std::move(value));
  return *this;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_double(std::string& out, double d) {
  if (std::isnan(d)) {
    out += "\"nan\"";
    return;
  }
  if (std::isinf(d)) {
    out += d > 0 ? "\"inf\"" : "\"-inf\"";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  out += buf;
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::UInt: out += std::to_string(uint_); break;
    case Kind::Double: append_double(out, double_); break;
    case Kind::String: append_escaped(out, string_); break;
    case Kind::Array: {
      if (array_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (size_t i = 0; i < array_.size(); ++i) {
        out += pad_in;
        array_[i].write(out, indent, depth + 1);
        if (i + 1 < array_.size()) out += ',';
        out += '\n';
      }
      out += pad + "]";
      break;
    }
    case Kind::Object: {
      if (object_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (size_t i = 0; i < object_.size(); ++i) {
        out += pad_in;
        append_escaped(out, object_[i].first);
        out += ": ";
        object_[i].second.write(out, indent, depth + 1);
        if (i + 1 < object_.size()) out += ',';
        out += '\n';
      }
      out += pad + "}";
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

namespace {

JsonValue to_json(const ChartPoint& p) {
  JsonValue v = JsonValue::array();
  v.push(p.x()).push(p.y()).push(p.z());
  return v;
}

}  // namespace

JsonValue to_json(const LimitEstimate& estimate) {
  JsonValue v = JsonValue::object();
  v.set("value", estimate.value);
  JsonValue radii = JsonValue::array();
  for (double r : estimate.radii) radii.push(r);
  v.set("radii", std::move(radii));
  JsonValue raw = JsonValue::array();
  for (double y : estimate.raw) raw.push(y);
  v.set("raw", std::move(raw));
  v.set("fit_exponent", estimate.fit_exponent);
  v.set("fit_residual", estimate.fit_residual);
  v.set("error_estimate", estimate.error_estimate);
  v.set("tail_monotone", estimate.tail_monotone);
  return v;
}

JsonValue to_json(const DecayRow& row) {
  JsonValue v = JsonValue::object();
  v.set("radius", row.radius);
  v.set("sup_scaled_deviation", row.sup_scaled_deviation);
  return v;
}

JsonValue to_json(const Region& region) {
  JsonValue v = JsonValue::object();
  v.set("r_in", region.r_in);
  v.set("r_out", region.r_out);
  v.set("samples", region.samples);
  v.set("seed", static_cast<std::uint64_t>(region.seed));
  return v;
}

JsonValue to_json(const ConditionReport& report) {
  JsonValue v = JsonValue::object();
  v.set("condition", report.condition);
  v.set("min_margin", report.min_margin);
  v.set("argmin", to_json(report.argmin));
  JsonValue q = JsonValue::array();
  for (double x : report.margin_quantiles) q.push(x);
  v.set("margin_quantiles", std::move(q));
  v.set("verdict", to_string(report.verdict));
  v.set("tolerance", report.tolerance);
  v.set("region", to_json(report.region));
  if (!report.notes.empty()) {
    JsonValue notes = JsonValue::array();
    for (const auto& n : report.notes) notes.push(n);
    v.set("notes", std::move(notes));
  }
  return v;
}

JsonValue to_json(const TheoremReport& report) {
  JsonValue v = JsonValue::object();
  v.set("theorem", report.theorem);
  JsonValue hyps = JsonValue::array();
  for (const auto& h : report.hypotheses) hyps.push(to_json(h));
  v.set("hypotheses", std::move(hyps));
  JsonValue est = JsonValue::object();
  for (const auto& [name, e] : report.estimates) est.set(name, to_json(e));
  v.set("estimates", std::move(est));
  v.set("conclusion_margin", report.conclusion_margin);
  v.set("conclusion_tolerance", report.conclusion_tolerance);
  v.set("classification", to_string(report.classification));
  if (!report.diagnostics.empty()) {
    JsonValue diag = JsonValue::object();
    for (const auto& [name, value] : report.diagnostics) diag.set(name, value);
    v.set("diagnostics", std::move(diag));
  }
  if (!report.notes.empty()) {
    JsonValue notes = JsonValue::array();
    for (const auto& n : report.notes) notes.push(n);
    v.set("notes", std::move(notes));
  }
  return v;
}

JsonValue to_json(const MassAdditivityReport& report) {
  JsonValue v = JsonValue::object();
  v.set("mass_g", to_json(report.m_g));
  v.set("mass_gprime", to_json(report.m_gprime));
  v.set("mass_gbar", to_json(report.m_gbar));
  v.set("residual", report.residual);
  return v;
}

JsonValue to_json(const MassDifferenceReport& report) {
  JsonValue v = JsonValue::object();
  v.set("lhs", report.lhs);
  v.set("boundary_term", report.boundary_term);
  v.set("bulk_truncated", report.bulk_truncated);
  v.set("tail_estimate", report.tail_estimate);
  v.set("tail_exponent", report.tail_exponent);
  v.set("tail_fit_spread", report.tail_fit_spread);
  v.set("tail_fit_ok", report.tail_fit_ok);
  v.set("bulk_term", report.bulk_term);
  v.set("rhs", report.rhs);
  v.set("residual", report.residual);
  v.set("residual_truncated", report.residual_truncated);
  v.set("r0", report.r0);
  v.set("r_max", report.r_max);
  v.set("mass_g", to_json(report.m_g));
  v.set("mass_gprime", to_json(report.m_gprime));
  v.set("normal_orientation", "toward decreasing r (into the excised ball)");
  return v;
}

JsonValue config_echo(const RunConfig& config) {
  JsonValue scene = JsonValue::object();
  scene.set("metric", config.scene.metric);
  if (!config.scene.metric_components.empty()) {
    JsonValue comp = JsonValue::array();
    for (const auto& c : config.scene.metric_components) comp.push(c);
    scene.set("metric_components", std::move(comp));
    scene.set("metric_inner_radius", config.scene.metric_inner_radius);
    scene.set("metric_tau", config.scene.metric_tau);
  }
  scene.set("conformal_exponent", config.scene.conformal_exponent);
  scene.set("electric", config.scene.electric);
  if (!config.scene.electric_components.empty()) {
    JsonValue comp = JsonValue::array();
    for (const auto& c : config.scene.electric_components) comp.push(c);
    scene.set("electric_components", std::move(comp));
  }
  scene.set("magnetic", config.scene.magnetic);
  if (!config.scene.magnetic_components.empty()) {
    JsonValue comp = JsonValue::array();
    for (const auto& c : config.scene.magnetic_components) comp.push(c);
    scene.set("magnetic_components", std::move(comp));
  }
  scene.set("scalar_field", config.scene.scalar_field);

  JsonValue checks = JsonValue::array();
  for (const auto& c : config.checks) {
    JsonValue check = JsonValue::object();
    check.set("name", c.name);
    check.set("r0", c.r0);
    check.set("include_divergence", c.include_divergence);
    check.set("index_convention", c.index_convention);
    check.set("field", c.field);
    checks.push(std::move(check));
  }

  JsonValue region = JsonValue::object();
  region.set("r_in", config.numerics.region.r_in);
  region.set("r_out", config.numerics.region.r_out);
  region.set("samples", config.numerics.region.samples);

  JsonValue numerics = JsonValue::object();
  JsonValue radii = JsonValue::array();
  for (double r : config.numerics.radii) radii.push(r);
  numerics.set("radii", std::move(radii));
  numerics.set("theta_nodes", config.numerics.theta_nodes);
  numerics.set("phi_nodes", config.numerics.phi_nodes);
  numerics.set("fd_step_rel", config.numerics.fd_step_rel);
  numerics.set("marginal_tolerance", config.numerics.marginal_tolerance);
  numerics.set("conclusion_tolerance", config.numerics.conclusion_tolerance);
  numerics.set("fit", config.numerics.fit);
  numerics.set("fit_exponent", config.numerics.fit_exponent);
  numerics.set("adm_measure", config.numerics.adm_measure);
  numerics.set("bulk_radial_nodes", config.numerics.bulk_radial_nodes);
  numerics.set("threads", config.numerics.threads);
  numerics.set("region", std::move(region));

  JsonValue output = JsonValue::object();
  output.set("report", config.output.report);
  output.set("csv", config.output.csv);

  JsonValue echo = JsonValue::object();
  echo.set("scene", std::move(scene));
  echo.set("checks", std::move(checks));
  echo.set("numerics", std::move(numerics));
  echo.set("output", std::move(output));
  echo.set("seed", static_cast<std::uint64_t>(config.seed));
  return echo;
}

std::string render_csv(const std::vector<CsvRow>& rows) {
  std::string out = "quantity,radius,value\n";
  for (const auto& row : rows) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", row.radius, row.value);
    out += row.quantity;
    out += buf;
  }
  return out;
}

std::string report_schema_text() {
  return R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "admkit run report",
  "type": "object",
  "required": ["version", "config_echo", "results"],
  "properties": {
    "version": {"type": "string"},
    "config_echo": {"type": "object"},
    "results": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["check"],
        "properties": {
          "check": {"type": "string"},
          "inputs": {"type": "object"},
          "estimates": {"type": "object"},
          "margins": {"type": "object"},
          "classification": {"type": "string"},
          "diagnostics": {"type": "object"},
          "error": {"type": "string"}
        }
      }
    }
  },
  "notes": [
    "numbers are serialized with 17 significant digits",
    "exit status: 0 ok, 1 theorem FLAG, 2 config error, 3 numerical failure"
  ]
}
)";
}

}  // namespace admkit
