#include "admkit/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "admkit/expression.hpp"
#include "admkit/version.hpp"

namespace admkit {

namespace {

CatalogEntry entry_from_ref(const CatalogRef& ref) {
  if (ref.name == "euclidean") return euclidean();
  if (ref.name == "schwarzschild_isotropic") {
    return schwarzschild_isotropic(ref.arg("m", 1.0));
  }
  if (ref.name == "rn_slice") {
    return rn_slice(ref.arg("m", 2.0), ref.arg("q", 1.0), ref.arg("p", 0.0));
  }
  if (ref.name == "extreme_rn") return extreme_rn(ref.arg("q", 1.0));
  throw ConfigError("scene: unknown catalog metric '" + ref.name + "'");
}

ScalarField scalar_from_spec(const std::string& spec) {
  // catalog references first, anything else is a closed-form expression
  if (spec.find('(') != std::string::npos) {
    const std::string name = spec.substr(0, spec.find('('));
    if (name == "radial_conformal" || name == "harmonic_hair") {
      const CatalogRef ref = parse_catalog_ref(spec);
      if (name == "radial_conformal") {
        return radial_conformal(ref.arg("a", 1.0), ref.arg("tau", 1.0));
      }
      return harmonic_hair(ref.arg("a", 1.0));
    }
  }
  return Expression::parse(spec).field();
}

VectorField vector_from_components(const std::vector<std::string>& components) {
  std::array<ScalarField, 3> comp;
  for (int i = 0; i < 3; ++i) comp[i] = Expression::parse(components[i]).field();
  return VectorField(comp[0], comp[1], comp[2]);
}

}  // namespace

Scene build_scene(const SceneConfig& config) {
  Scene scene;

  if (!config.metric_components.empty()) {
    std::array<ScalarField, 6> comp;
    for (int i = 0; i < 6; ++i) {
      comp[i] = Expression::parse(config.metric_components[i])
                    .field(config.metric_tau, config.metric_inner_radius);
    }
    scene.metric = MetricField::from_components(std::move(comp),
                                                config.metric_inner_radius,
                                                config.metric_tau);
  } else {
    scene.entry = entry_from_ref(parse_catalog_ref(config.metric));
    scene.metric = scene.entry->metric;
  }

  if (!config.conformal_exponent.empty()) {
    scene.conformal_exponent = scalar_from_spec(config.conformal_exponent);
    scene.has_conformal = true;
  }

  auto build_vector = [&](const std::string& spec,
                          const std::vector<std::string>& components,
                          bool magnetic) -> std::optional<VectorField> {
    if (!components.empty()) return vector_from_components(components);
    if (spec == "none" || spec.empty()) return std::nullopt;
    if (spec == "catalog") {
      if (!scene.entry) {
        throw ConfigError("scene: field spec 'catalog' requires a catalog metric");
      }
      const auto& field = magnetic ? scene.entry->magnetic : scene.entry->electric;
      if (!field) {
        throw ConfigError("scene: catalog entry '" + scene.entry->name + "' has no " +
                          (magnetic ? std::string("magnetic") : std::string("electric")) +
                          " field");
      }
      return *field;
    }
    const CatalogRef ref = parse_catalog_ref(spec);
    if (ref.name == "coulomb") return coulomb(ref.arg("q0", 1.0));
    throw ConfigError("scene: unknown vector field '" + spec + "'");
  };

  if (auto e = build_vector(config.electric, config.electric_components, false)) {
    scene.electric = *e;
    scene.has_electric = true;
  }
  if (auto b = build_vector(config.magnetic, config.magnetic_components, true)) {
    scene.magnetic = *b;
    scene.has_magnetic = true;
  }
  if (!config.scalar_field.empty()) {
    scene.scalar_field = scalar_from_spec(config.scalar_field);
    scene.has_scalar = true;
  }
  return scene;
}

namespace {

struct CheckContext {
  const RunConfig& config;
  const Scene& scene;
  SphereQuadrature quad;
  FluxOptions flux;
  Region region;
  VerdictOptions verdicts;
};

FitModel fit_model_from(const std::string& name) {
  if (name == "fixed") return FitModel::FixedExponent;
  if (name == "auto") return FitModel::FreeExponent;
  return FitModel::Richardson;
}

// Clamp the configured annulus to the metric's domain.
Region effective_region(const RunConfig& config, const Scene& scene) {
  Region region;
  region.samples = config.numerics.region.samples;
  region.seed = config.seed;
  region.r_in = config.numerics.region.r_in;
  region.r_out = config.numerics.region.r_out;
  const double r_min = scene.metric.inner_radius();
  if (r_min > 0.0 && region.r_in < 1.25 * r_min) region.r_in = 1.25 * r_min;
  if (region.r_out <= region.r_in) region.r_out = 4.0 * region.r_in;
  return region;
}

void append_ladder_rows(std::vector<CsvRow>& rows, const std::string& quantity,
                        const LimitEstimate& estimate) {
  for (size_t i = 0; i < estimate.radii.size(); ++i) {
    rows.push_back({quantity, estimate.radii[i], estimate.raw[i]});
  }
}

// Margin profile along the argmin direction, one row per ladder radius.
void append_margin_profile(std::vector<CsvRow>& rows, const std::string& quantity,
                           const std::function<double(const ChartPoint&)>& margin,
                           const ChartPoint& argmin, const Region& region) {
  const Eigen::Vector3d direction = argmin.normalized();
  const int steps = 16;
  for (int i = 0; i <= steps; ++i) {
    const double r =
        region.r_in * std::pow(region.r_out / region.r_in, double(i) / steps);
    rows.push_back({quantity, r, margin(r * direction)});
  }
}

bool is_flag(const TheoremReport& report) {
  return report.classification == TheoremClassification::HypothesesHoldConclusionFails;
}

JsonValue run_check(const CheckConfig& check, CheckContext& ctx,
                    std::vector<CsvRow>& csv_rows, bool& flagged) {
  JsonValue result = JsonValue::object();
  result.set("check", check.name);
  const auto& radii = ctx.config.numerics.radii;
  const MetricField& g = ctx.scene.metric;
  const ScalarField& f = ctx.scene.conformal_exponent;

  if (check.name == "decay_report") {
    const auto table = decay_report(g, radii);
    JsonValue rows = JsonValue::array();
    for (const auto& row : table) {
      rows.push(to_json(row));
      csv_rows.push_back({"decay_sup_scaled", row.radius, row.sup_scaled_deviation});
    }
    result.set("estimates", JsonValue::object().set("decay_table", std::move(rows)));
  } else if (check.name == "adm_mass") {
    const LimitEstimate m = adm_mass(g, radii, ctx.quad, ctx.flux);
    append_ladder_rows(csv_rows, "adm_mass", m);
    result.set("estimates", JsonValue::object().set("mass", to_json(m)));
  } else if (check.name == "flux_charge") {
    const bool magnetic = check.field == "magnetic";
    if ((magnetic && !ctx.scene.has_magnetic) || (!magnetic && !ctx.scene.has_electric)) {
      throw ConfigError("flux_charge: scene has no " + check.field + " field");
    }
    const VectorField& v = magnetic ? ctx.scene.magnetic : ctx.scene.electric;
    const LimitEstimate q = flux_charge(g, v, radii, ctx.quad, ctx.flux);
    append_ladder_rows(csv_rows, "flux_charge_" + check.field, q);
    result.set("inputs", JsonValue::object().set("field", check.field));
    result.set("estimates", JsonValue::object().set("charge", to_json(q)));
  } else if (check.name == "dominant_charge_margin") {
    if (!ctx.scene.has_electric) {
      throw ConfigError("dominant_charge_margin: scene has no electric field");
    }
    auto margin_fn = [&](const ChartPoint& p) {
      double m = scalar_curvature(g, p) - 2.0 * norm_sq(g, ctx.scene.electric, p);
      if (check.include_divergence) m -= std::abs(divergence(g, ctx.scene.electric, p));
      return m;
    };
    const ConditionReport rep = dominant_charge_margin(
        g, ctx.scene.electric, ctx.region, check.include_divergence,
        ctx.config.numerics.marginal_tolerance);
    append_margin_profile(csv_rows, "dominant_charge_margin", margin_fn, rep.argmin,
                          ctx.region);
    result.set("margins", to_json(rep));
    result.set("classification", to_string(rep.verdict));
  } else if (check.name == "eq2_residual") {
    double worst = 0.0;
    ChartPoint argmax = ChartPoint::Zero();
    for (const ChartPoint& p : sample_region(ctx.region)) {
      const double r = std::abs(eq2_residual(g, f, p));
      if (r > worst) {
        worst = r;
        argmax = p;
      }
    }
    JsonValue margins = JsonValue::object();
    margins.set("max_abs_residual", worst);
    margins.set("argmax", JsonValue::array().push(argmax.x()).push(argmax.y()).push(argmax.z()));
    margins.set("region", to_json(ctx.region));
    result.set("margins", std::move(margins));
  } else if (check.name == "transform_residuals") {
    if (!ctx.scene.has_electric) {
      throw ConfigError("transform_residuals: scene has no electric field");
    }
    const IndexConvention convention = check.index_convention == "covariant"
                                           ? IndexConvention::CovariantFixed
                                           : IndexConvention::ContravariantFixed;
    double worst_norm = 0.0, worst_div = 0.0;
    for (const ChartPoint& p : sample_region(ctx.region)) {
      const TransformResiduals res =
          transform_residuals(g, f, ctx.scene.electric, p, convention);
      worst_norm = std::max(worst_norm, std::abs(res.norm_law));
      worst_div = std::max(worst_div, std::abs(res.divergence_law));
    }
    JsonValue margins = JsonValue::object();
    margins.set("max_abs_norm_law_residual", worst_norm);
    margins.set("max_abs_divergence_law_residual", worst_div);
    margins.set("region", to_json(ctx.region));
    result.set("inputs", JsonValue::object().set("index_convention", check.index_convention));
    result.set("margins", std::move(margins));
  } else if (check.name == "mass_additivity") {
    const MassAdditivityReport rep = mass_additivity(g, f, radii, ctx.quad, ctx.flux);
    append_ladder_rows(csv_rows, "mass_g", rep.m_g);
    append_ladder_rows(csv_rows, "mass_gprime", rep.m_gprime);
    append_ladder_rows(csv_rows, "mass_gbar", rep.m_gbar);
    result.set("estimates", to_json(rep));
  } else if (check.name == "mass_difference_identity") {
    MassDifferenceOptions options;
    options.flux = ctx.flux;
    options.radial_nodes = ctx.config.numerics.bulk_radial_nodes;
    const MassDifferenceReport rep =
        mass_difference_identity(g, f, check.r0, radii, ctx.quad, options);
    result.set("estimates", to_json(rep));
  } else if (check.name == "scalar_relation_residual") {
    if (!ctx.scene.has_scalar) {
      throw ConfigError("scalar_relation_residual: scene has no scalar field");
    }
    double worst = 0.0;
    for (const ChartPoint& p : sample_region(ctx.region)) {
      worst = std::max(worst,
                       std::abs(scalar_relation_residual(g, ctx.scene.scalar_field, p)));
    }
    JsonValue margins = JsonValue::object();
    margins.set("max_abs_residual", worst);
    margins.set("region", to_json(ctx.region));
    result.set("margins", std::move(margins));
  } else if (check.name == "theorem_electric" || check.name == "theorem_electromagnetic") {
    const VectorField& e_field = ctx.scene.electric;  // zero field when absent
    TheoremReport rep;
    if (check.name == "theorem_electric") {
      rep = theorem_electric(g, f, e_field, ctx.region, radii, ctx.quad, ctx.verdicts);
    } else {
      rep = theorem_electromagnetic(g, f, e_field, ctx.scene.magnetic, ctx.region, radii,
                                    ctx.quad, ctx.verdicts);
    }
    flagged = flagged || is_flag(rep);
    result.set("margins", to_json(rep));
    result.set("classification", to_string(rep.classification));
  } else if (check.name == "boundary_condition") {
    const ConditionReport rep = boundary_condition_margin(
        g, f, ctx.scene.electric, check.r0, ctx.config.numerics.theta_nodes,
        ctx.config.numerics.phi_nodes, ctx.config.numerics.marginal_tolerance);
    result.set("inputs", JsonValue::object().set("r0", check.r0));
    result.set("margins", to_json(rep));
    result.set("classification", to_string(rep.verdict));
  } else if (check.name == "scalar_field_theorem") {
    if (!ctx.scene.has_scalar) {
      throw ConfigError("scalar_field_theorem: scene has no scalar field");
    }
    const TheoremReport rep = scalar_field_theorem(g, ctx.scene.scalar_field, ctx.region,
                                                   radii, ctx.quad, ctx.verdicts);
    flagged = flagged || is_flag(rep);
    result.set("margins", to_json(rep));
    result.set("classification", to_string(rep.classification));
  } else {
    throw ConfigError("unknown check '" + check.name + "'");
  }
  return result;
}

}  // namespace

RunResult run(const RunConfig& config, const std::string& out_dir) {
  RunResult out;

  const Scene scene = build_scene(config.scene);
  CheckContext ctx{
      config,
      scene,
      SphereQuadrature::gauss_legendre(config.numerics.theta_nodes,
                                       config.numerics.phi_nodes),
      FluxOptions{},
      effective_region(config, scene),
      VerdictOptions{},
  };
  ctx.flux.extrapolation.model = fit_model_from(config.numerics.fit);
  ctx.flux.extrapolation.exponent = config.numerics.fit_exponent;
  ctx.flux.adm_measure = config.numerics.adm_measure == "induced"
                             ? SphereMeasure::Induced
                             : SphereMeasure::Euclidean;
  ctx.flux.threads = config.numerics.threads;
  ctx.verdicts.marginal_tolerance = config.numerics.marginal_tolerance;
  ctx.verdicts.conclusion_tolerance = config.numerics.conclusion_tolerance;
  ctx.verdicts.flux = ctx.flux;

  JsonValue results = JsonValue::array();
  bool flagged = false;
  bool failed = false;
  for (const auto& check : config.checks) {
    try {
      results.push(run_check(check, ctx, out.csv_rows, flagged));
    } catch (const std::exception& err) {
      failed = true;
      JsonValue result = JsonValue::object();
      result.set("check", check.name);
      result.set("error", std::string(err.what()));
      results.push(std::move(result));
    }
  }

  out.report = JsonValue::object();
  out.report.set("version", kVersion);
  out.report.set("config_echo", config_echo(config));
  out.report.set("results", std::move(results));

  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  out.report_path = (dir / config.output.report).string();
  {
    std::ofstream file(out.report_path, std::ios::binary);
    file << out.report.dump();
  }
  if (!config.output.csv.empty()) {
    out.csv_path = (dir / config.output.csv).string();
    std::ofstream file(out.csv_path, std::ios::binary);
    file << render_csv(out.csv_rows);
  }

  out.status = failed ? 3 : (flagged ? 1 : 0);
  return out;
}

}  // namespace admkit
