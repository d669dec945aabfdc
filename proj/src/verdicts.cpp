#include "admkit/verdicts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "admkit/geometry.hpp"

namespace admkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

std::vector<ChartPoint> sample_region(const Region& region) {
  if (!(region.r_out > region.r_in) || region.r_in <= 0.0) {
    throw std::invalid_argument("sample_region: need 0 < r_in < r_out");
  }
  if (region.samples < 1) throw std::invalid_argument("sample_region: empty sample set");

  // R3 additive low-discrepancy sequence, offset by a seeded start point.
  // Radii are log-uniform so both ends of the annulus are resolved.
  constexpr double kPlastic = 1.2207440846057594754;
  const double a1 = 1.0 / kPlastic;
  const double a2 = 1.0 / (kPlastic * kPlastic);
  const double a3 = 1.0 / (kPlastic * kPlastic * kPlastic);

  std::uint64_t state = region.seed;
  double u1 = unit_double(splitmix64(state));
  double u2 = unit_double(splitmix64(state));
  double u3 = unit_double(splitmix64(state));

  std::vector<ChartPoint> points;
  points.reserve(region.samples);
  const double log_ratio = std::log(region.r_out / region.r_in);
  for (int k = 0; k < region.samples; ++k) {
    u1 = u1 + a1 < 1.0 ? u1 + a1 : u1 + a1 - 1.0;
    u2 = u2 + a2 < 1.0 ? u2 + a2 : u2 + a2 - 1.0;
    u3 = u3 + a3 < 1.0 ? u3 + a3 : u3 + a3 - 1.0;
    const double r = region.r_in * std::exp(u1 * log_ratio);
    const double c = 2.0 * u2 - 1.0;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double phi = 2.0 * M_PI * u3;
    points.emplace_back(r * s * std::cos(phi), r * s * std::sin(phi), r * c);
  }
  return points;
}

const char* to_string(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::HoldsOnSamples: return "holds-on-samples";
    case ConditionVerdict::Marginal: return "marginal";
    case ConditionVerdict::Violated: return "violated";
  }
  return "unknown";
}

const char* to_string(TheoremClassification c) {
  switch (c) {
    case TheoremClassification::HypothesesHoldConclusionHolds:
      return "hypotheses-hold-conclusion-holds";
    case TheoremClassification::HypothesesFailConclusionHolds:
      return "hypotheses-fail-conclusion-holds";
    case TheoremClassification::HypothesesFailConclusionFails:
      return "hypotheses-fail-conclusion-fails";
    case TheoremClassification::HypothesesHoldConclusionFails:
      return "hypotheses-hold-conclusion-fails(FLAG)";
  }
  return "unknown";
}

namespace {

ConditionVerdict classify_margin(double min_margin, double tol) {
  if (std::abs(min_margin) < tol) return ConditionVerdict::Marginal;
  return min_margin < 0.0 ? ConditionVerdict::Violated
                          : ConditionVerdict::HoldsOnSamples;
}

std::array<double, 5> quantiles(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  auto pick = [&](double q) { return values[static_cast<size_t>(q * (n - 1))]; };
  return {values.front(), pick(0.25), pick(0.5), pick(0.75), values.back()};
}

bool hypotheses_hold(const std::vector<ConditionReport>& hyps, double tol) {
  for (const auto& h : hyps) {
    if (h.verdict == ConditionVerdict::Violated) return false;
    if (std::isnan(h.min_margin)) return false;
    if (h.min_margin < -tol) return false;
  }
  return true;
}

TheoremClassification classify_theorem(bool hyp_hold, double conclusion_margin,
                                       double conclusion_tol) {
  const bool concl_hold = conclusion_margin >= -conclusion_tol;
  if (hyp_hold) {
    return concl_hold ? TheoremClassification::HypothesesHoldConclusionHolds
                      : TheoremClassification::HypothesesHoldConclusionFails;
  }
  return concl_hold ? TheoremClassification::HypothesesFailConclusionHolds
                    : TheoremClassification::HypothesesFailConclusionFails;
}

}  // namespace

ConditionReport scan_condition(std::string name, const Region& region,
                               const std::function<double(const ChartPoint&)>& margin,
                               double tolerance) {
  ConditionReport rep;
  rep.condition = std::move(name);
  rep.tolerance = tolerance;
  rep.region = region;

  const std::vector<ChartPoint> points = sample_region(region);
  std::vector<double> margins;
  margins.reserve(points.size());
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (const ChartPoint& p : points) {
    const double m = margin(p);
    margins.push_back(m);
    if (m < rep.min_margin) {
      rep.min_margin = m;
      rep.argmin = p;
    }
  }
  rep.margin_quantiles = quantiles(std::move(margins));
  rep.verdict = classify_margin(rep.min_margin, tolerance);
  return rep;
}

ConditionReport dominant_charge_margin(const MetricField& g, const VectorField& e_field,
                                       const Region& region, bool include_divergence,
                                       double tolerance) {
  auto margin = [&](const ChartPoint& p) {
    double m = scalar_curvature(g, p) - 2.0 * norm_sq(g, e_field, p);
    if (include_divergence) m -= std::abs(divergence(g, e_field, p));
    return m;
  };
  ConditionReport rep = scan_condition(
      include_divergence ? "dominant_charge_with_density" : "dominant_charge", region,
      margin, tolerance);
  return rep;
}

namespace {

// Shared body of the electric / electromagnetic reports; the magnetic field is
// null for the pure electric statement.
TheoremReport conformal_mass_theorem(const MetricField& g, const ScalarField& f,
                                     const VectorField& e_field,
                                     const VectorField* b_field, const Region& region,
                                     std::span<const double> radii,
                                     const SphereQuadrature& quad,
                                     const VerdictOptions& options) {
  TheoremReport rep;
  rep.theorem = b_field ? "electromagnetic_conformal_mass" : "electric_conformal_mass";
  rep.conclusion_tolerance = options.conclusion_tolerance;
  rep.notes.push_back("two-sided convention: g' = e^{2f} g, gbar = e^{f} g");
  rep.notes.push_back("E, B stored contravariant and held fixed across the family");

  const MetricField gprime = rescale(g, f, 2.0);
  const MetricField gbar = rescale(g, f, 1.0);

  auto hyp1 = scan_condition(
      "conformal_curvature_sum_dominates_fields", region,
      [&](const ChartPoint& p) {
        const double ef = std::exp(f.value(p));
        double m = scalar_curvature(g, p) + ef * ef * scalar_curvature(gprime, p) -
                   4.0 * norm_sq(g, e_field, p);
        if (b_field) m -= 4.0 * norm_sq(g, *b_field, p);
        return m;
      },
      options.marginal_tolerance);
  rep.hypotheses.push_back(std::move(hyp1));

  auto hyp2 = scan_condition(
      "conformal_gradient_dominates_coupling", region,
      [&](const ChartPoint& p) {
        const Jet fj = f.jet(p);
        const Eigen::Matrix3d ginv = nd::inverse_checked<3>(g.value(p));
        const double grad_sq = fj.gradient.dot(ginv * fj.gradient);
        const double ef = std::exp(fj.value);
        const double coupling = std::abs(3.0 * ef * fj.gradient.dot(e_field.value(p)));
        const double density = std::abs(ef * divergence(g, e_field, p));
        return grad_sq - coupling - density;
      },
      options.marginal_tolerance);
  rep.hypotheses.push_back(std::move(hyp2));

  if (b_field) {
    auto hyp3 = scan_condition(
        "magnetic_density_vanishes_for_gbar", region,
        [&](const ChartPoint& p) { return -std::abs(divergence(gbar, *b_field, p)); },
        options.marginal_tolerance);
    rep.hypotheses.push_back(std::move(hyp3));
  }

  LimitEstimate m_g = adm_mass(g, radii, quad, options.flux);
  LimitEstimate m_gp = adm_mass(gprime, radii, quad, options.flux);
  LimitEstimate charge_e = flux_charge(g, e_field, radii, quad, options.flux);

  double charge_scale = std::abs(charge_e.value);
  if (b_field) {
    LimitEstimate charge_b = flux_charge(g, *b_field, radii, quad, options.flux);
    charge_scale = std::hypot(charge_e.value, charge_b.value);
    rep.estimates.emplace_back("charge_p", std::move(charge_b));
  }
  rep.conclusion_margin = m_g.value + m_gp.value - 2.0 * charge_scale;
  rep.estimates.emplace_back("mass_g", std::move(m_g));
  rep.estimates.emplace_back("mass_gprime", std::move(m_gp));
  rep.estimates.emplace_back("charge_q", std::move(charge_e));

  rep.classification =
      classify_theorem(hypotheses_hold(rep.hypotheses, options.marginal_tolerance),
                       rep.conclusion_margin, options.conclusion_tolerance);
  return rep;
}

}  // namespace

TheoremReport theorem_electric(const MetricField& g, const ScalarField& f,
                               const VectorField& e_field, const Region& region,
                               std::span<const double> radii,
                               const SphereQuadrature& quad,
                               const VerdictOptions& options) {
  return conformal_mass_theorem(g, f, e_field, nullptr, region, radii, quad, options);
}

TheoremReport theorem_electromagnetic(const MetricField& g, const ScalarField& f,
                                      const VectorField& e_field,
                                      const VectorField& b_field, const Region& region,
                                      std::span<const double> radii,
                                      const SphereQuadrature& quad,
                                      const VerdictOptions& options) {
  return conformal_mass_theorem(g, f, e_field, &b_field, region, radii, quad, options);
}

ConditionReport boundary_condition_margin(const MetricField& g, const ScalarField& f,
                                          const VectorField& e_field, double r0,
                                          int n_theta, int n_phi, double tolerance) {
  ConditionReport rep;
  rep.condition = "inner_boundary_condition";
  rep.tolerance = tolerance;
  rep.region = Region{r0, r0, n_theta * n_phi, 0};
  rep.notes.push_back("normal toward increasing r; H is the average of principal curvatures");

  const BoundaryEigenvalueBound bound = boundary_lambda0(g, r0, n_theta, n_phi);
  if (!bound.lambda0) {
    rep.min_margin = std::numeric_limits<double>::quiet_NaN();
    rep.verdict = ConditionVerdict::Violated;
    rep.notes.push_back(
        "lambda0 undefined: negative infimum of the induced boundary scalar curvature (" +
        std::to_string(bound.inf_induced_scalar) + ")");
    return rep;
  }
  const double lambda0 = *bound.lambda0;
  if (bound.lambda0_ambient &&
      std::abs(*bound.lambda0_ambient - lambda0) > 1e-6) {
    rep.notes.push_back("ambient-scalar variant differs: lambda0_ambient = " +
                        std::to_string(*bound.lambda0_ambient));
  }

  std::vector<double> margins;
  std::vector<double> sum_margins;
  margins.reserve(static_cast<size_t>(n_theta) * n_phi);
  rep.min_margin = std::numeric_limits<double>::infinity();
  double min_sum_margin = std::numeric_limits<double>::infinity();
  for (int it = 0; it < n_theta; ++it) {
    const double c = -1.0 + (2.0 * it + 1.0) / n_theta;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * M_PI * ip / n_phi;
      const ChartPoint p = r0 * ChartPoint(s * std::cos(phi), s * std::sin(phi), c);

      const Eigen::Vector3d nu = sphere_unit_normal(g, p);
      const double h_avg = sphere_mean_curvature(g, r0, p, TraceConvention::Average);
      const double df_nu = f.jet(p).gradient.dot(nu);
      const double e_nu = std::abs(e_field.value(p).dot(g.value(p) * nu));

      const double m = lambda0 - h_avg - 0.25 * df_nu - e_nu;
      margins.push_back(m);
      if (m < rep.min_margin) {
        rep.min_margin = m;
        rep.argmin = p;
      }
      min_sum_margin =
          std::min(min_sum_margin, lambda0 - 2.0 * h_avg - 0.25 * df_nu - e_nu);
    }
  }
  rep.margin_quantiles = quantiles(std::move(margins));
  rep.verdict = classify_margin(rep.min_margin, tolerance);
  if (std::abs(min_sum_margin - rep.min_margin) > 1e-6) {
    rep.notes.push_back("summed-trace variant: min margin = " +
                        std::to_string(min_sum_margin));
  }
  return rep;
}

TheoremReport scalar_field_theorem(const MetricField& g, const ScalarField& phi,
                                   const Region& region, std::span<const double> radii,
                                   const SphereQuadrature& quad,
                                   const VerdictOptions& options) {
  TheoremReport rep;
  rep.theorem = "conformal_scalar_field_mass";
  rep.conclusion_tolerance = options.conclusion_tolerance;
  rep.notes.push_back("coupling g' = phi^4 g");

  // phi must keep one sign on the region; a sign change makes phi^{-2}
  // meaningless, so the zero locus is reported instead of a margin.
  const std::vector<ChartPoint> points = sample_region(region);
  double phi_min = std::numeric_limits<double>::infinity();
  double phi_max = -std::numeric_limits<double>::infinity();
  double zero_radius = 0.0;
  double best_abs = std::numeric_limits<double>::infinity();
  for (const ChartPoint& p : points) {
    const double v = phi.value(p);
    phi_min = std::min(phi_min, v);
    phi_max = std::max(phi_max, v);
    if (std::abs(v) < best_abs) {
      best_abs = std::abs(v);
      zero_radius = radius(p);
    }
  }

  if (phi_min <= 0.0) {
    ConditionReport positivity;
    positivity.condition = "scalar_field_positive";
    positivity.tolerance = options.marginal_tolerance;
    positivity.region = region;
    positivity.min_margin = phi_min;
    positivity.verdict = ConditionVerdict::Violated;
    if (phi_max > 0.0) {
      positivity.notes.push_back("phi changes sign in the region; zero locus near r = " +
                                 std::to_string(zero_radius));
    } else {
      positivity.notes.push_back("phi nonpositive on the region");
    }
    rep.hypotheses.push_back(std::move(positivity));
  } else {
    const MetricField gprime = rescale_by_power(g, phi, 4.0);

    auto hyp = scan_condition(
        "curvature_sum_dominates_scalar_gradient", region,
        [&](const ChartPoint& p) {
          const Jet pj = phi.jet(p);
          const Eigen::Matrix3d ginv = nd::inverse_checked<3>(g.value(p));
          const double grad_sq = pj.gradient.dot(ginv * pj.gradient);
          const double ph = pj.value;
          const double ph2 = ph * ph;
          return scalar_curvature(g, p) +
                 scalar_curvature(gprime, p) * ph2 * ph2 / 3.0 -
                 2.0 * grad_sq / ph2;
        },
        options.marginal_tolerance);
    rep.hypotheses.push_back(std::move(hyp));

    // Energy-density identity 24 T00 = 3 S_g phi^2 + S_g' phi^6 - 6 |grad phi|^2
    // with T00 = S_g phi^2/6 - |grad phi|^2/4 - phi Delta_g phi / 3; both sides
    // are assembled independently and the worst disagreement is reported.
    double worst = 0.0;
    for (const ChartPoint& p : points) {
      const Jet pj = phi.jet(p);
      const Eigen::Matrix3d ginv = nd::inverse_checked<3>(g.value(p));
      const double grad_sq = pj.gradient.dot(ginv * pj.gradient);
      const double ph = pj.value;
      const double s_g = scalar_curvature(g, p);
      const double s_gp = scalar_curvature(gprime, p);
      const double lap = laplace_beltrami(g, phi, p);
      const double t00 = s_g * ph * ph / 6.0 - grad_sq / 4.0 - ph * lap / 3.0;
      const double lhs = 24.0 * t00;
      const double rhs = 3.0 * s_g * ph * ph + s_gp * std::pow(ph, 6.0) -
                         6.0 * grad_sq;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.diagnostics.emplace_back("energy_density_identity_max_abs_residual", worst);
  }

  LimitEstimate m_g = adm_mass(g, radii, quad, options.flux);
  rep.conclusion_margin = m_g.value;
  rep.estimates.emplace_back("mass_g", std::move(m_g));
  rep.classification =
      classify_theorem(hypotheses_hold(rep.hypotheses, options.marginal_tolerance),
                       rep.conclusion_margin, options.conclusion_tolerance);
  return rep;
}

}  // namespace admkit
