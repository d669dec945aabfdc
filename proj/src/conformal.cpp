#include "admkit/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace admkit {

namespace {

double min_decay(const MetricField& g, const ScalarField& f) {
  if (f.declared_decay() <= 0.0) return g.decay_exponent();
  return std::min(g.decay_exponent(), f.declared_decay());
}

}  // namespace

MetricField rescale(const MetricField& g, const ScalarField& f, double c) {
  if (c == 0.0) return g;
  ScalarField factor = ScalarField::from_jet_evaluator(
      [f, c](const ChartPoint& p) { return std::exp(c * f.value(p)); },
      [f, c](const ChartPoint& p) { return exp(c * f.jet(p)); },
      0.0, f.inner_radius(), f.has_exact_jet());
  return g.scaled_by(factor, min_decay(g, f));
}

MetricField rescale_by_power(const MetricField& g, const ScalarField& phi, double k) {
  if (k == 0.0) return g;
  ScalarField factor = ScalarField::from_jet_evaluator(
      [phi, k](const ChartPoint& p) { return std::pow(phi.value(p), k); },
      [phi, k](const ChartPoint& p) { return pow(phi.jet(p), k); },
      0.0, phi.inner_radius(), phi.has_exact_jet());
  return g.scaled_by(factor, g.decay_exponent());
}

double eq2_residual(const MetricField& g, const ScalarField& f, const ChartPoint& p) {
  const MetricField gbar = rescale(g, f, 1.0);
  const MetricField gprime = rescale(g, f, 2.0);

  const double s_bar = scalar_curvature(gbar, p);
  const double s_g = scalar_curvature(g, p);
  const double s_gp = scalar_curvature(gprime, p);

  const Jet fj = f.jet(p);
  const Eigen::Matrix3d ginv = nd::inverse_checked<3>(g.value(p));
  const double grad_f_sq = fj.gradient.dot(ginv * fj.gradient);
  const double ef = std::exp(fj.value);

  // n = 3: (n-1)(n-2)/4 = 1/2
  const double rhs = (0.5 * s_g + 0.5 * ef * ef * s_gp + 0.5 * grad_f_sq) / ef;
  return s_bar - rhs;
}

TransformResiduals transform_residuals(const MetricField& g, const ScalarField& f,
                                       const VectorField& e_field, const ChartPoint& p,
                                       IndexConvention convention) {
  TransformResiduals out;
  const MetricField gbar = rescale(g, f, 1.0);
  const double fv = f.value(p);

  if (convention == IndexConvention::ContravariantFixed) {
    out.norm_law = norm_sq(gbar, e_field, p) - std::exp(fv) * norm_sq(g, e_field, p);
  } else {
    // Covariant components fixed: the vector with the same covariant data in
    // gbar has contravariant components e^{-f} E^i, and the norm picks up
    // e^{-f} instead.
    const Eigen::Vector3d ev = e_field.value(p) * std::exp(-fv);
    const double lhs = ev.dot(gbar.value(p) * ev);
    out.norm_law = lhs - std::exp(-fv) * norm_sq(g, e_field, p);
  }

  // The divergence law is a statement about fixed contravariant components.
  const Jet fj = f.jet(p);
  const double coupling = 1.5 * fj.gradient.dot(e_field.value(p));
  out.divergence_law = divergence(gbar, e_field, p) -
                       (divergence(g, e_field, p) + coupling);
  return out;
}

MassAdditivityReport mass_additivity(const MetricField& g, const ScalarField& f,
                                     std::span<const double> radii,
                                     const SphereQuadrature& quad,
                                     const FluxOptions& options) {
  MassAdditivityReport rep;
  rep.m_g = adm_mass(g, radii, quad, options);
  rep.m_gprime = adm_mass(rescale(g, f, 2.0), radii, quad, options);
  rep.m_gbar = adm_mass(rescale(g, f, 1.0), radii, quad, options);
  rep.residual = rep.m_g.value + rep.m_gprime.value - 2.0 * rep.m_gbar.value;
  return rep;
}

namespace {

// Cumulative radial integral of a smooth decaying integrand, by composite
// Gauss-Legendre panels with breakpoints at the ladder radii (each panel is
// further split so its endpoint ratio stays <= 2).
struct RadialIntegral {
  std::vector<double> breakpoints;  // the ladder radii above r0
  std::vector<double> cumulative;   // integral over [r0, breakpoint]
};

template <class F>
RadialIntegral integrate_radially(F&& integrand, double r0,
                                  std::span<const double> radii, int nodes) {
  RadialIntegral out;
  const auto [gx, gw] = gauss_legendre_nodes(nodes);
  CompensatedSum acc;
  double lo = r0;
  for (double hi : radii) {
    if (hi <= r0) continue;
    double panel_lo = lo;
    while (panel_lo < hi) {
      const double panel_hi = std::min(hi, 2.0 * panel_lo);
      const double mid = 0.5 * (panel_lo + panel_hi);
      const double scale = 0.5 * (panel_hi - panel_lo);
      for (size_t i = 0; i < gx.size(); ++i) {
        acc.add(gw[i] * scale * integrand(mid + scale * gx[i]));
      }
      panel_lo = panel_hi;
    }
    lo = hi;
    out.breakpoints.push_back(hi);
    out.cumulative.push_back(acc.value());
  }
  return out;
}

}  // namespace

MassDifferenceReport mass_difference_identity(const MetricField& g, const ScalarField& f,
                                              double r0, std::span<const double> radii,
                                              const SphereQuadrature& quad,
                                              const MassDifferenceOptions& options) {
  if (radii.size() < 3) {
    throw std::invalid_argument("mass_difference_identity: need at least 3 ladder radii");
  }
  MassDifferenceReport rep;
  rep.r0 = r0;
  rep.r_max = radii.back();

  const MetricField gprime = rescale(g, f, 1.0);  // one-sided convention
  rep.m_g = adm_mass(g, radii, quad, options.flux);
  rep.m_gprime = adm_mass(gprime, radii, quad, options.flux);
  rep.lhs = rep.m_gprime.value - rep.m_g.value;

  const SphereQuadrature& bulk_quad =
      options.bulk_quadrature ? *options.bulk_quadrature : quad;
  const int threads = options.flux.threads;

  // Boundary integral over the r0 sphere, g-induced measure, normal toward
  // decreasing r: integrand -e^{f/4} (grad f . g^{-1} u) sqrt(det g) r0^2.
  rep.boundary_term =
      bulk_quad.integrate(
          [&](const Eigen::Vector3d& u) {
            const ChartPoint x = r0 * u;
            const Eigen::Matrix3d gx = g.value(x);
            const Eigen::Matrix3d ginv = nd::inverse_checked<3>(gx);
            const Jet fj = f.jet(x);
            const double sqrt_det = std::sqrt(gx.determinant());
            return -std::exp(0.25 * fj.value) * fj.gradient.dot(ginv * u) * sqrt_det *
                   r0 * r0;
          },
          threads) /
      (8.0 * M_PI);

  // Bulk integrand (1/(16 pi)) e^{f/4} (e^{f} S_g' - S_g) sqrt(det g) r^2 dOmega dr.
  auto shell = [&](double r) {
    return bulk_quad.integrate(
               [&](const Eigen::Vector3d& u) {
                 const ChartPoint x = r * u;
                 const double fv = f.value(x);
                 const double s_g = scalar_curvature(g, x);
                 const double s_gp = scalar_curvature(gprime, x);
                 const double sqrt_det = std::sqrt(g.value(x).determinant());
                 return std::exp(0.25 * fv) * (std::exp(fv) * s_gp - s_g) * sqrt_det *
                        r * r;
               },
               threads) /
           (16.0 * M_PI);
  };
  const RadialIntegral bulk = integrate_radially(shell, r0, radii, options.radial_nodes);
  rep.bulk_truncated = bulk.cumulative.back();

  // Tail completion: I(inf) - I(R) ~ c R^{-q}. On a geometric ladder the
  // exponent comes from the decay of consecutive increments.
  const size_t nb = bulk.cumulative.size();
  if (nb >= 3) {
    std::vector<double> inc(nb - 1), ratio;
    for (size_t i = 0; i + 1 < nb; ++i) inc[i] = bulk.cumulative[i + 1] - bulk.cumulative[i];
    std::vector<double> q_estimates;
    for (size_t i = 0; i + 1 < inc.size(); ++i) {
      const double rho = bulk.breakpoints[i + 1] / bulk.breakpoints[i];
      if (inc[i] != 0.0 && inc[i + 1] / inc[i] > 0.0 && inc[i + 1] / inc[i] < 1.0) {
        q_estimates.push_back(-std::log(inc[i + 1] / inc[i]) / std::log(rho));
      }
    }
    if (!q_estimates.empty()) {
      const double q = q_estimates.back();
      const double rho = bulk.breakpoints[nb - 1] / bulk.breakpoints[nb - 2];
      const double decay = std::pow(rho, -q);
      rep.tail_exponent = q;
      rep.tail_estimate = inc.back() * decay / (1.0 - decay);
      rep.tail_fit_ok = true;
      rep.tail_fit_spread =
          q_estimates.size() >= 2
              ? std::abs(q_estimates.back() - q_estimates[q_estimates.size() - 2])
              : 0.0;
    }
  }

  rep.bulk_term = rep.bulk_truncated + rep.tail_estimate;
  rep.rhs = rep.boundary_term + rep.bulk_term;
  rep.residual = rep.lhs - rep.rhs;
  rep.residual_truncated = rep.lhs - (rep.boundary_term + rep.bulk_truncated);
  return rep;
}

double scalar_relation_residual(const MetricField& g, const ScalarField& phi,
                                const ChartPoint& p) {
  const double phiv = phi.value(p);
  if (!(phiv > 0.0)) {
    throw std::domain_error("scalar_relation_residual: phi must be positive");
  }
  const MetricField gprime = rescale_by_power(g, phi, 4.0);
  const double lhs = scalar_curvature(gprime, p);
  const double s_g = scalar_curvature(g, p);
  const double lap = laplace_beltrami(g, phi, p);
  const double rhs = std::pow(phiv, -5.0) * (-8.0 * lap + s_g * phiv);
  return lhs - rhs;
}

}  // namespace admkit
