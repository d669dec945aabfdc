#ifndef ADMKIT_CONFORMAL_HPP
#define ADMKIT_CONFORMAL_HPP

#include <span>

#include "admkit/asymptotics.hpp"
#include "admkit/fields.hpp"
#include "admkit/geometry.hpp"
#include "admkit/quadrature.hpp"

namespace admkit {

// Two conventions coexist for the primed metric: the two-sided rescaling
// g' = e^{2f} g with intermediary gbar = e^{f} g, and the one-sided g' = e^{f} g
// used by the inner-boundary identity. Checks pin the convention they need.
enum class ConformalConvention { TwoSided, OneSided };

// Which field components stay fixed across a conformal family.
enum class IndexConvention { ContravariantFixed, CovariantFixed };

// e^{c f} g with component jets composed by the product/chain rule.
MetricField rescale(const MetricField& g, const ScalarField& f, double c);

// phi^k g (the scalar-field coupling uses k = 4).
MetricField rescale_by_power(const MetricField& g, const ScalarField& phi, double k);

// Residual of the two-sided curvature relation at p (n = 3):
//   S_gbar - e^{-f} ( S_g/2 + e^{2f} S_g'/2 + |grad_g f|^2_g / 2 )
// with gbar = e^{f} g and g' = e^{2f} g, both sides through the generic
// curvature engine.
double eq2_residual(const MetricField& g, const ScalarField& f, const ChartPoint& p);

struct TransformResiduals {
  double norm_law = 0.0;        // |E|^2_gbar - e^{s} |E|^2_g, s = +f or -f
  double divergence_law = 0.0;  // div_gbar E - (div_g E + (3/2) grad f . E)
};

// Field transformation laws under gbar = e^{f} g. The divergence law holds for
// fixed contravariant components and is always checked in that convention; the
// norm law switches sign in the exponent with the index convention.
TransformResiduals transform_residuals(const MetricField& g, const ScalarField& f,
                                       const VectorField& e_field, const ChartPoint& p,
                                       IndexConvention convention =
                                           IndexConvention::ContravariantFixed);

struct MassAdditivityReport {
  LimitEstimate m_g;
  LimitEstimate m_gprime;  // g' = e^{2f} g
  LimitEstimate m_gbar;    // gbar = e^{f} g
  double residual = 0.0;   // m_g + m_g' - 2 m_gbar
};

MassAdditivityReport mass_additivity(const MetricField& g, const ScalarField& f,
                                     std::span<const double> radii,
                                     const SphereQuadrature& quad,
                                     const FluxOptions& options = {});

struct MassDifferenceOptions {
  FluxOptions flux{};
  int radial_nodes = 16;        // Gauss-Legendre nodes per radial panel
  const SphereQuadrature* bulk_quadrature = nullptr;  // defaults to the flux rule
};

// Mass-difference identity for g' = e^{f} g (one-sided convention):
//   m(g') - m(g) = (1/(8 pi)) int_{r=r0} e^{f/4} df(nu) dA_g
//                + (1/(16 pi)) int_{r>r0} e^{f/4} (e^{f} S_g' - S_g) dvol_g
// nu is the g-unit normal pointing toward decreasing r (out of the region,
// into the excised ball); this orientation is pinned by the closed-form flat
// case and is recorded in the report.
struct MassDifferenceReport {
  double lhs = 0.0;             // m(g') - m(g)
  double boundary_term = 0.0;
  double bulk_truncated = 0.0;  // integral over [r0, r_max]
  double tail_estimate = 0.0;   // fitted c R^{-q} completion beyond r_max
  double tail_exponent = 0.0;
  double tail_fit_spread = 0.0;  // disagreement of successive exponent estimates
  bool tail_fit_ok = false;
  double bulk_term = 0.0;       // truncated + tail
  double rhs = 0.0;             // boundary + bulk
  double residual = 0.0;        // lhs - rhs
  double residual_truncated = 0.0;  // lhs - (boundary + bulk_truncated)
  double r0 = 0.0;
  double r_max = 0.0;
  LimitEstimate m_g;
  LimitEstimate m_gprime;
};

MassDifferenceReport mass_difference_identity(const MetricField& g, const ScalarField& f,
                                              double r0, std::span<const double> radii,
                                              const SphereQuadrature& quad,
                                              const MassDifferenceOptions& options = {});

// Residual of S_g' = phi^{-5} (-8 Delta_g phi + S_g phi) for g' = phi^4 g.
double scalar_relation_residual(const MetricField& g, const ScalarField& phi,
                                const ChartPoint& p);

}  // namespace admkit

#endif  // ADMKIT_CONFORMAL_HPP
