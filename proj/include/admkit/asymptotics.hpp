#ifndef ADMKIT_ASYMPTOTICS_HPP
#define ADMKIT_ASYMPTOTICS_HPP

#include <span>
#include <vector>

#include "admkit/fields.hpp"
#include "admkit/quadrature.hpp"

namespace admkit {

// An r -> infinity limit extracted from flux values on a radius ladder.
struct LimitEstimate {
  double value = 0.0;
  std::vector<double> radii;
  std::vector<double> raw;  // per-radius flux values
  double fit_exponent = 1.0;
  double fit_residual = 0.0;     // rms misfit of the tail model
  double error_estimate = 0.0;   // honest scale estimate; may undershoot the truth
  bool tail_monotone = true;     // |raw - value| non-increasing along the ladder
};

enum class FitModel {
  FixedExponent,  // least squares y = m + c r^{-p} with pinned p (default p = 1)
  FreeExponent,   // same model with p fitted
  Richardson,     // full-order polynomial extrapolation in 1/r to r = infinity
};

struct ExtrapolationOptions {
  FitModel model = FitModel::FixedExponent;
  double exponent = 1.0;
};

LimitEstimate extrapolate_limit(std::span<const double> radii,
                                std::span<const double> raw,
                                const ExtrapolationOptions& options = {});

enum class SphereMeasure {
  Euclidean,  // flat outward normal and r^2 dOmega (standard ADM practice)
  Induced,    // g-unit normal and g-induced area element (cross-check variant)
};

struct FluxOptions {
  ExtrapolationOptions extrapolation{};
  SphereMeasure adm_measure = SphereMeasure::Euclidean;
  int threads = 1;
};

// ADM mass m = (1/(16 pi)) lim_r int_{S_r} (d_i g_ij - d_j g_ii) nu^j dA.
LimitEstimate adm_mass(const MetricField& g, std::span<const double> radii,
                       const SphereQuadrature& quad, const FluxOptions& options = {});

// Total charge (1/(4 pi)) lim_r int_{S_r} g(V, n_g) dA_g of a contravariant
// field; the integrand collapses to V.u sqrt(det g) r^2 dOmega.
LimitEstimate flux_charge(const MetricField& g, const VectorField& v,
                          std::span<const double> radii, const SphereQuadrature& quad,
                          const FluxOptions& options = {});

// Raw flux values without extrapolation (one value per radius).
double adm_flux_at_radius(const MetricField& g, double r, const SphereQuadrature& quad,
                          SphereMeasure measure = SphereMeasure::Euclidean,
                          int threads = 1);
double charge_flux_at_radius(const MetricField& g, const VectorField& v, double r,
                             const SphereQuadrature& quad, int threads = 1);

}  // namespace admkit

#endif  // ADMKIT_ASYMPTOTICS_HPP
