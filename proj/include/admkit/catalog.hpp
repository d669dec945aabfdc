#ifndef ADMKIT_CATALOG_HPP
#define ADMKIT_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "admkit/fields.hpp"

namespace admkit {

// A named exact solution with closed-form jets and known invariants. Entries
// are oracles: every known invariant must be reproduced by the generic
// measuring pipeline, which contains no entry-specific code paths.
struct CatalogEntry {
  std::string name;
  MetricField metric;
  std::optional<VectorField> electric;
  std::optional<VectorField> magnetic;
  std::optional<ScalarField> scalar;

  double mass = 0.0;
  double charge_q = 0.0;
  double charge_p = 0.0;
  std::function<double(double)> scalar_curvature_profile;  // S as a function of r
  std::optional<double> horizon_radius;  // minimal-sphere coordinate radius
  double r_min = 0.0;

  std::vector<std::pair<std::string, double>> known_invariants() const;
};

// Flat space: zero mass, zero curvature.
CatalogEntry euclidean();

// g = (1 + m/2r)^4 delta, scalar-flat, ADM mass m, minimal sphere at r = m/2.
CatalogEntry schwarzschild_isotropic(double m);

// Charged static slice g_rr = (1 - 2m/r + (Q^2+P^2)/r^2)^{-1}, angular r^2;
// E is the unique spherical field with flux Q, |E|^2_g = Q^2/r^4 and
// div_g E = 0 (sqrt(det g) E^r constant); B is the same construction with P.
CatalogEntry rn_slice(double m, double q, double p);

// The saturating member m = |Q|: mass minus charge margin exactly zero.
CatalogEntry extreme_rn(double q);

// f = a r^{-tau} with exact jets; the conformal-exponent family of the tests.
ScalarField radial_conformal(double a, double tau);

// E^i = q0 x^i / r^3, flux q0 through every sphere, divergence-free.
VectorField coulomb(double q0);

// phi = a / r: harmonic in flat space, the minimal scalar-hair profile.
ScalarField harmonic_hair(double a);

// All parameterless catalog descriptions for CLI listing.
std::vector<std::string> catalog_signatures();

}  // namespace admkit

#endif  // ADMKIT_CATALOG_HPP
