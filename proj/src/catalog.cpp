#include "admkit/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace admkit {

std::vector<std::pair<std::string, double>> CatalogEntry::known_invariants() const {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("mass", mass);
  out.emplace_back("charge_q", charge_q);
  out.emplace_back("charge_p", charge_p);
  if (horizon_radius) out.emplace_back("horizon_radius", *horizon_radius);
  out.emplace_back("r_min", r_min);
  return out;
}

CatalogEntry euclidean() {
  CatalogEntry e;
  e.name = "euclidean";
  e.metric = MetricField::euclidean();
  e.scalar_curvature_profile = [](double) { return 0.0; };
  return e;
}

CatalogEntry schwarzschild_isotropic(double m) {
  if (!(m > 0.0)) {
    throw std::invalid_argument("schwarzschild_isotropic: m must be positive");
  }
  const double r_min = 0.5 * m;
  std::array<ScalarField, 6> comp;
  int idx = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      if (i != j) {
        comp[idx++] = ScalarField::constant(0.0);
        continue;
      }
      comp[idx++] = analytic_field(
          [m](auto x, auto y, auto z) {
            auto psi = 1.0 + (0.5 * m) / sqrt(x * x + y * y + z * z);
            auto psi2 = psi * psi;
            return psi2 * psi2;
          },
          1.0, r_min);
    }
  }
  CatalogEntry e;
  e.name = "schwarzschild_isotropic";
  e.metric = MetricField::from_components(std::move(comp), r_min, 1.0);
  e.mass = m;
  e.scalar_curvature_profile = [](double) { return 0.0; };
  e.horizon_radius = r_min;
  e.r_min = r_min;
  return e;
}

CatalogEntry rn_slice(double m, double q, double p) {
  const double q2 = q * q + p * p;
  if (m < std::sqrt(q2)) {
    throw std::invalid_argument("rn_slice: requires m >= sqrt(Q^2 + P^2)");
  }
  const double r_plus = m + std::sqrt(std::max(0.0, m * m - q2));
  auto profile = [m, q2](auto r) { return 1.0 / (1.0 - 2.0 * m / r + q2 / (r * r)); };

  CatalogEntry e;
  e.name = "rn_slice";
  e.metric = radial_metric(profile, r_plus, 1.0);
  e.mass = m;
  e.charge_q = q;
  e.charge_p = p;
  e.scalar_curvature_profile = [q2](double r) { return 2.0 * q2 / (r * r * r * r); };
  e.horizon_radius = r_plus;
  e.r_min = r_plus;

  // Radial field with sqrt(det g) E^r constant: E^i = c x^i / (r^3 sqrt(A(r))).
  auto radial_field = [&](double c) {
    std::array<ScalarField, 3> comp;
    for (int i = 0; i < 3; ++i) {
      comp[i] = analytic_field(
          [c, i, profile](auto x, auto y, auto z) {
            auto r2 = x * x + y * y + z * z;
            auto r = sqrt(r2);
            return c * detail::coordinate_of(i, x, y, z) /
                   (r2 * r * sqrt(profile(r)));
          },
          2.0, r_plus);
    }
    return VectorField(comp[0], comp[1], comp[2], 2.0);
  };
  if (q != 0.0) e.electric = radial_field(q);
  if (p != 0.0) e.magnetic = radial_field(p);
  return e;
}

CatalogEntry extreme_rn(double q) {
  if (q == 0.0) throw std::invalid_argument("extreme_rn: Q must be nonzero");
  CatalogEntry e = rn_slice(std::abs(q), q, 0.0);
  e.name = "extreme_rn";
  return e;
}

ScalarField radial_conformal(double a, double tau) {
  if (!(tau > 0.5)) {
    throw std::invalid_argument("radial_conformal: requires tau > 1/2");
  }
  return analytic_field(
      [a, tau](auto x, auto y, auto z) {
        return a * pow(sqrt(x * x + y * y + z * z), -tau);
      },
      tau);
}

VectorField coulomb(double q0) {
  std::array<ScalarField, 3> comp;
  for (int i = 0; i < 3; ++i) {
    comp[i] = analytic_field(
        [q0, i](auto x, auto y, auto z) {
          auto r2 = x * x + y * y + z * z;
          return q0 * detail::coordinate_of(i, x, y, z) / (r2 * sqrt(r2));
        },
        2.0);
  }
  return VectorField(comp[0], comp[1], comp[2], 2.0);
}

ScalarField harmonic_hair(double a) {
  return analytic_field(
      [a](auto x, auto y, auto z) { return a / sqrt(x * x + y * y + z * z); }, 1.0);
}

std::vector<std::string> catalog_signatures() {
  return {
      "euclidean()",
      "schwarzschild_isotropic(m)",
      "rn_slice(m, q, p)",
      "extreme_rn(q)",
      "radial_conformal(a, tau)",
      "coulomb(q0)",
      "harmonic_hair(a)",
  };
}

}  // namespace admkit
