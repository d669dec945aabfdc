#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "admkit/asymptotics.hpp"
#include "admkit/catalog.hpp"
#include "admkit/geometry.hpp"
#include "admkit/verdicts.hpp"

using namespace admkit;

namespace {

const std::vector<double> kWideLadder = {32.0, 64.0, 128.0, 256.0, 512.0};

FluxOptions richardson() {
  FluxOptions options;
  options.extrapolation.model = FitModel::Richardson;
  return options;
}

}  // namespace

TEST_CASE("every catalog invariant is reproduced by the generic pipeline") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry entries[] = {
      euclidean(),           schwarzschild_isotropic(0.5), schwarzschild_isotropic(1.0),
      schwarzschild_isotropic(2.0), rn_slice(2.0, 1.0, 0.0), rn_slice(3.0, 1.0, 2.0),
      extreme_rn(1.0)};
  for (const CatalogEntry& entry : entries) {
    CAPTURE(entry.name);

    const LimitEstimate mass = adm_mass(entry.metric, kWideLadder, quad, richardson());
    CHECK(std::abs(mass.value - entry.mass) < 1e-3);

    if (entry.electric) {
      const LimitEstimate q =
          flux_charge(entry.metric, *entry.electric, kWideLadder, quad);
      CHECK(std::abs(q.value - entry.charge_q) < 1e-8);
    }
    if (entry.magnetic) {
      const LimitEstimate p =
          flux_charge(entry.metric, *entry.magnetic, kWideLadder, quad);
      CHECK(std::abs(p.value - entry.charge_p) < 1e-8);
    }

    for (double r : {entry.r_min + 2.0, 2.0 * entry.r_min + 10.0}) {
      const ChartPoint p = r * ChartPoint(0.48, 0.6, 0.64);
      CHECK(scalar_curvature(entry.metric, p) ==
            doctest::Approx(entry.scalar_curvature_profile(r)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("the isotropic horizon sphere is minimal") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  REQUIRE(schw.horizon_radius.has_value());
  const double rh = *schw.horizon_radius;
  CHECK(std::abs(sphere_mean_curvature(schw.metric, rh,
                                       rh * ChartPoint(1.0, 0.0, 0.0))) < 1e-10);
}

TEST_CASE("the charged horizon radius is the root of the lapse profile") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  REQUIRE(rn.horizon_radius.has_value());
  const double rp = *rn.horizon_radius;
  CHECK(1.0 - 2.0 * 2.0 / rp + 1.0 / (rp * rp) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  // mean curvature of coordinate spheres collapses toward the horizon
  const double h_near = sphere_mean_curvature(rn.metric, rp * 1.0001,
                                              rp * 1.0001 * ChartPoint(0.0, 0.0, 1.0));
  const double h_far =
      sphere_mean_curvature(rn.metric, 10.0, ChartPoint(0.0, 0.0, 10.0));
  CHECK(h_near > 0.0);
  CHECK(h_near < 0.01);
  CHECK(h_far > h_near);
}

TEST_CASE("plain and isotropic charts of the vacuum slice carry the same mass") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const double m = 1.0;
  const LimitEstimate iso =
      adm_mass(schwarzschild_isotropic(m).metric, kWideLadder, quad, richardson());
  const LimitEstimate area =
      adm_mass(rn_slice(m, 0.0, 0.0).metric, kWideLadder, quad, richardson());
  CHECK(std::abs(iso.value - area.value) < 2e-3);
}

TEST_CASE("the extreme member saturates the charge inequality") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry ext = extreme_rn(1.0);
  CHECK(ext.mass == 1.0);
  CHECK(*ext.horizon_radius == doctest::Approx(1.0));

  const LimitEstimate mass = adm_mass(ext.metric, kWideLadder, quad, richardson());
  const LimitEstimate q = flux_charge(ext.metric, *ext.electric, kWideLadder, quad);
  CHECK(std::abs(mass.value - std::abs(q.value)) < 1e-3);

  Region region;
  region.r_in = 2.0;
  region.r_out = 50.0;
  region.samples = 300;
  region.seed = 5;
  const ConditionReport margin =
      dominant_charge_margin(ext.metric, *ext.electric, region, false);
  CHECK(margin.min_margin > -1e-6);
  CHECK(margin.margin_quantiles[4] < 1e-6);  // saturated from both sides
  CHECK(margin.verdict == ConditionVerdict::Marginal);
}

TEST_CASE("radial conformal exponent and scalar hair have the documented jets") {
  const ScalarField f = radial_conformal(1.0, 1.0);
  const ChartPoint p(2.0, 0.0, 0.0);
  CHECK(f.value(p) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.jet(p).gradient.norm() == doctest::Approx(0.25).epsilon(1e-13));

  const ScalarField hair = harmonic_hair(2.0);
  CHECK(hair.value(p) == doctest::Approx(1.0));
  // O(1/r) decay: r * phi constant along a ladder
  for (double r : {4.0, 16.0, 64.0}) {
    CHECK(r * hair.value(ChartPoint(0.0, r, 0.0)) == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("catalog constructors reject out-of-range parameters") {
  CHECK_THROWS_AS(schwarzschild_isotropic(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(rn_slice(1.0, 2.0, 0.0), std::invalid_argument);  // super-extremal
  CHECK_THROWS_AS(extreme_rn(0.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_conformal(1.0, 0.4), std::invalid_argument);
}

TEST_CASE("catalog entries evaluate only outside their inner radius") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  const double rp = *rn.horizon_radius;
  CHECK_THROWS_AS(rn.metric.value(ChartPoint(0.5 * rp, 0.0, 0.0)), std::domain_error);
  CHECK_NOTHROW(rn.metric.value(ChartPoint(1.5 * rp, 0.0, 0.0)));
}
