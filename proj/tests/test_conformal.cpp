#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "admkit/catalog.hpp"
#include "admkit/conformal.hpp"
#include "admkit/verdicts.hpp"

using namespace admkit;

namespace {

const std::vector<double> kLadder = {16.0, 32.0, 64.0, 128.0, 256.0};

Region annulus(double r_in, double r_out, int samples, std::uint64_t seed) {
  Region region;
  region.r_in = r_in;
  region.r_out = r_out;
  region.samples = samples;
  region.seed = seed;
  return region;
}

}  // namespace

TEST_CASE("rescale with c = 0 is the identity") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const MetricField same = rescale(schw.metric, radial_conformal(0.7, 1.0), 0.0);
  const ChartPoint p(3.0, -1.0, 2.0);
  CHECK((same.value(p) - schw.metric.value(p)).norm() < 1e-15);
}

TEST_CASE("rescale evaluates e^{cf} g componentwise") {
  const MetricField gprime =
      rescale(MetricField::euclidean(), radial_conformal(1.0, 1.0), 2.0);
  // f = 1/r at (2,0,0): e^{2 * 0.5} = e
  CHECK(gprime.component(0, 0).value(ChartPoint(2.0, 0.0, 0.0)) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(gprime.component(0, 1).value(ChartPoint(2.0, 0.0, 0.0)) == 0.0);
}

TEST_CASE("repeated rescaling adds exponents") {
  const ScalarField f = radial_conformal(0.6, 1.0);
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  const MetricField twice = rescale(rescale(rn.metric, f, 1.0), f, 1.0);
  const MetricField once = rescale(rn.metric, f, 2.0);
  const ChartPoint p(5.0, 1.0, -2.0);
  CHECK((twice.value(p) - once.value(p)).norm() < 1e-12);
  // jets compose too
  const MetricJet a = twice.jet(p);
  const MetricJet b = once.jet(p);
  for (int k = 0; k < 3; ++k) CHECK((a.dg[k] - b.dg[k]).norm() < 1e-12);
}

TEST_CASE("curvature relation residual vanishes for f = 0") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  CHECK(std::abs(eq2_residual(schw.metric, ScalarField::constant(0.0),
                              ChartPoint(4.0, 2.0, 1.0))) < 1e-10);
}

TEST_CASE("curvature relation on the flat base matches the closed form") {
  // both sides equal -e^{-f} |grad f|^2 / 2 for harmonic f = a/r
  const MetricField flat = MetricField::euclidean();
  const ScalarField f = radial_conformal(1.0, 1.0);
  const ChartPoint p(3.0, 0.0, 0.0);

  const double grad_sq = 1.0 / 81.0;
  const double expected = -0.5 * std::exp(-1.0 / 3.0) * grad_sq;
  const double s_bar = scalar_curvature(rescale(flat, f, 1.0), p);
  CHECK(s_bar == doctest::Approx(expected).epsilon(1e-8));
  CHECK(std::abs(eq2_residual(flat, f, p)) < 1e-8);
}

TEST_CASE("curvature relation holds on the curved base") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  CHECK(std::abs(eq2_residual(schw.metric, radial_conformal(0.5, 1.0),
                              ChartPoint(5.0, 0.0, 0.0))) < 1e-5);
}

TEST_CASE("curvature relation residual stays below 1e-5 across the catalog family") {
  const CatalogEntry entries[] = {euclidean(), schwarzschild_isotropic(1.0),
                                  rn_slice(2.0, 1.0, 0.0)};
  for (const CatalogEntry& entry : entries) {
    for (double a : {-0.5, 0.5}) {
      const ScalarField f = radial_conformal(a, 1.0);
      const Region region =
          annulus(std::max(2.0, 1.25 * entry.r_min), 50.0, 100, 23);
      for (const ChartPoint& p : sample_region(region)) {
        CAPTURE(entry.name);
        CAPTURE(a);
        CHECK(std::abs(eq2_residual(entry.metric, f, p)) < 1e-5);
      }
    }
  }
}

TEST_CASE("field transformation residuals vanish for f = 0") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  const TransformResiduals res = transform_residuals(
      rn.metric, ScalarField::constant(0.0), *rn.electric, ChartPoint(5.0, 2.0, 0.0));
  CHECK(std::abs(res.norm_law) < 1e-12);
  CHECK(std::abs(res.divergence_law) < 1e-12);
}

TEST_CASE("field transformation laws hold on the flat base") {
  const MetricField flat = MetricField::euclidean();
  const ScalarField f = radial_conformal(0.7, 1.0);
  const VectorField e = coulomb(1.0);
  const ChartPoint p(2.0, 1.0, 2.0);

  const TransformResiduals contra = transform_residuals(flat, f, e, p);
  CHECK(std::abs(contra.norm_law) < 1e-8);
  CHECK(std::abs(contra.divergence_law) < 1e-8);

  const TransformResiduals cov =
      transform_residuals(flat, f, e, p, IndexConvention::CovariantFixed);
  CHECK(std::abs(cov.norm_law) < 1e-8);
}

TEST_CASE("norm scales with e^{f} for fixed contravariant components") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  const ScalarField f = radial_conformal(-0.4, 1.0);
  const ChartPoint p(6.0, 0.0, 3.0);
  const double lhs = norm_sq(rescale(rn.metric, f, 1.0), *rn.electric, p);
  const double rhs = std::exp(f.value(p)) * norm_sq(rn.metric, *rn.electric, p);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("mass additivity: trivial family") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const MassAdditivityReport rep =
      mass_additivity(schw.metric, ScalarField::constant(0.0), kLadder, quad);
  CHECK(std::abs(rep.residual) < 1e-12);
  CHECK(rep.m_g.value == doctest::Approx(rep.m_gbar.value));
}

TEST_CASE("mass additivity on the flat base reproduces the c/2 oracle") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const MassAdditivityReport rep = mass_additivity(
      MetricField::euclidean(), radial_conformal(1.0, 1.0), kLadder, quad);
  CHECK(std::abs(rep.m_g.value) < 1e-10);
  CHECK(rep.m_gprime.value == doctest::Approx(1.0).epsilon(2e-3));
  CHECK(rep.m_gbar.value == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(std::abs(rep.residual) < 1e-3);
}

TEST_CASE("mass additivity on the curved base") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const MassAdditivityReport rep =
      mass_additivity(schw.metric, radial_conformal(0.6, 1.0), kLadder, quad);
  CHECK(std::abs(rep.residual) < 1e-3);
}

TEST_CASE("mass additivity holds across the catalog family grid") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry entries[] = {euclidean(), schwarzschild_isotropic(1.0),
                                  rn_slice(2.0, 1.0, 0.0)};
  for (const CatalogEntry& entry : entries) {
    for (double a : {-0.5, 0.3, 0.5}) {
      const MassAdditivityReport rep =
          mass_additivity(entry.metric, radial_conformal(a, 1.0), kLadder, quad);
      CAPTURE(entry.name);
      CAPTURE(a);
      CHECK(std::abs(rep.residual) < 1e-3);
    }
  }
}

TEST_CASE("mass difference identity: trivial case") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const MassDifferenceReport rep = mass_difference_identity(
      MetricField::euclidean(), ScalarField::constant(0.0), 1.0, kLadder, quad);
  CHECK(std::abs(rep.lhs) < 1e-12);
  CHECK(std::abs(rep.rhs) < 1e-12);
}

TEST_CASE("mass difference identity: closed-form flat case") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const double a = 0.4, r0 = 1.0;
  MassDifferenceOptions options;
  options.flux.extrapolation.model = FitModel::Richardson;
  const MassDifferenceReport rep = mass_difference_identity(
      MetricField::euclidean(), radial_conformal(a, 1.0), r0, kLadder, quad, options);

  // lhs = a/2; boundary = (a/2) e^{a/4 r0}; bulk = -(a/2)(e^{a/4 r0} - 1)
  const double boundary = 0.5 * a * std::exp(0.25 * a / r0);
  CHECK(rep.lhs == doctest::Approx(0.5 * a).epsilon(1e-6));
  CHECK(rep.boundary_term == doctest::Approx(boundary).epsilon(1e-12));
  CHECK(rep.bulk_term == doctest::Approx(0.5 * a - boundary).epsilon(1e-4).scale(1.0));
  CHECK(rep.rhs == doctest::Approx(0.2).epsilon(1e-3));
  CHECK(std::abs(rep.residual) < 1e-3);
}

TEST_CASE("mass difference identity on the curved base") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  MassDifferenceOptions options;
  options.flux.extrapolation.model = FitModel::Richardson;
  const MassDifferenceReport rep = mass_difference_identity(
      schw.metric, radial_conformal(0.3, 1.0), 2.0, kLadder, quad, options);
  CHECK(std::abs(rep.residual) < 5e-3);
}

TEST_CASE("mass difference truncation error is tail dominated") {
  const SphereQuadrature quad = SphereQuadrature::gauss_legendre(16, 32);
  const ScalarField f = radial_conformal(0.4, 1.0);
  MassDifferenceOptions options;
  options.flux.extrapolation.model = FitModel::Richardson;

  const std::vector<double> shorter = {16.0, 32.0, 64.0, 128.0, 256.0};
  const std::vector<double> longer = {16.0, 32.0, 64.0, 128.0, 256.0, 512.0};
  const MassDifferenceReport a = mass_difference_identity(
      MetricField::euclidean(), f, 1.0, shorter, quad, options);
  const MassDifferenceReport b = mass_difference_identity(
      MetricField::euclidean(), f, 1.0, longer, quad, options);
  const double ratio = std::abs(a.residual_truncated) / std::abs(b.residual_truncated);
  CHECK(ratio > 1.5);
  CHECK(ratio < 4.0);
  // the tail-completed residual beats the truncated one
  CHECK(std::abs(a.residual) < std::abs(a.residual_truncated));
}

TEST_CASE("scalar relation residual: unit field") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  CHECK(std::abs(scalar_relation_residual(rn.metric, ScalarField::constant(1.0),
                                          ChartPoint(5.0, 0.0, 0.0))) < 1e-10);
}

TEST_CASE("scalar relation residual: harmonic conformal factor on the flat base") {
  // phi = 1 + m/2r turns delta into the vacuum slice; S_g' = 0 on both routes
  const MetricField flat = MetricField::euclidean();
  const ScalarField phi = analytic_field(
      [](auto x, auto y, auto z) { return 1.0 + 0.5 / sqrt(x * x + y * y + z * z); });
  const ChartPoint p(4.0, 0.0, 0.0);
  CHECK(std::abs(scalar_curvature(rescale_by_power(flat, phi, 4.0), p)) < 1e-10);
  CHECK(std::abs(scalar_relation_residual(flat, phi, p)) < 1e-6);
}

TEST_CASE("scalar relation residual: generic profile") {
  const MetricField flat = MetricField::euclidean();
  const ScalarField phi = analytic_field([](auto x, auto y, auto z) {
    auto r = sqrt(x * x + y * y + z * z);
    return 1.0 + 1.0 / r + 0.3 / (r * r);
  });
  CHECK(std::abs(scalar_relation_residual(flat, phi, ChartPoint(3.0, 0.0, 0.0))) < 1e-5);
}

TEST_CASE("scalar relation requires a positive field") {
  const MetricField flat = MetricField::euclidean();
  CHECK_THROWS_AS(
      scalar_relation_residual(flat, ScalarField::constant(-1.0), ChartPoint(2.0, 0.0, 0.0)),
      std::domain_error);
}

TEST_CASE("conformal laplacian consistency across sampled points") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const ScalarField phi = analytic_field(
      [](auto x, auto y, auto z) { return 1.0 + 0.3 / sqrt(x * x + y * y + z * z); });
  for (const ChartPoint& p : sample_region(annulus(2.0, 50.0, 60, 31))) {
    CHECK(std::abs(scalar_relation_residual(schw.metric, phi, p)) < 1e-5);
  }
}
