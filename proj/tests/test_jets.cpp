#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "admkit/catalog.hpp"
#include "admkit/fields.hpp"
#include "admkit/jets.hpp"

using namespace admkit;

namespace {

ScalarField inverse_radius(double a) {
  return analytic_field(
      [a](auto x, auto y, auto z) { return a / sqrt(x * x + y * y + z * z); }, 1.0);
}

}  // namespace

TEST_CASE("jet of a/r matches the closed-form derivatives") {
  const ScalarField f = inverse_radius(1.0);
  const ChartPoint p(2.0, 0.0, 0.0);
  const Jet j = f.jet(p);
  CHECK(j.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(j.gradient.x() == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(j.gradient.y() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(j.gradient.z() == doctest::Approx(0.0).epsilon(1e-14));
  // hessian of 1/r: 3 x_i x_j / r^5 - delta_ij / r^3
  CHECK(j.hessian(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(j.hessian(1, 1) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(j.hessian(2, 2) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(std::abs(j.hessian(0, 1)) < 1e-15);
}

TEST_CASE("constant field has vanishing derivatives") {
  const ScalarField c = ScalarField::constant(4.25);
  const Jet j = c.jet(ChartPoint(1.0, -2.0, 0.5));
  CHECK(j.value == 4.25);
  CHECK(j.gradient.norm() == 0.0);
  CHECK(j.hessian.norm() == 0.0);
}

TEST_CASE("jet arithmetic reproduces hand derivatives of elementary functions") {
  const ChartPoint p(1.2, -0.7, 0.4);
  const double r = radius(p);

  SUBCASE("exp(a/r)") {
    const double a = 0.8;
    const ScalarField f =
        analytic_field([a](auto x, auto y, auto z) { return exp(a / sqrt(x * x + y * y + z * z)); });
    const Jet j = f.jet(p);
    const double e = std::exp(a / r);
    CHECK(j.value == doctest::Approx(e).epsilon(1e-14));
    // grad = exp(a/r) * (-a x / r^3)
    for (int k = 0; k < 3; ++k) {
      CHECK(j.gradient[k] == doctest::Approx(-e * a * p[k] / (r * r * r)).epsilon(1e-13));
    }
  }

  SUBCASE("log, sin, cos, pow chain") {
    const ScalarField f = analytic_field([](auto x, auto y, auto z) {
      auto r2 = x * x + y * y + z * z;
      return sin(log(r2)) + cos(x) * pow(r2, 1.5);
    });
    // compare against a fine finite difference of the same closed form
    const Jet exact = f.jet(p);
    const Jet fd = f.fd_jet(p, 1e-5);
    CHECK((exact.gradient - fd.gradient).norm() < 1e-9);
    // second-derivative stencils lose ~eps/h^2 to roundoff
    CHECK((exact.hessian - fd.hessian).norm() < 1e-4);
  }
}

TEST_CASE("finite-difference jet of a catalog component matches the exact jet") {
  // spec example: max abs difference < 1e-8 at r = 10
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const ScalarField& g11 = schw.metric.component(0, 0);
  const ChartPoint p(6.0, 8.0, 0.0);

  const Jet exact = g11.jet(p);
  const Jet fd = g11.fd_jet(p);
  CHECK(std::abs(exact.value - fd.value) < 1e-12);
  CHECK((exact.gradient - fd.gradient).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((exact.hessian - fd.hessian).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("finite differences converge at 4th order on smooth fields") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const ScalarField& g11 = schw.metric.component(0, 0);
  const ChartPoint p(6.0, 8.0, 0.0);
  const Jet exact = g11.jet(p);

  const double h1 = 4e-3, h2 = 2e-3;
  const double e1 = (g11.fd_jet(p, h1).gradient - exact.gradient).norm();
  const double e2 = (g11.fd_jet(p, h2).gradient - exact.gradient).norm();
  const double rate = e1 / e2;
  CHECK(rate > 8.0);   // nominal 16x per halving
  CHECK(rate < 40.0);
}

TEST_CASE("product fields obey the Leibniz rule through finite differences") {
  // FD-backed fields (no exact jets): gradient of f*g vs f grad g + g grad f
  const ScalarField f = ScalarField::from_evaluator(
      [](const ChartPoint& p) { return std::exp(0.3 / radius(p)); });
  const ScalarField g = ScalarField::from_evaluator(
      [](const ChartPoint& p) { return 1.0 + 2.0 / radius(p); });
  const ScalarField prod = ScalarField::from_evaluator(
      [](const ChartPoint& p) {
        return std::exp(0.3 / radius(p)) * (1.0 + 2.0 / radius(p));
      });

  const ChartPoint points[] = {{2.0, 0.5, -1.0}, {5.0, -3.0, 2.0}, {0.0, 0.0, 3.0}};
  for (const ChartPoint& p : points) {
    const Jet jf = f.jet(p);
    const Jet jg = g.jet(p);
    const Jet jp = prod.jet(p);
    const Eigen::Vector3d leibniz = jf.value * jg.gradient + jg.value * jf.gradient;
    CHECK((jp.gradient - leibniz).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("jet evaluation respects the domain inner boundary") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const ScalarField& g11 = schw.metric.component(0, 0);
  CHECK_THROWS_AS(g11.value(ChartPoint(0.2, 0.0, 0.0)), std::domain_error);
  // FD jets additionally need 2h of clearance
  const ScalarField fd_only = ScalarField::from_evaluator(
      [](const ChartPoint& p) { return 1.0 / radius(p); }, 1.0, 0.5);
  CHECK_THROWS_AS(fd_only.fd_jet(ChartPoint(0.5, 0.0, 0.0), 1e-2), std::domain_error);
  CHECK_NOTHROW(fd_only.fd_jet(ChartPoint(0.6, 0.0, 0.0), 1e-2));
}
