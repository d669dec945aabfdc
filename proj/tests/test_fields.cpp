#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "admkit/catalog.hpp"
#include "admkit/fields.hpp"
#include "admkit/verdicts.hpp"

using namespace admkit;

namespace {

MetricField conformally_flat(double c) {
  // (1 + c/r) delta
  return MetricField::euclidean().scaled_by(
      analytic_field([c](auto x, auto y, auto z) {
        return 1.0 + c / sqrt(x * x + y * y + z * z);
      }),
      1.0);
}

const std::vector<double> kLadder = {16.0, 32.0, 64.0, 128.0, 256.0};

}  // namespace

TEST_CASE("decay report vanishes identically for the flat metric") {
  for (const DecayRow& row : decay_report(MetricField::euclidean(), kLadder)) {
    CHECK(row.sup_scaled_deviation == 0.0);
  }
}

TEST_CASE("decay report for the m=1 isotropic metric hovers at 2m") {
  const CatalogEntry schw = schwarzschild_isotropic(1.0);
  const auto table = decay_report(schw.metric, kLadder);
  REQUIRE(table.size() == kLadder.size());
  for (const DecayRow& row : table) {
    // (1 + m/2r)^4 - 1 = 2m/r + O(r^-2), so the scaled deviation creeps down to 2m
    CHECK(row.sup_scaled_deviation > 2.0);
    CHECK(row.sup_scaled_deviation < 2.11);
  }
  CHECK(table.back().sup_scaled_deviation < table.front().sup_scaled_deviation);
}

TEST_CASE("decay report for (1+c/r) delta is exactly c") {
  const auto table = decay_report(conformally_flat(1.0), kLadder);
  for (const DecayRow& row : table) {
    CHECK(row.sup_scaled_deviation == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("decay report validates its radius ladder") {
  const MetricField flat = MetricField::euclidean();
  std::vector<double> bad = {16.0, 8.0};
  CHECK_THROWS_AS(decay_report(flat, bad), std::invalid_argument);
}

TEST_CASE("vector decay report stays bounded for catalog fields") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.0);
  const auto table = decay_report(*rn.electric, kLadder);
  for (const DecayRow& row : table) {
    // component sup is Q max_i|u_i| / sqrt(A(r)) -> Q as r grows
    CHECK(row.sup_scaled_deviation < 1.05);
    CHECK(row.sup_scaled_deviation > 0.8);
  }
}

TEST_CASE("catalog metrics are positive definite on 1000 quasi-random points") {
  const CatalogEntry entries[] = {euclidean(), schwarzschild_isotropic(1.0),
                                  rn_slice(2.0, 1.0, 0.0), extreme_rn(1.0)};
  for (const CatalogEntry& entry : entries) {
    Region region;
    region.r_in = entry.r_min + 1.0;
    region.r_out = 100.0;
    region.samples = 1000;
    region.seed = 7;
    for (const ChartPoint& p : sample_region(region)) {
      CAPTURE(entry.name);
      CHECK(positive_definite(entry.metric.value(p)));
    }
  }
}

TEST_CASE("exact jets agree with the evaluator and are symmetric") {
  const CatalogEntry rn = rn_slice(2.0, 1.0, 0.5);
  Region region;
  region.r_in = rn.r_min + 0.5;
  region.r_out = 60.0;
  region.samples = 50;
  region.seed = 11;
  for (const ChartPoint& p : sample_region(region)) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        const ScalarField& comp = rn.metric.component(i, j);
        const Jet jet = comp.jet(p);
        CHECK(jet.value == doctest::Approx(comp.value(p)).epsilon(1e-14));
        CHECK((jet.hessian - jet.hessian.transpose()).norm() < 1e-14);
      }
    }
  }
}

TEST_CASE("metric jets expose symmetric component derivatives") {
  const CatalogEntry schw = schwarzschild_isotropic(2.0);
  const MetricJet mj = schw.metric.jet(ChartPoint(3.0, -4.0, 1.0));
  CHECK((mj.g - mj.g.transpose()).norm() == 0.0);
  for (int k = 0; k < 3; ++k) {
    CHECK((mj.dg[k] - mj.dg[k].transpose()).norm() == 0.0);
    for (int l = 0; l < 3; ++l) {
      CHECK((mj.ddg[k][l] - mj.ddg[l][k]).norm() < 1e-14);
    }
  }
}

TEST_CASE("positive_definite rejects indefinite matrices") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  CHECK(positive_definite(m));
  m(2, 2) = -1.0;
  CHECK_FALSE(positive_definite(m));
  m = Eigen::Matrix3d::Zero();
  CHECK_FALSE(positive_definite(m));
}
