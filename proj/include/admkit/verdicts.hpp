#ifndef ADMKIT_VERDICTS_HPP
#define ADMKIT_VERDICTS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "admkit/asymptotics.hpp"
#include "admkit/conformal.hpp"
#include "admkit/fields.hpp"

namespace admkit {

// Annulus sampled by a seeded low-discrepancy sequence; "everywhere"
// hypotheses are checked on these samples plus whatever boundary grid the
// check adds. Samples are reproducible from the seed alone.
struct Region {
  double r_in = 2.0;
  double r_out = 50.0;
  int samples = 200;
  std::uint64_t seed = 0;
};

std::vector<ChartPoint> sample_region(const Region& region);

enum class ConditionVerdict { HoldsOnSamples, Marginal, Violated };

const char* to_string(ConditionVerdict v);

struct ConditionReport {
  std::string condition;
  double min_margin = 0.0;
  ChartPoint argmin = ChartPoint::Zero();
  std::array<double, 5> margin_quantiles{};  // min, q25, median, q75, max
  ConditionVerdict verdict = ConditionVerdict::HoldsOnSamples;
  double tolerance = 1e-4;
  Region region;
  std::vector<std::string> notes;
};

// Scans margin(p) over the region; verdict is Marginal when |min| < tolerance,
// Violated when min <= -tolerance, HoldsOnSamples otherwise.
ConditionReport scan_condition(std::string name, const Region& region,
                               const std::function<double(const ChartPoint&)>& margin,
                               double tolerance);

// margin = S_g - 2|E|^2_g  [- |div_g E| with the density term included]
ConditionReport dominant_charge_margin(const MetricField& g, const VectorField& e_field,
                                       const Region& region, bool include_divergence,
                                       double tolerance = 1e-4);

enum class TheoremClassification {
  HypothesesHoldConclusionHolds,
  HypothesesFailConclusionHolds,
  HypothesesFailConclusionFails,
  HypothesesHoldConclusionFails,  // the FLAG outcome: a numerical counterexample
};

const char* to_string(TheoremClassification c);

struct TheoremReport {
  std::string theorem;
  std::vector<ConditionReport> hypotheses;
  std::vector<std::pair<std::string, LimitEstimate>> estimates;
  double conclusion_margin = 0.0;
  double conclusion_tolerance = 5e-3;
  TheoremClassification classification =
      TheoremClassification::HypothesesHoldConclusionHolds;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::string> notes;
};

struct VerdictOptions {
  double marginal_tolerance = 1e-4;
  double conclusion_tolerance = 5e-3;
  FluxOptions flux{};
};

// Electric conformal mass inequality: hypotheses
//   S_g + e^{2f} S_g' >= 4 |E|^2_g
//   |grad_g f|^2 >= |3 e^f f_i E^i| + |e^f div_g E|
// conclusion m_g + m_g' >= 2|Q| with g' = e^{2f} g and Q measured under g.
TheoremReport theorem_electric(const MetricField& g, const ScalarField& f,
                               const VectorField& e_field, const Region& region,
                               std::span<const double> radii,
                               const SphereQuadrature& quad,
                               const VerdictOptions& options = {});

// Electromagnetic extension: additionally requires div_gbar B = 0, strengthens
// the first hypothesis by 4|B|^2_g, and concludes m_g + m_g' >= 2 sqrt(Q^2+P^2).
TheoremReport theorem_electromagnetic(const MetricField& g, const ScalarField& f,
                                      const VectorField& e_field,
                                      const VectorField& b_field, const Region& region,
                                      std::span<const double> radii,
                                      const SphereQuadrature& quad,
                                      const VerdictOptions& options = {});

// Inner-boundary condition on the r0 sphere (one-sided convention g' = e^f g):
//   margin = lambda0 - H_g - (1/4) df(nu) - |g(E, nu)|
// with nu the unit normal toward increasing r. Scanned over the angular grid.
ConditionReport boundary_condition_margin(const MetricField& g, const ScalarField& f,
                                          const VectorField& e_field, double r0,
                                          int n_theta = 32, int n_phi = 64,
                                          double tolerance = 1e-4);

// Conformal-scalar-field mass statement for g' = phi^4 g: hypothesis
//   S_g + (1/3) S_g' phi^4 >= 2 phi^{-2} |grad phi|^2_g,
// energy-density identity 24 T00 = 3 S_g phi^2 + S_g' phi^6 - 6 |grad phi|^2
// checked as a diagnostic, conclusion m_g >= 0.
TheoremReport scalar_field_theorem(const MetricField& g, const ScalarField& phi,
                                   const Region& region, std::span<const double> radii,
                                   const SphereQuadrature& quad,
                                   const VerdictOptions& options = {});

}  // namespace admkit

#endif  // ADMKIT_VERDICTS_HPP
