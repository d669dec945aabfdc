#ifndef ADMKIT_FIELDS_HPP
#define ADMKIT_FIELDS_HPP

#include <array>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "admkit/jets.hpp"

namespace admkit {

// All fields live on one asymptotic Cartesian chart R^3 \ B_{r_min}(0).
using ChartPoint = Eigen::Vector3d;

inline double radius(const ChartPoint& p) { return p.norm(); }

inline constexpr double kDefaultFdRelStep = 1e-4;

// 4th-order central-difference jet of a raw evaluator. Every stencil point
// stays inside the closed ball of radius 2h around p (mixed partials use a
// diagonal line stencil with step h/sqrt(2)), so callers only have to keep
// 2h of clearance from the domain boundary.
Jet finite_difference_jet(const std::function<double(const ChartPoint&)>& f,
                          const ChartPoint& p, double h);

// Scalar field with value access and derivative access up to second order.
// Fields constructed from closed forms carry analytic jets; fields built from
// a bare evaluator fall back to finite differences with a radius-scaled step
// h = h_rel * max(1, r).
class ScalarField {
 public:
  ScalarField();  // the zero field

  double value(const ChartPoint& p) const;
  double operator()(const ChartPoint& p) const { return value(p); }

  // Exact jet when available, otherwise the finite-difference fallback.
  Jet jet(const ChartPoint& p) const;

  // Finite-difference jet regardless of exactness; used by consistency tests.
  Jet fd_jet(const ChartPoint& p, double h_rel = kDefaultFdRelStep) const;

  bool has_exact_jet() const { return exact_; }
  double declared_decay() const { return decay_; }
  double inner_radius() const { return inner_radius_; }
  double fd_step(const ChartPoint& p) const;

  static ScalarField constant(double c);
  static ScalarField from_evaluator(std::function<double(const ChartPoint&)> f,
                                    double decay = 0.0, double inner_radius = 0.0,
                                    double h_rel = kDefaultFdRelStep);
  static ScalarField from_jet_evaluator(std::function<double(const ChartPoint&)> f,
                                        std::function<Jet(const ChartPoint&)> jet,
                                        double decay = 0.0, double inner_radius = 0.0,
                                        bool exact = true);

 private:
  void check_domain(const ChartPoint& p, double clearance) const;

  std::function<double(const ChartPoint&)> value_;
  std::function<Jet(const ChartPoint&)> jet_;  // empty -> finite differences
  double decay_ = 0.0;
  double inner_radius_ = 0.0;
  double h_rel_ = kDefaultFdRelStep;
  bool exact_ = false;
};

// Builds a ScalarField from a closed form written against generic scalars,
// e.g. analytic_field([](auto x, auto y, auto z) { return 1.0 / sqrt(x*x + y*y + z*z); }).
// Evaluating the same expression on coordinate jets yields the analytic jet.
template <class F>
ScalarField analytic_field(F f, double decay = 0.0, double inner_radius = 0.0) {
  auto value = [f](const ChartPoint& p) { return f(p.x(), p.y(), p.z()); };
  auto jet = [f](const ChartPoint& p) {
    return f(Jet::coordinate(p.x(), 0), Jet::coordinate(p.y(), 1),
             Jet::coordinate(p.z(), 2));
  };
  return ScalarField::from_jet_evaluator(std::move(value), std::move(jet), decay,
                                         inner_radius);
}

// Spec-level derivative access: (value, gradient, hessian) at p.
inline Jet jet(const ScalarField& f, const ChartPoint& p) { return f.jet(p); }

struct VectorJet {
  Eigen::Vector3d value = Eigen::Vector3d::Zero();
  Eigen::Matrix3d jacobian = Eigen::Matrix3d::Zero();  // jacobian(i,j) = d_j V^i
};

// Contravariant vector field in the Cartesian chart (three scalar components).
class VectorField {
 public:
  VectorField();  // the zero field
  VectorField(ScalarField vx, ScalarField vy, ScalarField vz, double decay = 2.0);

  Eigen::Vector3d value(const ChartPoint& p) const;
  VectorJet jet(const ChartPoint& p) const;
  const ScalarField& component(int i) const { return comp_[i]; }
  double declared_decay() const { return decay_; }
  double inner_radius() const;

 private:
  std::array<ScalarField, 3> comp_;
  double decay_ = 2.0;
};

template <int N>
struct MetricJetN {
  using Mat = Eigen::Matrix<double, N, N>;
  Mat g = Mat::Identity();
  std::array<Mat, N> dg{};                 // dg[k](i,j) = d_k g_ij
  std::array<std::array<Mat, N>, N> ddg{};  // ddg[k][l](i,j) = d_k d_l g_ij
};

using MetricJet = MetricJetN<3>;

// Riemannian metric on the chart, stored as the six independent Cartesian
// components. Positive definiteness is a sampled invariant, not enforced at
// construction.
class MetricField {
 public:
  MetricField();  // Euclidean

  Eigen::Matrix3d value(const ChartPoint& p) const;
  MetricJet jet(const ChartPoint& p) const;

  const ScalarField& component(int i, int j) const;
  double inner_radius() const { return inner_radius_; }
  double decay_exponent() const { return tau_; }
  bool has_exact_jet() const;

  // components in the order g11, g12, g13, g22, g23, g33
  static MetricField from_components(std::array<ScalarField, 6> comp,
                                     double inner_radius, double tau);
  static MetricField euclidean();

  // Pointwise rescaling g_ij -> w * g_ij with jets composed by the product rule.
  MetricField scaled_by(const ScalarField& w, double tau) const;

 private:
  std::array<ScalarField, 6> comp_;
  double inner_radius_ = 0.0;
  double tau_ = 1.0;
};

namespace detail {
template <class T>
const T& coordinate_of(int axis, const T& x, const T& y, const T& z) {
  return axis == 0 ? x : (axis == 1 ? y : z);
}
}  // namespace detail

// Spherically symmetric metric A(r) dr^2 + r^2 dOmega^2 expressed in Cartesian
// components g_ij = delta_ij + (A(r) - 1) x_i x_j / r^2. The radial profile is
// a closed form over generic scalars, so all components carry analytic jets.
template <class Profile>
MetricField radial_metric(Profile A, double inner_radius, double tau) {
  std::array<ScalarField, 6> comp;
  int idx = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double kron = (i == j) ? 1.0 : 0.0;
      comp[idx++] = analytic_field(
          [A, i, j, kron](auto x, auto y, auto z) {
            auto r2 = x * x + y * y + z * z;
            auto c = (A(sqrt(r2)) - 1.0) / r2;
            return kron + c * detail::coordinate_of(i, x, y, z) *
                              detail::coordinate_of(j, x, y, z);
          },
          tau, inner_radius);
    }
  }
  return MetricField::from_components(std::move(comp), inner_radius, tau);
}

struct DecayRow {
  double radius = 0.0;
  double sup_scaled_deviation = 0.0;  // max_ij |g_ij - delta_ij| * r^tau over the grid
};

// Asymptotic-flatness diagnostic: the table stays bounded iff the decay claim
// holds on the sampled ladder.
std::vector<DecayRow> decay_report(const MetricField& g, std::span<const double> radii,
                                   int n_theta = 16, int n_phi = 32);
std::vector<DecayRow> decay_report(const VectorField& v, std::span<const double> radii,
                                   int n_theta = 16, int n_phi = 32);

// Sylvester criterion on the leading principal minors.
bool positive_definite(const Eigen::Matrix3d& m);

}  // namespace admkit

#endif  // ADMKIT_FIELDS_HPP
