#include "admkit/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace admkit {

namespace {

std::string point_str(const ChartPoint& p) {
  return "(" + std::to_string(p.x()) + ", " + std::to_string(p.y()) + ", " +
         std::to_string(p.z()) + ")";
}

}  // namespace

Jet finite_difference_jet(const std::function<double(const ChartPoint&)>& f,
                          const ChartPoint& p, double h) {
  Jet out;
  const double f0 = f(p);
  out.value = f0;

  // Axis stencils: 4th-order first and second derivatives from the same
  // five-point line.
  double fp1[3], fm1[3], fp2[3], fm2[3];
  for (int k = 0; k < 3; ++k) {
    ChartPoint e = ChartPoint::Zero();
    e[k] = h;
    fp1[k] = f(p + e);
    fm1[k] = f(p - e);
    fp2[k] = f(p + 2.0 * e);
    fm2[k] = f(p - 2.0 * e);
    out.gradient[k] = (-fp2[k] + 8.0 * fp1[k] - 8.0 * fm1[k] + fm2[k]) / (12.0 * h);
    out.hessian(k, k) =
        (-fp2[k] + 16.0 * fp1[k] - 30.0 * f0 + 16.0 * fm1[k] - fm2[k]) /
        (12.0 * h * h);
  }

  // Mixed partials from a five-point stencil along the diagonal direction
  // e_i + e_j, with step h/sqrt(2) so the stencil stays inside the 2h ball:
  //   d^2 f / du^2 = hd^2 (f_ii + 2 f_ij + f_jj),  u = hd (e_i + e_j).
  const double hd = h / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      ChartPoint d = ChartPoint::Zero();
      d[i] = hd;
      d[j] = hd;
      const double sp1 = f(p + d);
      const double sm1 = f(p - d);
      const double sp2 = f(p + 2.0 * d);
      const double sm2 = f(p - 2.0 * d);
      const double s2 = (-sp2 + 16.0 * sp1 - 30.0 * f0 + 16.0 * sm1 - sm2) / 12.0;
      const double f_uu = s2 / (hd * hd);
      const double mixed = 0.5 * (f_uu - out.hessian(i, i) - out.hessian(j, j));
      out.hessian(i, j) = mixed;
      out.hessian(j, i) = mixed;
    }
  }

  return out;
}

ScalarField::ScalarField()
    : value_([](const ChartPoint&) { return 0.0; }),
      jet_([](const ChartPoint&) { return Jet{}; }),
      exact_(true) {}

void ScalarField::check_domain(const ChartPoint& p, double clearance) const {
  if (!p.allFinite()) {
    throw std::domain_error("field evaluation at non-finite point");
  }
  const double r = radius(p);
  if (r + 1e-12 * std::max(1.0, r) < inner_radius_ + clearance) {
    throw std::domain_error("point " + point_str(p) +
                            " outside field domain (inner radius " +
                            std::to_string(inner_radius_ + clearance) + ")");
  }
}

double ScalarField::value(const ChartPoint& p) const {
  check_domain(p, 0.0);
  const double v = value_(p);
  if (!std::isfinite(v)) {
    throw std::runtime_error("non-finite field value at " + point_str(p));
  }
  return v;
}

double ScalarField::fd_step(const ChartPoint& p) const {
  return h_rel_ * std::max(1.0, radius(p));
}

Jet ScalarField::jet(const ChartPoint& p) const {
  if (exact_ || jet_) {
    check_domain(p, 0.0);
    Jet j = jet_(p);
    if (!std::isfinite(j.value) || !j.gradient.allFinite() || !j.hessian.allFinite()) {
      throw std::runtime_error("non-finite jet at " + point_str(p));
    }
    return j;
  }
  return fd_jet(p, h_rel_);
}

Jet ScalarField::fd_jet(const ChartPoint& p, double h_rel) const {
  const double h = h_rel * std::max(1.0, radius(p));
  check_domain(p, 2.0 * h);
  Jet j = finite_difference_jet(value_, p, h);
  if (!std::isfinite(j.value) || !j.gradient.allFinite() || !j.hessian.allFinite()) {
    throw std::runtime_error("non-finite finite-difference jet at " + point_str(p));
  }
  return j;
}

ScalarField ScalarField::constant(double c) {
  ScalarField f;
  f.value_ = [c](const ChartPoint&) { return c; };
  f.jet_ = [c](const ChartPoint&) { return Jet::constant(c); };
  f.exact_ = true;
  f.decay_ = 0.0;
  f.inner_radius_ = 0.0;
  return f;
}

ScalarField ScalarField::from_evaluator(std::function<double(const ChartPoint&)> f,
                                        double decay, double inner_radius,
                                        double h_rel) {
  ScalarField s;
  s.value_ = std::move(f);
  s.jet_ = nullptr;
  s.exact_ = false;
  s.decay_ = decay;
  s.inner_radius_ = inner_radius;
  s.h_rel_ = h_rel;
  return s;
}

ScalarField ScalarField::from_jet_evaluator(std::function<double(const ChartPoint&)> f,
                                            std::function<Jet(const ChartPoint&)> jet,
                                            double decay, double inner_radius,
                                            bool exact) {
  ScalarField s;
  s.value_ = std::move(f);
  s.jet_ = std::move(jet);
  s.exact_ = exact;
  s.decay_ = decay;
  s.inner_radius_ = inner_radius;
  return s;
}

VectorField::VectorField() {
  comp_ = {ScalarField::constant(0.0), ScalarField::constant(0.0),
           ScalarField::constant(0.0)};
}

VectorField::VectorField(ScalarField vx, ScalarField vy, ScalarField vz, double decay)
    : comp_{std::move(vx), std::move(vy), std::move(vz)}, decay_(decay) {}

Eigen::Vector3d VectorField::value(const ChartPoint& p) const {
  return {comp_[0].value(p), comp_[1].value(p), comp_[2].value(p)};
}

VectorJet VectorField::jet(const ChartPoint& p) const {
  VectorJet vj;
  for (int i = 0; i < 3; ++i) {
    const Jet j = comp_[i].jet(p);
    vj.value[i] = j.value;
    vj.jacobian.row(i) = j.gradient.transpose();
  }
  return vj;
}

double VectorField::inner_radius() const {
  double r = 0.0;
  for (const auto& c : comp_) r = std::max(r, c.inner_radius());
  return r;
}

namespace {
// symmetric storage order g11, g12, g13, g22, g23, g33
constexpr int kCompIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
}  // namespace

MetricField::MetricField()
    : comp_{ScalarField::constant(1.0), ScalarField::constant(0.0),
            ScalarField::constant(0.0), ScalarField::constant(1.0),
            ScalarField::constant(0.0), ScalarField::constant(1.0)} {}

MetricField MetricField::euclidean() { return MetricField(); }

MetricField MetricField::from_components(std::array<ScalarField, 6> comp,
                                         double inner_radius, double tau) {
  MetricField g;
  g.comp_ = std::move(comp);
  g.inner_radius_ = inner_radius;
  g.tau_ = tau;
  return g;
}

const ScalarField& MetricField::component(int i, int j) const {
  return comp_[kCompIndex[i][j]];
}

bool MetricField::has_exact_jet() const {
  for (const auto& c : comp_) {
    if (!c.has_exact_jet()) return false;
  }
  return true;
}

Eigen::Matrix3d MetricField::value(const ChartPoint& p) const {
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double v = comp_[kCompIndex[i][j]].value(p);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

MetricJet MetricField::jet(const ChartPoint& p) const {
  MetricJet mj;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const Jet cj = comp_[kCompIndex[i][j]].jet(p);
      mj.g(i, j) = cj.value;
      mj.g(j, i) = cj.value;
      for (int k = 0; k < 3; ++k) {
        mj.dg[k](i, j) = cj.gradient[k];
        mj.dg[k](j, i) = cj.gradient[k];
        for (int l = 0; l < 3; ++l) {
          mj.ddg[k][l](i, j) = cj.hessian(k, l);
          mj.ddg[k][l](j, i) = cj.hessian(k, l);
        }
      }
    }
  }
  return mj;
}

MetricField MetricField::scaled_by(const ScalarField& w, double tau) const {
  std::array<ScalarField, 6> comp;
  const bool exact = has_exact_jet() && w.has_exact_jet();
  for (int idx = 0; idx < 6; ++idx) {
    ScalarField base = comp_[idx];
    comp[idx] = ScalarField::from_jet_evaluator(
        [w, base](const ChartPoint& p) { return w.value(p) * base.value(p); },
        [w, base](const ChartPoint& p) { return w.jet(p) * base.jet(p); },
        tau, std::max(inner_radius_, w.inner_radius()), exact);
  }
  return from_components(std::move(comp), std::max(inner_radius_, w.inner_radius()),
                         tau);
}

namespace {

template <class Fn>
std::vector<DecayRow> decay_table(std::span<const double> radii, double inner_radius,
                                  int n_theta, int n_phi, double tau, Fn deviation) {
  if (radii.size() < 1) throw std::invalid_argument("decay_report: empty radius list");
  double prev = 0.0;
  for (double r : radii) {
    if (r <= prev) throw std::invalid_argument("decay_report: radii must be increasing");
    if (r < inner_radius)
      throw std::invalid_argument("decay_report: radius below domain inner radius");
    prev = r;
  }
  std::vector<DecayRow> table;
  table.reserve(radii.size());
  for (double r : radii) {
    double sup = 0.0;
    for (int it = 0; it < n_theta; ++it) {
      const double c = -1.0 + (2.0 * it + 1.0) / n_theta;
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = 2.0 * M_PI * ip / n_phi;
        const ChartPoint x = r * ChartPoint(s * std::cos(phi), s * std::sin(phi), c);
        sup = std::max(sup, deviation(x));
      }
    }
    table.push_back({r, sup * std::pow(r, tau)});
  }
  return table;
}

}  // namespace

std::vector<DecayRow> decay_report(const MetricField& g, std::span<const double> radii,
                                   int n_theta, int n_phi) {
  return decay_table(radii, g.inner_radius(), n_theta, n_phi, g.decay_exponent(),
                     [&g](const ChartPoint& x) {
                       const Eigen::Matrix3d dev =
                           g.value(x) - Eigen::Matrix3d::Identity();
                       return dev.cwiseAbs().maxCoeff();
                     });
}

std::vector<DecayRow> decay_report(const VectorField& v, std::span<const double> radii,
                                   int n_theta, int n_phi) {
  return decay_table(radii, v.inner_radius(), n_theta, n_phi, v.declared_decay(),
                     [&v](const ChartPoint& x) {
                       return v.value(x).cwiseAbs().maxCoeff();
                     });
}

bool positive_definite(const Eigen::Matrix3d& m) {
  if (m(0, 0) <= 0.0) return false;
  if (m.topLeftCorner<2, 2>().determinant() <= 0.0) return false;
  return m.determinant() > 0.0;
}

}  // namespace admkit
