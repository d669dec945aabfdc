#ifndef ADMKIT_JETS_HPP
#define ADMKIT_JETS_HPP

#include <cmath>

#include <Eigen/Dense>

namespace admkit {

// Generic field definitions call these unqualified so the same closed form
// instantiates on plain doubles and on jets.
using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;

// Second-order forward-mode jet: value, gradient and Hessian with respect to
// the three chart coordinates. Arithmetic propagates derivatives exactly, so
// any closed-form field written against generic scalars gets analytic jets
// for free by evaluating it on coordinate jets.
struct Jet {
  double value = 0.0;
  Eigen::Vector3d gradient = Eigen::Vector3d::Zero();
  Eigen::Matrix3d hessian = Eigen::Matrix3d::Zero();

  Jet() = default;
  explicit Jet(double v) : value(v) {}

  static Jet constant(double v) { return Jet(v); }

  // Jet of the coordinate function x_axis evaluated at v.
  static Jet coordinate(double v, int axis) {
    Jet j(v);
    j.gradient[axis] = 1.0;
    return j;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.value = a.value + b.value;
  r.gradient = a.gradient + b.gradient;
  r.hessian = a.hessian + b.hessian;
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  r.value = a.value - b.value;
  r.gradient = a.gradient - b.gradient;
  r.hessian = a.hessian - b.hessian;
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  r.value = -a.value;
  r.gradient = -a.gradient;
  r.hessian = -a.hessian;
  return r;
}

inline Jet operator+(const Jet& a) { return a; }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.value = a.value * b.value;
  r.gradient = a.value * b.gradient + b.value * a.gradient;
  r.hessian = a.value * b.hessian + b.value * a.hessian +
              a.gradient * b.gradient.transpose() +
              b.gradient * a.gradient.transpose();
  return r;
}

// f(u) with supplied value and first two derivatives of f at u.value.
inline Jet compose(const Jet& u, double f, double df, double ddf) {
  Jet r;
  r.value = f;
  r.gradient = df * u.gradient;
  r.hessian = df * u.hessian + ddf * (u.gradient * u.gradient.transpose());
  return r;
}

inline Jet reciprocal(const Jet& u) {
  const double w = 1.0 / u.value;
  return compose(u, w, -w * w, 2.0 * w * w * w);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet operator+(const Jet& a, double b) { Jet r = a; r.value += b; return r; }
inline Jet operator+(double a, const Jet& b) { return b + a; }
inline Jet operator-(const Jet& a, double b) { Jet r = a; r.value -= b; return r; }
inline Jet operator-(double a, const Jet& b) { return -(b - a); }
inline Jet operator*(const Jet& a, double b) {
  Jet r;
  r.value = a.value * b;
  r.gradient = a.gradient * b;
  r.hessian = a.hessian * b;
  return r;
}
inline Jet operator*(double a, const Jet& b) { return b * a; }
inline Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
inline Jet operator/(double a, const Jet& b) { return reciprocal(b) * a; }

inline Jet exp(const Jet& u) {
  const double e = std::exp(u.value);
  return compose(u, e, e, e);
}

inline Jet log(const Jet& u) {
  const double w = 1.0 / u.value;
  return compose(u, std::log(u.value), w, -w * w);
}

inline Jet sqrt(const Jet& u) {
  const double s = std::sqrt(u.value);
  return compose(u, s, 0.5 / s, -0.25 / (s * s * s));
}

inline Jet sin(const Jet& u) {
  return compose(u, std::sin(u.value), std::cos(u.value), -std::sin(u.value));
}

inline Jet cos(const Jet& u) {
  return compose(u, std::cos(u.value), -std::sin(u.value), -std::cos(u.value));
}

inline Jet pow(const Jet& u, double c) {
  if (c == 0.0) return Jet::constant(1.0);
  if (c == 1.0) return u;
  if (c == 2.0) return u * u;
  const double f = std::pow(u.value, c);
  const double df = c * std::pow(u.value, c - 1.0);
  const double ddf = c * (c - 1.0) * std::pow(u.value, c - 2.0);
  return compose(u, f, df, ddf);
}

inline Jet pow(const Jet& u, const Jet& w) { return exp(w * log(u)); }
inline Jet pow(double u, const Jet& w) { return exp(w * std::log(u)); }

}  // namespace admkit

#endif  // ADMKIT_JETS_HPP
