#include "admkit/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace admkit {

namespace nd {

template <int N>
Mat<N> inverse_checked(const Mat<N>& g) {
  const double det = g.determinant();
  if (!(det > 0.0)) {
    throw std::runtime_error("metric matrix not positive (det <= 0)");
  }
  Mat<N> inv = g.inverse();
  const double cond = g.template lpNorm<Eigen::Infinity>() *
                      inv.template lpNorm<Eigen::Infinity>();
  if (!(cond < 1e12)) {
    throw std::runtime_error("metric matrix ill-conditioned at evaluation point");
  }
  return inv;
}

template <int N>
std::array<Mat<N>, N> christoffel(const MetricJetN<N>& mj) {
  const Mat<N> ginv = inverse_checked<N>(mj.g);
  std::array<Mat<N>, N> gamma;
  for (int k = 0; k < N; ++k) gamma[k].setZero();
  for (int k = 0; k < N; ++k) {
    for (int i = 0; i < N; ++i) {
      for (int j = i; j < N; ++j) {
        double s = 0.0;
        for (int l = 0; l < N; ++l) {
          s += ginv(k, l) * (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
        }
        gamma[k](i, j) = 0.5 * s;
        gamma[k](j, i) = gamma[k](i, j);
      }
    }
  }
  return gamma;
}

template <int N>
void christoffel_with_derivatives(const MetricJetN<N>& mj, std::array<Mat<N>, N>& gamma,
                                  std::array<std::array<Mat<N>, N>, N>& dgamma) {
  const Mat<N> ginv = inverse_checked<N>(mj.g);
  std::array<Mat<N>, N> dginv;  // d_m g^{kl} = -g^{ka} d_m g_ab g^{bl}
  for (int m = 0; m < N; ++m) dginv[m] = -ginv * mj.dg[m] * ginv;

  gamma = christoffel<N>(mj);
  for (int m = 0; m < N; ++m) {
    for (int k = 0; k < N; ++k) dgamma[m][k].setZero();
  }
  for (int m = 0; m < N; ++m) {
    for (int k = 0; k < N; ++k) {
      for (int i = 0; i < N; ++i) {
        for (int j = i; j < N; ++j) {
          double s = 0.0;
          for (int l = 0; l < N; ++l) {
            s += dginv[m](k, l) * (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
            s += ginv(k, l) * (mj.ddg[m][i](j, l) + mj.ddg[m][j](i, l) -
                               mj.ddg[m][l](i, j));
          }
          dgamma[m][k](i, j) = 0.5 * s;
          dgamma[m][k](j, i) = dgamma[m][k](i, j);
        }
      }
    }
  }
}

template <int N>
double scalar_curvature(const MetricJetN<N>& mj) {
  const Mat<N> ginv = inverse_checked<N>(mj.g);
  std::array<Mat<N>, N> gamma;
  std::array<std::array<Mat<N>, N>, N> dgamma;
  christoffel_with_derivatives<N>(mj, gamma, dgamma);

  // contracted connection Gamma^k_{kl}
  Eigen::Matrix<double, N, 1> contracted;
  for (int l = 0; l < N; ++l) {
    double s = 0.0;
    for (int k = 0; k < N; ++k) s += gamma[k](k, l);
    contracted[l] = s;
  }

  double S = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      double ricci_ij = 0.0;
      for (int k = 0; k < N; ++k) {
        ricci_ij += dgamma[k][k](i, j) - dgamma[i][k](k, j);
        for (int l = 0; l < N; ++l) {
          ricci_ij += gamma[k](k, l) * gamma[l](i, j) - gamma[k](i, l) * gamma[l](k, j);
        }
      }
      S += ginv(i, j) * ricci_ij;
    }
  }
  return S;
}

template Mat<2> inverse_checked<2>(const Mat<2>&);
template Mat<3> inverse_checked<3>(const Mat<3>&);
template std::array<Mat<2>, 2> christoffel<2>(const MetricJetN<2>&);
template std::array<Mat<3>, 3> christoffel<3>(const MetricJetN<3>&);
template void christoffel_with_derivatives<2>(const MetricJetN<2>&,
                                              std::array<Mat<2>, 2>&,
                                              std::array<std::array<Mat<2>, 2>, 2>&);
template void christoffel_with_derivatives<3>(const MetricJetN<3>&,
                                              std::array<Mat<3>, 3>&,
                                              std::array<std::array<Mat<3>, 3>, 3>&);
template double scalar_curvature<2>(const MetricJetN<2>&);
template double scalar_curvature<3>(const MetricJetN<3>&);

}  // namespace nd

ConnectionCoefficients christoffel(const MetricField& g, const ChartPoint& p) {
  ConnectionCoefficients cc;
  cc.point = p;
  cc.gamma = nd::christoffel<3>(g.jet(p));
  return cc;
}

double scalar_curvature(const MetricField& g, const ChartPoint& p) {
  return nd::scalar_curvature<3>(g.jet(p));
}

double laplace_beltrami(const MetricField& g, const ScalarField& u, const ChartPoint& p) {
  const MetricJet mj = g.jet(p);
  const Eigen::Matrix3d ginv = nd::inverse_checked<3>(mj.g);
  const auto gamma = nd::christoffel<3>(mj);
  const Jet uj = u.jet(p);
  double lap = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double hess_cov = uj.hessian(i, j);
      for (int k = 0; k < 3; ++k) hess_cov -= gamma[k](i, j) * uj.gradient[k];
      lap += ginv(i, j) * hess_cov;
    }
  }
  return lap;
}

double divergence(const MetricField& g, const VectorField& v, const ChartPoint& p) {
  const MetricJet mj = g.jet(p);
  const Eigen::Matrix3d ginv = nd::inverse_checked<3>(mj.g);
  const VectorJet vj = v.jet(p);
  double div = vj.jacobian.trace();
  for (int k = 0; k < 3; ++k) {
    // d_k log sqrt(det g) = (1/2) tr(g^{-1} d_k g)
    div += 0.5 * (ginv * mj.dg[k]).trace() * vj.value[k];
  }
  return div;
}

double divergence_via_christoffel(const MetricField& g, const VectorField& v,
                                  const ChartPoint& p) {
  const auto cc = christoffel(g, p);
  const VectorJet vj = v.jet(p);
  double div = vj.jacobian.trace();
  for (int k = 0; k < 3; ++k) {
    double contracted = 0.0;
    for (int i = 0; i < 3; ++i) contracted += cc.gamma[i](i, k);
    div += contracted * vj.value[k];
  }
  return div;
}

double norm_sq(const MetricField& g, const VectorField& v, const ChartPoint& p) {
  const Eigen::Vector3d val = v.value(p);
  return val.dot(g.value(p) * val);
}

Eigen::Vector3d sphere_unit_normal(const MetricField& g, const ChartPoint& p) {
  const Eigen::Vector3d u = p.normalized();
  const Eigen::Matrix3d ginv = nd::inverse_checked<3>(g.value(p));
  const Eigen::Vector3d w = ginv * u;
  return w / std::sqrt(u.dot(w));
}

double sphere_mean_curvature(const MetricField& g, double r0, const ChartPoint& p,
                             TraceConvention convention) {
  const double r = radius(p);
  if (std::abs(r - r0) > 1e-12 * std::max(1.0, r0)) {
    throw std::invalid_argument("sphere_mean_curvature: point not on the r0 sphere");
  }

  // H_sum = div_g(nu) for the unit normal field of the coordinate-sphere
  // foliation, nu = g^{-1} u / lambda with u = x/r, lambda = sqrt(u^T g^{-1} u).
  const MetricJet mj = g.jet(p);
  const Eigen::Matrix3d ginv = nd::inverse_checked<3>(mj.g);
  const Eigen::Vector3d u = p / r;

  std::array<Eigen::Matrix3d, 3> dginv;
  for (int k = 0; k < 3; ++k) dginv[k] = -ginv * mj.dg[k] * ginv;

  const Eigen::Vector3d w = ginv * u;
  const double lam2 = u.dot(w);
  const double lam = std::sqrt(lam2);

  double div_nu = 0.0;
  double log_det_term = 0.0;
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d du_k = -u * u[k];  // d_k u_j = (delta_jk - u_j u_k)/r
    du_k[k] += 1.0;
    du_k /= r;

    const Eigen::Vector3d dw_k = dginv[k] * u + ginv * du_k;
    const double dlam2_k = u.dot(dginv[k] * u) + 2.0 * du_k.dot(w);
    const double dlam_k = 0.5 * dlam2_k / lam;
    // k-th component of d_k nu
    div_nu += dw_k[k] / lam - w[k] * dlam_k / lam2;
    log_det_term += (w[k] / lam) * 0.5 * (ginv * mj.dg[k]).trace();
  }
  const double h_sum = div_nu + log_det_term;
  return convention == TraceConvention::Average ? 0.5 * h_sum : h_sum;
}

namespace {

Eigen::Vector3d sphere_embedding(double r0, double theta, double phi) {
  const double s = std::sin(theta);
  return r0 * Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

}  // namespace

Eigen::Matrix2d induced_sphere_metric(const MetricField& g, double r0, double theta,
                                      double phi) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const Eigen::Vector3d x = sphere_embedding(r0, theta, phi);
  Eigen::Matrix<double, 3, 2> t;  // tangent vectors d_theta X, d_phi X
  t.col(0) = r0 * Eigen::Vector3d(c * cp, c * sp, -s);
  t.col(1) = r0 * Eigen::Vector3d(-s * sp, s * cp, 0.0);
  const Eigen::Matrix3d gx = g.value(x);
  Eigen::Matrix2d h = t.transpose() * gx * t;
  h(1, 0) = h(0, 1) = 0.5 * (h(0, 1) + h(1, 0));
  return h;
}

double induced_sphere_scalar_curvature(const MetricField& g, double r0, double theta,
                                       double phi) {
  // Second-order jet of the induced metric by 4th-order differences in the
  // angle chart; only metric values enter, never nested derivative calls.
  // Step balances h^4 truncation against eps/h^2 roundoff.
  const double h = 3e-3;
  auto comp = [&](double th, double ph) { return induced_sphere_metric(g, r0, th, ph); };

  MetricJetN<2> mj;
  const Eigen::Matrix2d f0 = comp(theta, phi);
  mj.g = f0;
  if (!(f0.determinant() > 0.0)) {
    throw std::runtime_error("degenerate induced sphere metric");
  }

  auto at = [&](int i, int j) -> Eigen::Matrix2d {
    const double th = theta + i * h;
    const double ph = phi + j * h;
    return comp(th, ph);
  };

  const Eigen::Matrix2d tp1 = at(1, 0), tm1 = at(-1, 0), tp2 = at(2, 0), tm2 = at(-2, 0);
  const Eigen::Matrix2d pp1 = at(0, 1), pm1 = at(0, -1), pp2 = at(0, 2), pm2 = at(0, -2);
  mj.dg[0] = (-tp2 + 8.0 * tp1 - 8.0 * tm1 + tm2) / (12.0 * h);
  mj.dg[1] = (-pp2 + 8.0 * pp1 - 8.0 * pm1 + pm2) / (12.0 * h);
  mj.ddg[0][0] = (-tp2 + 16.0 * tp1 - 30.0 * f0 + 16.0 * tm1 - tm2) / (12.0 * h * h);
  mj.ddg[1][1] = (-pp2 + 16.0 * pp1 - 30.0 * f0 + 16.0 * pm1 - pm2) / (12.0 * h * h);

  const Eigen::Matrix2d dp1 = at(1, 1), dm1 = at(-1, -1), dp2 = at(2, 2), dm2 = at(-2, -2);
  const Eigen::Matrix2d diag2 =
      (-dp2 + 16.0 * dp1 - 30.0 * f0 + 16.0 * dm1 - dm2) / (12.0 * h * h);
  mj.ddg[0][1] = 0.5 * (diag2 - mj.ddg[0][0] - mj.ddg[1][1]);
  mj.ddg[1][0] = mj.ddg[0][1];

  return nd::scalar_curvature<2>(mj);
}

BoundaryEigenvalueBound boundary_lambda0(const MetricField& g, double r0, int n_theta,
                                         int n_phi) {
  BoundaryEigenvalueBound out;
  double inf_induced = std::numeric_limits<double>::infinity();
  double inf_ambient = std::numeric_limits<double>::infinity();
  for (int it = 0; it < n_theta; ++it) {
    // midpoint grid in cos(theta) keeps the angle chart away from the poles
    const double c = -1.0 + (2.0 * it + 1.0) / n_theta;
    const double theta = std::acos(c);
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * M_PI * ip / n_phi;
      inf_induced =
          std::min(inf_induced, induced_sphere_scalar_curvature(g, r0, theta, phi));
      inf_ambient =
          std::min(inf_ambient, scalar_curvature(g, sphere_embedding(r0, theta, phi)));
    }
  }
  out.inf_induced_scalar = inf_induced;
  out.inf_ambient_scalar = inf_ambient;
  // n = 3: lambda0 = (1/2) sqrt((n-1)/(n-2) inf S) = (1/2) sqrt(2 inf S)
  if (inf_induced >= 0.0) out.lambda0 = 0.5 * std::sqrt(2.0 * inf_induced);
  if (inf_ambient >= 0.0) out.lambda0_ambient = 0.5 * std::sqrt(2.0 * inf_ambient);
  return out;
}

}  // namespace admkit
