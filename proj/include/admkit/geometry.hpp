#ifndef ADMKIT_GEOMETRY_HPP
#define ADMKIT_GEOMETRY_HPP

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "admkit/fields.hpp"

namespace admkit {

// Levi-Civita connection coefficients at one point, Gamma^k_ij symmetric in (i,j).
struct ConnectionCoefficients {
  ChartPoint point = ChartPoint::Zero();
  std::array<Eigen::Matrix3d, 3> gamma{};  // gamma[k](i,j) = Gamma^k_ij
};

namespace nd {

// Dimension-generic pointwise kernels, shared by the 3D ambient chart and the
// 2D induced sphere chart. All take a full second-order metric jet.

template <int N>
using Mat = Eigen::Matrix<double, N, N>;

template <int N>
Mat<N> inverse_checked(const Mat<N>& g);

template <int N>
std::array<Mat<N>, N> christoffel(const MetricJetN<N>& mj);

// Gamma^k_ij and its coordinate derivatives d_m Gamma^k_ij.
template <int N>
void christoffel_with_derivatives(const MetricJetN<N>& mj, std::array<Mat<N>, N>& gamma,
                                  std::array<std::array<Mat<N>, N>, N>& dgamma);

// S = g^{ij} (d_k Gamma^k_ij - d_i Gamma^k_kj
//             + Gamma^k_kl Gamma^l_ij - Gamma^k_il Gamma^l_kj)
template <int N>
double scalar_curvature(const MetricJetN<N>& mj);

}  // namespace nd

ConnectionCoefficients christoffel(const MetricField& g, const ChartPoint& p);

double scalar_curvature(const MetricField& g, const ChartPoint& p);

// Delta_g u = g^{ij} (d_i d_j u - Gamma^k_ij d_k u)
double laplace_beltrami(const MetricField& g, const ScalarField& u, const ChartPoint& p);

// div_g V = (1/sqrt(det g)) d_i (sqrt(det g) V^i), expanded by the product rule.
double divergence(const MetricField& g, const VectorField& v, const ChartPoint& p);

// Same quantity through the connection, V^i_{,i} + Gamma^i_{ik} V^k; kept as an
// independent route for consistency tests.
double divergence_via_christoffel(const MetricField& g, const VectorField& v,
                                  const ChartPoint& p);

// |V|^2_g = g_ij V^i V^j for contravariant components.
double norm_sq(const MetricField& g, const VectorField& v, const ChartPoint& p);

enum class TraceConvention { Average, Sum };

// Mean curvature of the coordinate sphere |x| = r0 at p, with respect to the
// outward (increasing r) g-unit normal. Average convention: the round unit
// sphere in flat space has H = 1.
double sphere_mean_curvature(const MetricField& g, double r0, const ChartPoint& p,
                             TraceConvention convention = TraceConvention::Average);

// g-unit outward normal of the coordinate sphere through p.
Eigen::Vector3d sphere_unit_normal(const MetricField& g, const ChartPoint& p);

// Induced 2-metric of the coordinate sphere |x| = r0 in spherical angle
// coordinates (theta, phi).
Eigen::Matrix2d induced_sphere_metric(const MetricField& g, double r0, double theta,
                                      double phi);

// Scalar curvature (= 2 x Gauss curvature) of the induced sphere metric.
double induced_sphere_scalar_curvature(const MetricField& g, double r0, double theta,
                                       double phi);

// Lower bound for the first boundary Dirac eigenvalue on the r0-sphere,
// lambda0 = (1/2) sqrt(2 inf S) in dimension 3. The induced boundary scalar
// curvature is the primary reading; the ambient restriction is also evaluated
// since either can be meant by an unqualified "S on the boundary".
struct BoundaryEigenvalueBound {
  double inf_induced_scalar = 0.0;
  double inf_ambient_scalar = 0.0;
  std::optional<double> lambda0;          // from the induced scalar; empty if inf < 0
  std::optional<double> lambda0_ambient;  // variant reading
};

BoundaryEigenvalueBound boundary_lambda0(const MetricField& g, double r0,
                                         int n_theta = 32, int n_phi = 64);

}  // namespace admkit

#endif  // ADMKIT_GEOMETRY_HPP
