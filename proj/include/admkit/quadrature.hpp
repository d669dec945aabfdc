#ifndef ADMKIT_QUADRATURE_HPP
#define ADMKIT_QUADRATURE_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace admkit {

// Neumaier-compensated accumulation; summation order fixed by the caller so
// results do not depend on how the summands were produced.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n);

struct SphereNode {
  Eigen::Vector3d direction;
  double weight = 0.0;  // weights sum to 4 pi
  double cos_theta = 0.0;
  double phi = 0.0;
};

// Product rule on the unit sphere: Gauss-Legendre in cos(theta) times a
// uniform (trapezoidal) grid in phi. Exact for spherical harmonics up to the
// rule's degree; in particular exact for all spherically symmetric integrands.
class SphereQuadrature {
 public:
  static SphereQuadrature gauss_legendre(int n_theta, int n_phi);

  const std::vector<SphereNode>& nodes() const { return nodes_; }
  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  // integral of f(direction) over the unit sphere; integrand evaluations may
  // run on several threads, accumulation is always sequential in node order.
  template <class F>
  double integrate(F&& f, int threads = 1) const;

 private:
  int n_theta_ = 0, n_phi_ = 0;
  std::vector<SphereNode> nodes_;
};

namespace detail {
// Evaluates values[i] = f(i) for i in [0, n) on the requested thread count.
void parallel_fill(int n, int threads, const std::function<double(int)>& f,
                   std::vector<double>& values);
}  // namespace detail

template <class F>
double SphereQuadrature::integrate(F&& f, int threads) const {
  const int n = static_cast<int>(nodes_.size());
  std::vector<double> values(n);
  detail::parallel_fill(
      n, threads, [&](int i) { return f(nodes_[i].direction); }, values);
  CompensatedSum acc;
  for (int i = 0; i < n; ++i) acc.add(nodes_[i].weight * values[i]);
  return acc.value();
}

}  // namespace admkit

#endif  // ADMKIT_QUADRATURE_HPP
