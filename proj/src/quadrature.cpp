#include "admkit/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace admkit {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_nodes: n must be positive");
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

SphereQuadrature SphereQuadrature::gauss_legendre(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw std::invalid_argument("SphereQuadrature: orders must be positive");
  }
  SphereQuadrature q;
  q.n_theta_ = n_theta;
  q.n_phi_ = n_phi;
  q.nodes_.reserve(static_cast<size_t>(n_theta) * n_phi);
  const auto [ct, wt] = gauss_legendre_nodes(n_theta);
  const double wphi = 2.0 * M_PI / n_phi;
  for (int it = 0; it < n_theta; ++it) {
    const double c = ct[it];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = wphi * ip;
      SphereNode node;
      node.direction = {s * std::cos(phi), s * std::sin(phi), c};
      node.weight = wt[it] * wphi;
      node.cos_theta = c;
      node.phi = phi;
      q.nodes_.push_back(node);
    }
  }
  return q;
}

namespace detail {

void parallel_fill(int n, int threads, const std::function<double(int)>& f,
                   std::vector<double>& values) {
  if (threads <= 1 || n < 4 * threads) {
    for (int i = 0; i < n; ++i) values[i] = f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::atomic<int> failed{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += threads) values[i] = f(i);
      } catch (...) {
        failed.store(1);
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) {
    throw std::runtime_error("integrand evaluation failed in worker thread");
  }
}

}  // namespace detail

}  // namespace admkit
