#include "admkit/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace admkit {

namespace {

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms = 0.0;
};

// least squares y = intercept + slope * t
LinearFit fit_affine(std::span<const double> t, std::span<const double> y) {
  const int n = static_cast<int>(t.size());
  double st = 0, stt = 0, sy = 0, sty = 0;
  for (int i = 0; i < n; ++i) {
    st += t[i];
    stt += t[i] * t[i];
    sy += y[i];
    sty += t[i] * y[i];
  }
  LinearFit fit;
  const double denom = n * stt - st * st;
  fit.slope = (n * sty - st * sy) / denom;
  fit.intercept = (sy - fit.slope * st) / n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double res = y[i] - fit.intercept - fit.slope * t[i];
    ss += res * res;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

LinearFit fit_power(std::span<const double> radii, std::span<const double> y, double p) {
  std::vector<double> t(radii.size());
  for (size_t i = 0; i < radii.size(); ++i) t[i] = std::pow(radii[i], -p);
  return fit_affine(t, y);
}

double richardson_to_zero(std::span<const double> radii, std::span<const double> y,
                          double* last_correction) {
  const int n = static_cast<int>(radii.size());
  std::vector<double> t(n), tab(y.begin(), y.end());
  for (int i = 0; i < n; ++i) t[i] = 1.0 / radii[i];
  double prev = tab[0];
  for (int k = 1; k < n; ++k) {
    prev = tab[0];
    for (int i = 0; i + k < n; ++i) {
      tab[i] = (t[i + k] * tab[i] - t[i] * tab[i + 1]) / (t[i + k] - t[i]);
    }
  }
  if (last_correction) *last_correction = std::abs(tab[0] - prev);
  return tab[0];
}

}  // namespace

LimitEstimate extrapolate_limit(std::span<const double> radii,
                                std::span<const double> raw,
                                const ExtrapolationOptions& options) {
  if (radii.size() != raw.size()) {
    throw std::invalid_argument("extrapolate_limit: size mismatch");
  }
  if (radii.size() < 3) {
    throw std::invalid_argument("extrapolate_limit: need at least 3 ladder radii");
  }
  for (size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) {
      throw std::invalid_argument("extrapolate_limit: radii must be increasing");
    }
  }

  LimitEstimate est;
  est.radii.assign(radii.begin(), radii.end());
  est.raw.assign(raw.begin(), raw.end());

  switch (options.model) {
    case FitModel::FixedExponent: {
      const LinearFit fit = fit_power(radii, raw, options.exponent);
      est.value = fit.intercept;
      est.fit_exponent = options.exponent;
      est.fit_residual = fit.rms;
      break;
    }
    case FitModel::FreeExponent: {
      // golden-section search for the exponent minimizing the misfit
      const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
      double a = 0.25, b = 4.0;
      double c = b - golden * (b - a);
      double d = a + golden * (b - a);
      double fc = fit_power(radii, raw, c).rms;
      double fd = fit_power(radii, raw, d).rms;
      for (int iter = 0; iter < 80; ++iter) {
        if (fc < fd) {
          b = d; d = c; fd = fc;
          c = b - golden * (b - a);
          fc = fit_power(radii, raw, c).rms;
        } else {
          a = c; c = d; fc = fd;
          d = a + golden * (b - a);
          fd = fit_power(radii, raw, d).rms;
        }
      }
      const double p = 0.5 * (a + b);
      const LinearFit fit = fit_power(radii, raw, p);
      est.value = fit.intercept;
      est.fit_exponent = p;
      est.fit_residual = fit.rms;
      break;
    }
    case FitModel::Richardson: {
      double corr = 0.0;
      est.value = richardson_to_zero(radii, raw, &corr);
      est.fit_exponent = static_cast<double>(radii.size() - 1);
      est.fit_residual = corr;
      break;
    }
  }

  est.error_estimate = std::max(est.fit_residual,
                                1e-15 * std::max(1.0, std::abs(est.value)));
  for (size_t i = 1; i < raw.size(); ++i) {
    const double prev = std::abs(raw[i - 1] - est.value);
    const double curr = std::abs(raw[i] - est.value);
    if (curr > prev + 1e-13 * std::max(1.0, std::abs(est.value))) {
      est.tail_monotone = false;  // flagged, value still returned
    }
  }
  return est;
}

double adm_flux_at_radius(const MetricField& g, double r, const SphereQuadrature& quad,
                          SphereMeasure measure, int threads) {
  const double integral = quad.integrate(
      [&](const Eigen::Vector3d& u) {
        const ChartPoint x = r * u;
        const MetricJet mj = g.jet(x);
        Eigen::Vector3d flux_density;  // D_j = d_i g_ij - d_j g_ii
        for (int j = 0; j < 3; ++j) {
          double s = 0.0;
          for (int i = 0; i < 3; ++i) s += mj.dg[i](i, j);
          flux_density[j] = s - mj.dg[j].trace();
        }
        if (measure == SphereMeasure::Euclidean) {
          return flux_density.dot(u) * r * r;
        }
        // g-unit normal with g-induced area element:
        // nu = g^{-1} u / lambda, dA_g = sqrt(det g) lambda r^2 dOmega
        const Eigen::Matrix3d ginv = mj.g.inverse();
        const double sqrt_det = std::sqrt(mj.g.determinant());
        return flux_density.dot(ginv * u) * sqrt_det * r * r;
      },
      threads);
  return integral / (16.0 * M_PI);
}

double charge_flux_at_radius(const MetricField& g, const VectorField& v, double r,
                             const SphereQuadrature& quad, int threads) {
  // g(V, n_g) dA_g with n_g = g^{-1} u / lambda and dA_g = sqrt(det g) lambda
  // r^2 dOmega; the lambda factors cancel, leaving V.u sqrt(det g) r^2.
  const double integral = quad.integrate(
      [&](const Eigen::Vector3d& u) {
        const ChartPoint x = r * u;
        const Eigen::Vector3d val = v.value(x);
        const double sqrt_det = std::sqrt(g.value(x).determinant());
        return val.dot(u) * sqrt_det * r * r;
      },
      threads);
  return integral / (4.0 * M_PI);
}

namespace {

void check_radii(const MetricField& g, std::span<const double> radii) {
  if (radii.size() < 3) {
    throw std::invalid_argument("flux ladder: need at least 3 radii");
  }
  for (size_t i = 0; i < radii.size(); ++i) {
    if (i > 0 && radii[i] <= radii[i - 1]) {
      throw std::invalid_argument("flux ladder: radii must be increasing");
    }
    if (radii[i] < g.inner_radius()) {
      throw std::invalid_argument("flux ladder: radius below domain inner radius");
    }
  }
}

}  // namespace

LimitEstimate adm_mass(const MetricField& g, std::span<const double> radii,
                       const SphereQuadrature& quad, const FluxOptions& options) {
  check_radii(g, radii);
  std::vector<double> raw;
  raw.reserve(radii.size());
  for (double r : radii) {
    raw.push_back(adm_flux_at_radius(g, r, quad, options.adm_measure, options.threads));
  }
  return extrapolate_limit(radii, raw, options.extrapolation);
}

LimitEstimate flux_charge(const MetricField& g, const VectorField& v,
                          std::span<const double> radii, const SphereQuadrature& quad,
                          const FluxOptions& options) {
  check_radii(g, radii);
  std::vector<double> raw;
  raw.reserve(radii.size());
  for (double r : radii) {
    raw.push_back(charge_flux_at_radius(g, v, r, quad, options.threads));
  }
  return extrapolate_limit(radii, raw, options.extrapolation);
}

}  // namespace admkit
