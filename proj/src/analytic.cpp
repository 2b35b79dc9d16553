#include "fwm/analytic.hpp"

#include <cmath>

namespace fwm {

Complex zeta(double theta, double delta, double alpha) {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double denom = 1.0 + 4.0 * delta * delta * c2 * c2;
  return (alpha / 2.0) * Complex(2.0 * delta * c2, -1.0) / denom;
}

MixingMatrix mixing_matrix(double theta, double delta, double alpha,
                           double kappa) {
  MixingMatrix mm;
  mm.theta = theta;
  mm.delta = delta;
  mm.alpha = alpha;
  mm.kappa = kappa;
  mm.zeta_value = zeta(theta, delta, alpha);
  const double s = std::sin(theta), c = std::cos(theta);
  mm.m << mm.zeta_value * (s * s), -mm.zeta_value * (s * c),
      -mm.zeta_value * (s * c), mm.zeta_value * (c * c) + kappa;
  return mm;
}

std::pair<Complex, Complex> eigen_exponents(const MixingMatrix& mm) {
  const Complex z = mm.zeta_value;
  const double k = mm.kappa;
  Complex mu_p, mu_m;
  if (k == 0.0) {
    // sqrt(zeta^2) = +-zeta, so one exponent is exactly zero (dark mode)
    mu_p = Complex(0.0, 0.0);
    mu_m = z;
  } else {
    const Complex root =
        std::sqrt(z * z + k * k + 2.0 * k * z * std::cos(2.0 * mm.theta));
    mu_p = 0.5 * (z + k + root);
    mu_m = 0.5 * (z + k - root);
  }
  Complex lp = Complex(0.0, -1.0) * mu_p;
  Complex lm = Complex(0.0, -1.0) * mu_m;
  if (std::abs(lp.real()) > std::abs(lm.real())) std::swap(lp, lm);
  return {lp, lm};
}

double ce_closed_form(double theta, double delta, double alpha, double kappa) {
  const MixingMatrix mm = mixing_matrix(theta, delta, alpha, kappa);
  const auto [lp, lm] = eigen_exponents(mm);
  const double coupling = std::abs(mm.zeta_value * std::sin(2.0 * theta));
  if (std::abs(lp - lm) < 1e-10) {
    // confluent (removable) limit
    const double amp = std::abs(std::exp(lp));
    return coupling * coupling / 4.0 * amp * amp;
  }
  const double osc = std::abs(std::exp(lp) - std::exp(lm));
  const double gap = std::abs(lp - lm);
  return coupling * coupling / (4.0 * gap * gap) * osc * osc;
}

OptimalConstants optimal_constants(double kappa, double alpha) {
  OptimalConstants oc;
  oc.theta = M_PI / 4.0 + 0.5 * std::atan(kappa / M_PI);
  oc.delta = alpha / (2.0 * M_PI * M_PI) *
             (kappa + std::sqrt(kappa * kappa + M_PI * M_PI));
  return oc;
}

double ce_matched_max(double alpha) {
  const double e = std::exp(-2.0 * M_PI * M_PI / alpha);
  return 0.25 * (1.0 + e) * (1.0 + e);
}

}  // namespace fwm
