#pragma once

#include <Eigen/Dense>
#include <utility>

#include "fwm/core.hpp"

// Closed-form two-mode coupling model at constant parameters: the complex
// coupling coefficient zeta, the 2x2 mixing matrix, its eigen-exponents,
// and the resulting conversion efficiency, together with the optimal
// constant-parameter choice for a given phase mismatch.

namespace fwm {

/// zeta = alpha/2 * (2 d cos^2 t - i) / (1 + 4 d^2 cos^4 t).
/// Its imaginary part is strictly negative (loss, never gain).
Complex zeta(double theta, double delta, double alpha);

/// Two-mode coupling matrix
///   M = [ zeta sin^2 t      -zeta sin(2t)/2   ]
///       [ -zeta sin(2t)/2    zeta cos^2 t + k ],
/// equal to zeta * bright bright^T + kappa * e_ss, so the dark vector
/// (cos t, sin t) is its null vector at kappa = 0.
struct MixingMatrix {
  double theta = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double kappa = 0.0;
  Complex zeta_value{0.0, 0.0};
  Eigen::Matrix2cd m;
};

MixingMatrix mixing_matrix(double theta, double delta, double alpha,
                           double kappa);

/// Eigen-exponents of the field evolution over unit length: the field pair
/// evolves as i d/dz psi = M psi, so the propagator eigen-factors are
/// exp(lambda) with lambda = -i mu and mu the eigenvalues of M,
///   mu_pm = (zeta + kappa +- sqrt(zeta^2 + kappa^2 + 2 kappa zeta cos 2t))/2.
/// Labeled so that |Re lambda_plus| <= |Re lambda_minus|; at kappa = 0 the
/// dark exponent lambda_plus is exactly zero.
std::pair<Complex, Complex> eigen_exponents(const MixingMatrix& m);

/// Conversion efficiency at constant parameters:
///   CE = |zeta sin 2t|^2 / (4 |l+ - l-|^2) * |e^{l+} - e^{l-}|^2,
/// with the confluent limit |zeta sin 2t / 2|^2 |e^l|^2 when the exponents
/// degenerate.
double ce_closed_form(double theta, double delta, double alpha, double kappa);

struct OptimalConstants {
  double theta;  // pi/4 + arctan(kappa/pi)/2
  double delta;  // alpha/(2 pi^2) * (kappa + sqrt(kappa^2 + pi^2))
};

/// Constant (theta, delta) maximizing CE at the given mismatch: the
/// diagonal energy shift of M vanishes and the coupling integrates to a
/// pi pulse.
OptimalConstants optimal_constants(double kappa, double alpha);

/// Maximum CE at perfect phase matching, (1 + e^{-2 pi^2 / alpha})^2 / 4.
double ce_matched_max(double alpha);

}  // namespace fwm
