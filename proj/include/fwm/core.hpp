#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

// Shared domain types and units convention.
//
// All rates, detunings and Rabi amplitudes are pre-scaled by the natural
// linewidth (the global frequency unit), and the medium length is the
// global length unit, so z runs over [0, 1] and kappa = dk * L is the only
// mismatch input.

namespace fwm {

using Complex = std::complex<double>;

enum class ErrorCode {
  NonPositiveAlpha,
  NegativeGamma,
  NonPositiveProbe,
  OutOfRangeTheta,
  OutOfRangeZ,
  DegenerateCoupling,
  SingularSystem,
  StepSizeNotConverged,
  NonUniqueSteadyState,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Optical depth, ground-state dephasing and probe input amplitude.
struct MediumParams {
  double alpha = 200.0;     // optical depth, > 0
  double gamma = 0.0;       // ground-state dephasing rate, >= 0
  double omega_p0 = 0.03;   // probe input Rabi amplitude, > 0
};

/// Dimensionless phase mismatch kappa = dk * L.
struct MismatchSpec {
  double kappa = 0.0;
};

/// Probe/signal field pair at one position.
struct FieldState {
  double z = 0.0;
  Complex omega_p{0.0, 0.0};
  Complex omega_s{0.0, 0.0};
};

/// Dark/bright decomposition of the two-mode field space at mixing angle
/// theta, with tan(theta) = omega_d / omega_c.
struct ModeBasis {
  double theta = 0.0;
  Eigen::Vector2d dark;    // (cos t, sin t)
  Eigen::Vector2d bright;  // (sin t, -cos t)
};

/// Throws if any MediumParams invariant is violated; returns p unchanged.
MediumParams validate_params(const MediumParams& p);

/// Dark/bright basis for theta in [0, pi/2].
ModeBasis mode_basis(double theta);

}  // namespace fwm
