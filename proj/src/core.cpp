#include "fwm/core.hpp"

#include <cmath>

namespace fwm {

MediumParams validate_params(const MediumParams& p) {
  if (!(p.alpha > 0.0))
    throw Error(ErrorCode::NonPositiveAlpha,
                "alpha must be > 0, got " + std::to_string(p.alpha));
  if (!(p.gamma >= 0.0))
    throw Error(ErrorCode::NegativeGamma,
                "gamma must be >= 0, got " + std::to_string(p.gamma));
  if (!(p.omega_p0 > 0.0))
    throw Error(ErrorCode::NonPositiveProbe,
                "omega_p0 must be > 0, got " + std::to_string(p.omega_p0));
  return p;
}

ModeBasis mode_basis(double theta) {
  if (!(theta >= 0.0 && theta <= M_PI / 2.0 + 1e-15))
    throw Error(ErrorCode::OutOfRangeTheta,
                "theta must lie in [0, pi/2], got " + std::to_string(theta));
  ModeBasis b;
  b.theta = theta;
  const double c = std::cos(theta), s = std::sin(theta);
  b.dark << c, s;
  b.bright << s, -c;
  return b;
}

}  // namespace fwm
