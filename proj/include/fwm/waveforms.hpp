#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fwm/core.hpp"

// Spatial profiles of the two coupling fields and of the detuning control
// delta(z) over z in [0, 1].

namespace fwm {

/// Fixed mixing angle; coupling_at returns the unit-norm pair
/// (cos t, sin t) since the two-mode dynamics depend only on the ratio.
struct ConstantRatio {
  double theta = M_PI / 4.0;
};

/// Position-independent amplitudes (not both zero).
struct ConstantAmplitudes {
  double omega_c = 1.5;
  double omega_d = 1.5;
};

/// Counter-intuitive linear ramps:
///   omega_c(z) = omega_c0 * (1 - z),  omega_d(z) = omega_d0 * z,
/// so theta runs from 0 at z=0 to pi/2 at z=1.
struct LinearRamp {
  double omega_c0 = 1.5;
  double omega_d0 = 1.5;
};

using CouplingProfile =
    std::variant<ConstantRatio, ConstantAmplitudes, LinearRamp>;

struct ConstantDetuning {
  double delta = 0.0;
};

/// delta(z) = a0 + sum_n [ a[n-1] cos(n pi z) + b[n-1] sin(n pi z) ].
struct FourierDetuning {
  double a0 = 0.0;
  std::vector<double> a;  // cosine coefficients a1..an
  std::vector<double> b;  // sine coefficients b1..bn

  int order() const { return static_cast<int>(a.size()); }
};

/// delta(z) = sum_n coeffs[n] * C(d, n) * z^n * (1-z)^(d-n), d = degree.
struct BernsteinDetuning {
  std::vector<double> coeffs;  // a0..ad

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

using DetuningWaveform =
    std::variant<ConstantDetuning, FourierDetuning, BernsteinDetuning>;

/// Coupling amplitudes (omega_c, omega_d) at z in [0, 1]; both non-negative.
std::pair<double, double> coupling_at(const CouplingProfile& profile,
                                      double z);

/// Mixing angle at z, theta = atan2(omega_d, omega_c) in [0, pi/2].
double theta_at(const CouplingProfile& profile, double z);

/// Detuning delta(z).
double detuning_at(const DetuningWaveform& w, double z);

/// True when the probe stays well below both coupling amplitudes
/// (omega_p0 <= 0.1 * max coupling amplitude over the profile).
bool weak_probe_ok(const MediumParams& p, const CouplingProfile& profile);

/// Flat coefficient vector in interleaved order: [delta] for constant,
/// [a0, a1..an, b1..bn] for Fourier, [a0..ad] for Bernstein.
std::vector<double> waveform_coefficients(const DetuningWaveform& w);

/// JSON round trip, {"family": "...", "coefficients": [...]}.
std::string waveform_to_json(const DetuningWaveform& w);
DetuningWaveform waveform_from_json(const std::string& json_text);

/// Builds a waveform of the given family from its flat coefficient vector.
DetuningWaveform make_waveform(const std::string& family,
                               const std::vector<double>& coefficients);

namespace reference {

/// Fourier detuning optimized for mean CE over kappa in [0, 5] at
/// optical depth 200.
FourierDetuning broadband_fourier();

/// Fourier detuning optimized for kappa = 15 at optical depth 50.
FourierDetuning large_mismatch_fourier();

/// Bernstein detuning optimized for kappa = 15 at optical depth 50.
BernsteinDetuning large_mismatch_bernstein();

}  // namespace reference

}  // namespace fwm
