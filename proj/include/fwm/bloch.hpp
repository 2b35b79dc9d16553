#pragma once

#include <Eigen/Dense>
#include <utility>

#include "fwm/core.hpp"

// Atomic-coherence backends for the field propagation source terms:
// the closed-form adiabatic coherences, the steady state of the reduced
// weak-probe Bloch system (dephasing included), and a full four-level
// Lindblad steady-state solver used for validation.

namespace fwm {

struct Coherences {
  Complex rho21{0.0, 0.0};
  Complex rho31{0.0, 0.0};
  Complex rho41{0.0, 0.0};
};

/// The reduced steady-state coherences come out exactly twice the source
/// terms of the canonical two-mode matrix model; propagation rescales the
/// Bloch-backend coherences by this factor so all backends agree at
/// gamma = 0. Kept explicit rather than absorbed so tests can report it.
inline constexpr double kBlochSourceScale = 0.5;

/// Closed-form weak-probe coherences in their canonical adiabatic form:
///   rho31 = i (-|od|^2 op - conj(od) oc os) / D
///   rho41 = i (-conj(oc) od op + |oc|^2 os) / D
/// with D = (1 - 2 i delta) |oc|^2 + |od|^2.
std::pair<Complex, Complex> coherences_printed(Complex omega_p,
                                               Complex omega_s,
                                               Complex omega_c,
                                               Complex omega_d, double delta);

/// Steady state of the reduced weak-probe Bloch equations (time derivatives
/// zero, decay unit 1), solving the 3x3 complex linear system in
/// (rho41, rho31, rho21).
Coherences coherences_steady_reduced(Complex omega_p, Complex omega_s,
                                     Complex omega_c, Complex omega_d,
                                     double delta, double gamma);

/// Steady state of the full four-level master equation: null space of the
/// 16x16 Liouvillian, trace-normalized. Decay channels |n> -> |m| at rate
/// 1/2 for each excited n in {3,4} and ground m in {1,2}; ground-state
/// dephasing operator sqrt(gamma) (|1><1| - |2><2|).
Eigen::Matrix4cd steady_state_lindblad(Complex omega_p, Complex omega_s,
                                       Complex omega_c, Complex omega_d,
                                       double delta, double gamma);

/// (rho21, rho31, rho41) entries of a four-level density matrix.
Coherences coherences_of(const Eigen::Matrix4cd& rho);

}  // namespace fwm
