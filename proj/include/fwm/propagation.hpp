#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "fwm/core.hpp"
#include "fwm/waveforms.hpp"

// Spatial integration of the probe/signal pair across the medium under
// either the two-mode matrix model or a Bloch coherence backend, and the
// conversion-efficiency observables built on top of it.

namespace fwm {

enum class Backend {
  MatrixModel,         // canonical two-mode model, gamma = 0 only
  ReducedSteadyState,  // reduced weak-probe Bloch steady state, any gamma
  FullLindblad,        // four-level master-equation steady state (slow)
};

struct SolverOptions {
  int steps = 4096;  // fixed RK4 grid, >= 16
  Backend backend = Backend::MatrixModel;
  bool richardson_check = true;  // verify CE against a half-step rerun
};

struct PropagationResult {
  std::vector<double> z_grid;
  std::vector<double> probe_power;   // |omega_p(z)|^2 / |omega_p0|^2
  std::vector<double> signal_power;  // |omega_s(z)|^2 / |omega_p0|^2
  double ce = 0.0;                   // signal_power at z = 1
  double loss = 0.0;                 // 1 - probe_power(1) - signal_power(1)
};

/// Integrates the field pair from (omega_p0, 0) at z = 0 to z = 1.
PropagationResult propagate(const MediumParams& params,
                            const CouplingProfile& coupling,
                            const DetuningWaveform& detuning,
                            const MismatchSpec& mismatch,
                            const SolverOptions& opts = {});

double conversion_efficiency(const PropagationResult& result);

/// One propagate() per kappa, results in input order. Evaluations run
/// concurrently but assembly is deterministic.
std::vector<std::pair<double, double>> ce_sweep(
    const MediumParams& params, const CouplingProfile& coupling,
    const DetuningWaveform& detuning, const std::vector<double>& kappa_list,
    const SolverOptions& opts = {});

/// Low-level initial-value integration from an arbitrary field state at
/// z = 0; returns steps + 1 samples on the uniform grid. Used for
/// dark/bright-mode diagnostics where the boundary condition of
/// propagate() does not apply.
std::vector<Eigen::Vector2cd> integrate_field(
    const Eigen::Vector2cd& initial, const MediumParams& params,
    const CouplingProfile& coupling, const DetuningWaveform& detuning,
    const MismatchSpec& mismatch, const SolverOptions& opts = {});

}  // namespace fwm
