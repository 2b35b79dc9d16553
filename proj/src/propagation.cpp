#include "fwm/propagation.hpp"

#include <cmath>
#include <exception>
#include <iostream>
#include <mutex>

#include "fwm/analytic.hpp"
#include "fwm/bloch.hpp"
#include "parallel.hpp"

namespace fwm {

namespace {

using Vec2c = Eigen::Vector2cd;

struct Scenario {
  const MediumParams& params;
  const CouplingProfile& coupling;
  const DetuningWaveform& detuning;
  double kappa;
  Backend backend;

  Vec2c rhs(double z, const Vec2c& psi) const {
    const double delta = detuning_at(detuning, z);
    if (backend == Backend::MatrixModel) {
      const double theta = theta_at(coupling, z);
      const MixingMatrix mm =
          mixing_matrix(theta, delta, params.alpha, kappa);
      return Complex(0.0, -1.0) * (mm.m * psi);
    }
    const auto [oc, od] = coupling_at(coupling, z);
    Coherences c;
    if (backend == Backend::ReducedSteadyState) {
      c = coherences_steady_reduced(psi(0), psi(1), oc, od, delta,
                                    params.gamma);
    } else {
      c = coherences_of(steady_state_lindblad(psi(0), psi(1), oc, od, delta,
                                              params.gamma));
    }
    const Complex i(0.0, 1.0);
    const double src = params.alpha / 2.0 * kBlochSourceScale;
    Vec2c d;
    d(0) = i * src * c.rho31;
    d(1) = i * src * c.rho41 - i * kappa * psi(1);
    return d;
  }
};

// Classical RK4 over z in [0, 1]; record() sees every grid point
// including the initial one.
template <typename Record>
Vec2c rk4(const Scenario& sc, Vec2c psi, int steps, Record&& record) {
  const double h = 1.0 / steps;
  record(0.0, psi);
  for (int i = 0; i < steps; ++i) {
    const double z0 = i * h;
    const Vec2c k1 = sc.rhs(z0, psi);
    const Vec2c k2 = sc.rhs(z0 + h / 2, psi + (h / 2) * k1);
    const Vec2c k3 = sc.rhs(z0 + h / 2, psi + (h / 2) * k2);
    const Vec2c k4 = sc.rhs(z0 + h, psi + h * k3);
    psi += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record((i + 1) * h, psi);
  }
  return psi;
}

void check_options(const MediumParams& params, const SolverOptions& opts) {
  if (opts.steps < 16)
    throw Error(ErrorCode::ConfigError, "solver needs at least 16 steps");
  if (opts.backend == Backend::MatrixModel && params.gamma != 0.0)
    throw Error(ErrorCode::ConfigError,
                "matrix-model backend is a gamma = 0 model; use the "
                "reduced or lindblad backend for gamma > 0");
}

}  // namespace

PropagationResult propagate(const MediumParams& params,
                            const CouplingProfile& coupling,
                            const DetuningWaveform& detuning,
                            const MismatchSpec& mismatch,
                            const SolverOptions& opts) {
  validate_params(params);
  check_options(params, opts);
  if (opts.backend != Backend::MatrixModel &&
      !weak_probe_ok(params, coupling)) {
    static std::once_flag warned;
    std::call_once(warned, [&] {
      std::cerr << "fwm: warning: omega_p0 = " << params.omega_p0
                << " is not small against the coupling amplitudes; "
                   "the weak-probe backends may be inaccurate\n";
    });
  }

  const Scenario sc{params, coupling, detuning, mismatch.kappa, opts.backend};
  const double norm0 = params.omega_p0 * params.omega_p0;

  PropagationResult r;
  r.z_grid.reserve(opts.steps + 1);
  r.probe_power.reserve(opts.steps + 1);
  r.signal_power.reserve(opts.steps + 1);
  rk4(sc, Vec2c(Complex(params.omega_p0, 0.0), Complex(0.0, 0.0)), opts.steps,
      [&](double z, const Vec2c& psi) {
        r.z_grid.push_back(z);
        r.probe_power.push_back(std::norm(psi(0)) / norm0);
        r.signal_power.push_back(std::norm(psi(1)) / norm0);
      });
  r.ce = r.signal_power.back();
  r.loss = 1.0 - r.probe_power.back() - r.signal_power.back();

  if (opts.richardson_check) {
    const Vec2c fine =
        rk4(sc, Vec2c(Complex(params.omega_p0, 0.0), Complex(0.0, 0.0)),
            2 * opts.steps, [](double, const Vec2c&) {});
    const double ce_fine = std::norm(fine(1)) / norm0;
    if (std::abs(ce_fine - r.ce) > 1e-6)
      throw Error(ErrorCode::StepSizeNotConverged,
                  "half-step CE differs by " +
                      std::to_string(std::abs(ce_fine - r.ce)) +
                      "; increase steps");
  }
  return r;
}

double conversion_efficiency(const PropagationResult& result) {
  return result.ce;
}

std::vector<std::pair<double, double>> ce_sweep(
    const MediumParams& params, const CouplingProfile& coupling,
    const DetuningWaveform& detuning, const std::vector<double>& kappa_list,
    const SolverOptions& opts) {
  if (kappa_list.empty())
    throw Error(ErrorCode::ConfigError, "empty kappa list");
  std::vector<std::pair<double, double>> out(kappa_list.size());
  std::exception_ptr first_error;
  std::mutex err_mutex;
  detail::parallel_for(kappa_list.size(), [&](std::size_t i) {
    try {
      const PropagationResult r = propagate(
          params, coupling, detuning, MismatchSpec{kappa_list[i]}, opts);
      out[i] = {kappa_list[i], r.ce};
    } catch (...) {
      std::scoped_lock lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  });
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

std::vector<Eigen::Vector2cd> integrate_field(
    const Eigen::Vector2cd& initial, const MediumParams& params,
    const CouplingProfile& coupling, const DetuningWaveform& detuning,
    const MismatchSpec& mismatch, const SolverOptions& opts) {
  validate_params(params);
  check_options(params, opts);
  const Scenario sc{params, coupling, detuning, mismatch.kappa, opts.backend};
  std::vector<Vec2c> trajectory;
  trajectory.reserve(opts.steps + 1);
  rk4(sc, initial, opts.steps,
      [&](double, const Vec2c& psi) { trajectory.push_back(psi); });
  return trajectory;
}

}  // namespace fwm
