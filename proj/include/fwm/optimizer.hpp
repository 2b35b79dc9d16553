#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fwm/core.hpp"
#include "fwm/propagation.hpp"
#include "fwm/waveforms.hpp"

// Real-coded genetic algorithm over detuning-waveform coefficients.

namespace fwm {

/// Coefficient-vector layout for one waveform family. Gene order matches
/// the flat coefficient order of make_waveform().
struct GenomeSpec {
  std::string family = "fourier";  // "fourier" or "bernstein"
  int order = 3;                   // harmonics for fourier, degree for bernstein
  std::vector<std::pair<double, double>> bounds;  // per-gene [lo, hi]

  int gene_count() const;
  DetuningWaveform decode(const std::vector<double>& genome) const;

  static GenomeSpec fourier(int order = 3, double lo = -150.0,
                            double hi = 150.0);
  static GenomeSpec bernstein(int degree = 7, double lo = -150.0,
                              double hi = 150.0);
};

/// Cost = 1 - mean CE over kappa_samples (a single sample optimizes one
/// target mismatch). Carries the fixed simulation context.
struct CostSpec {
  std::vector<double> kappa_samples;
  MediumParams params{50.0, 1e-4, 0.03};
  CouplingProfile coupling = LinearRamp{1.5, 1.5};
  SolverOptions solver{1024, Backend::ReducedSteadyState, false};

  static CostSpec single(double kappa);
  static CostSpec average_over(std::vector<double> grid);
};

struct GAConfig {
  int population = 64;
  int generations = 200;
  int tournament_size = 3;
  double crossover_rate = 0.9;
  double mutation_sigma = 0.08;  // fraction of gene range, halved every 50 gen
  int elite_count = 2;
  std::uint64_t rng_seed = 1;
};

struct OptimizationReport {
  std::vector<double> best_genome;
  double best_cost = 1.0;
  std::vector<std::pair<double, double>> history;  // (best, mean) per generation
  long evaluations = 0;
  std::uint64_t seed = 0;
};

/// Total cost function: propagation failures count as worst cost 1 with a
/// diagnostic on stderr, so the GA never aborts mid-run.
double evaluate_cost(const std::vector<double>& genome, const GenomeSpec& spec,
                     const CostSpec& cost);

/// Uniform draws within bounds; the first genome is the all-zero baseline
/// so the optimum never regresses below the unoptimized waveform.
std::vector<std::vector<double>> seed_population(const GenomeSpec& spec,
                                                 const GAConfig& cfg);

/// Tournament selection, whole-arithmetic blend crossover, clamped
/// Gaussian mutation, elitism. Deterministic for a fixed seed.
OptimizationReport run_ga(const GenomeSpec& spec, const CostSpec& cost,
                          const GAConfig& cfg);

std::string report_to_json(const OptimizationReport& report,
                           const GenomeSpec& spec, const GAConfig& cfg);

}  // namespace fwm
