#include "fwm/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>

#include "json.hpp"
#include "parallel.hpp"

namespace fwm {

int GenomeSpec::gene_count() const {
  return family == "fourier" ? 2 * order + 1 : order + 1;
}

DetuningWaveform GenomeSpec::decode(const std::vector<double>& genome) const {
  if (static_cast<int>(genome.size()) != gene_count())
    throw Error(ErrorCode::ConfigError,
                "genome length " + std::to_string(genome.size()) +
                    " does not match family (" + std::to_string(gene_count()) +
                    " genes)");
  return make_waveform(family, genome);
}

namespace {

GenomeSpec make_spec(std::string family, int order, double lo, double hi) {
  if (!(lo < hi))
    throw Error(ErrorCode::ConfigError, "gene bounds need lo < hi");
  GenomeSpec s;
  s.family = std::move(family);
  s.order = order;
  s.bounds.assign(s.gene_count(), {lo, hi});
  return s;
}

void validate(const GenomeSpec& spec, const GAConfig& cfg) {
  if (spec.family != "fourier" && spec.family != "bernstein")
    throw Error(ErrorCode::ConfigError,
                "unknown genome family: " + spec.family);
  if (spec.order < 1)
    throw Error(ErrorCode::ConfigError, "genome order must be >= 1");
  if (static_cast<int>(spec.bounds.size()) != spec.gene_count())
    throw Error(ErrorCode::ConfigError, "bounds size does not match genome");
  for (auto [lo, hi] : spec.bounds)
    if (!(lo < hi))
      throw Error(ErrorCode::ConfigError, "gene bounds need lo < hi");
  if (cfg.population < 4)
    throw Error(ErrorCode::ConfigError, "population must be >= 4");
  if (cfg.elite_count < 0 || cfg.elite_count >= cfg.population)
    throw Error(ErrorCode::ConfigError, "elite_count must be < population");
  if (cfg.tournament_size < 1 || cfg.tournament_size > cfg.population)
    throw Error(ErrorCode::ConfigError, "bad tournament size");
  if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
    throw Error(ErrorCode::ConfigError, "crossover_rate must be in [0,1]");
}

double clamp_gene(double v, const std::pair<double, double>& b) {
  return std::clamp(v, b.first, b.second);
}

}  // namespace

GenomeSpec GenomeSpec::fourier(int order, double lo, double hi) {
  return make_spec("fourier", order, lo, hi);
}

GenomeSpec GenomeSpec::bernstein(int degree, double lo, double hi) {
  return make_spec("bernstein", degree, lo, hi);
}

CostSpec CostSpec::single(double kappa) {
  CostSpec c;
  c.kappa_samples = {kappa};
  return c;
}

CostSpec CostSpec::average_over(std::vector<double> grid) {
  if (grid.empty())
    throw Error(ErrorCode::ConfigError, "empty kappa grid");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw Error(ErrorCode::ConfigError, "kappa grid must be sorted");
  CostSpec c;
  c.kappa_samples = std::move(grid);
  return c;
}

double evaluate_cost(const std::vector<double>& genome, const GenomeSpec& spec,
                     const CostSpec& cost) {
  const DetuningWaveform w = spec.decode(genome);
  try {
    double sum = 0.0;
    for (double kappa : cost.kappa_samples) {
      const PropagationResult r = propagate(cost.params, cost.coupling, w,
                                            MismatchSpec{kappa}, cost.solver);
      sum += r.ce;
    }
    return 1.0 - sum / static_cast<double>(cost.kappa_samples.size());
  } catch (const Error& e) {
    std::cerr << "fwm: cost evaluation failed (" << e.what()
              << "); assigning worst cost\n";
    return 1.0;
  }
}

std::vector<std::vector<double>> seed_population(const GenomeSpec& spec,
                                                 const GAConfig& cfg) {
  validate(spec, cfg);
  std::mt19937_64 rng(cfg.rng_seed);
  const int genes = spec.gene_count();
  std::vector<std::vector<double>> pop(cfg.population,
                                       std::vector<double>(genes));
  for (int g = 0; g < genes; ++g)
    pop[0][g] = clamp_gene(0.0, spec.bounds[g]);  // unoptimized baseline
  for (int i = 1; i < cfg.population; ++i)
    for (int g = 0; g < genes; ++g) {
      std::uniform_real_distribution<double> u(spec.bounds[g].first,
                                               spec.bounds[g].second);
      pop[i][g] = u(rng);
    }
  return pop;
}

OptimizationReport run_ga(const GenomeSpec& spec, const CostSpec& cost,
                          const GAConfig& cfg) {
  validate(spec, cfg);
  if (cost.kappa_samples.empty())
    throw Error(ErrorCode::ConfigError, "cost spec has no kappa samples");
  if (cfg.generations < 1)
    throw Error(ErrorCode::ConfigError, "need at least one generation");

  std::mt19937_64 rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL);
  const int genes = spec.gene_count();

  std::vector<std::vector<double>> pop = seed_population(spec, cfg);
  std::vector<double> fitness(cfg.population);
  OptimizationReport report;
  report.seed = cfg.rng_seed;

  auto evaluate_all = [&] {
    detail::parallel_for(pop.size(), [&](std::size_t i) {
      fitness[i] = evaluate_cost(pop[i], spec, cost);
    });
    report.evaluations += static_cast<long>(pop.size());
  };
  evaluate_all();

  auto best_index = [&] {
    return static_cast<int>(
        std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
  };
  report.best_genome = pop[best_index()];
  report.best_cost = fitness[best_index()];

  std::uniform_int_distribution<int> pick(0, cfg.population - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto tournament = [&]() -> int {
    int winner = pick(rng);
    for (int t = 1; t < cfg.tournament_size; ++t) {
      const int c = pick(rng);
      if (fitness[c] < fitness[winner]) winner = c;
    }
    return winner;
  };

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    const double sigma_scale =
        std::pow(0.5, static_cast<double>((gen - 1) / 50));

    // elites survive unchanged
    std::vector<int> order(cfg.population);
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + cfg.elite_count,
                      order.end(),
                      [&](int a, int b) { return fitness[a] < fitness[b]; });
    std::vector<std::vector<double>> next;
    next.reserve(cfg.population);
    for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[e]]);

    while (static_cast<int>(next.size()) < cfg.population) {
      const auto& p1 = pop[tournament()];
      const auto& p2 = pop[tournament()];
      std::vector<double> child = p1;
      if (unit(rng) < cfg.crossover_rate)
        for (int g = 0; g < genes; ++g) {
          const double w = unit(rng);
          child[g] = w * p1[g] + (1.0 - w) * p2[g];
        }
      for (int g = 0; g < genes; ++g) {
        const double range = spec.bounds[g].second - spec.bounds[g].first;
        std::normal_distribution<double> n(
            0.0, cfg.mutation_sigma * sigma_scale * range);
        child[g] = clamp_gene(child[g] + n(rng), spec.bounds[g]);
      }
      next.push_back(std::move(child));
    }

    pop = std::move(next);
    evaluate_all();

    const int bi = best_index();
    if (fitness[bi] < report.best_cost) {
      report.best_cost = fitness[bi];
      report.best_genome = pop[bi];
    }
    const double mean =
        std::accumulate(fitness.begin(), fitness.end(), 0.0) / fitness.size();
    report.history.emplace_back(report.best_cost, mean);
  }
  return report;
}

std::string report_to_json(const OptimizationReport& report,
                           const GenomeSpec& spec, const GAConfig& cfg) {
  nlohmann::json j;
  j["best_genome"] = report.best_genome;
  j["best_cost"] = report.best_cost;
  nlohmann::json hist = nlohmann::json::array();
  for (auto [best, mean] : report.history)
    hist.push_back({{"best", best}, {"mean", mean}});
  j["history"] = hist;
  j["evaluations"] = report.evaluations;
  j["seed"] = report.seed;
  j["config"] = {{"family", spec.family},
                 {"order", spec.order},
                 {"population", cfg.population},
                 {"generations", cfg.generations},
                 {"tournament_size", cfg.tournament_size},
                 {"crossover_rate", cfg.crossover_rate},
                 {"mutation_sigma", cfg.mutation_sigma},
                 {"elite_count", cfg.elite_count}};
  return j.dump(2);
}

}  // namespace fwm
