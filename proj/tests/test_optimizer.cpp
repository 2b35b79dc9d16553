#include "doctest.h"

#include <cmath>
#include <vector>

#include "fwm/optimizer.hpp"

using namespace fwm;

TEST_CASE("seed population respects bounds and injects the baseline") {
  GenomeSpec spec = GenomeSpec::fourier(3, -1.0, 1.0);
  GAConfig cfg;
  cfg.population = 10;
  cfg.rng_seed = 5;
  const auto pop = seed_population(spec, cfg);
  REQUIRE(pop.size() == 10);
  for (const auto& g : pop) {
    REQUIRE(g.size() == 7);
    for (double v : g) {
      CHECK(v >= -1.0);
      CHECK(v <= 1.0);
    }
  }
  for (double v : pop[0]) CHECK(v == 0.0);
}

TEST_CASE("seed population is deterministic per seed") {
  GenomeSpec spec = GenomeSpec::bernstein(7);
  GAConfig cfg;
  cfg.population = 8;
  cfg.rng_seed = 42;
  CHECK(seed_population(spec, cfg) == seed_population(spec, cfg));

  int distinct_pairs = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    GAConfig a = cfg, b = cfg;
    a.rng_seed = 2 * s;
    b.rng_seed = 2 * s + 1;
    if (seed_population(spec, a) != seed_population(spec, b)) ++distinct_pairs;
  }
  CHECK(distinct_pairs == 10);
}

TEST_CASE("genome length must match the family") {
  GenomeSpec spec = GenomeSpec::fourier(3);
  CHECK_THROWS_AS(spec.decode({1.0, 2.0}), Error);
  CHECK(spec.gene_count() == 7);
  CHECK(GenomeSpec::bernstein(7).gene_count() == 8);
}

TEST_CASE("cost of the zero genome equals the flat-detuning protocol") {
  GenomeSpec spec = GenomeSpec::fourier(3);
  CostSpec cost = CostSpec::single(5.0);
  cost.params = {200.0, 1e-4, 0.03};
  cost.solver = {1024, Backend::ReducedSteadyState, false};
  const double c = evaluate_cost(std::vector<double>(7, 0.0), spec, cost);
  CHECK(c == doctest::Approx(1.0 - 0.876).epsilon(0.2));
}

TEST_CASE("published broadband waveform scores a high average CE") {
  GenomeSpec spec = GenomeSpec::fourier(3);
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i / 4.0);
  CostSpec cost = CostSpec::average_over(grid);
  cost.params = {200.0, 1e-4, 0.03};
  cost.solver = {1024, Backend::ReducedSteadyState, false};
  const double c =
      evaluate_cost(waveform_coefficients(reference::broadband_fourier()),
                    spec, cost);
  CHECK(1.0 - c >= 0.85);
}

TEST_CASE("published large-mismatch bernstein waveform cost") {
  GenomeSpec spec = GenomeSpec::bernstein(7);
  CostSpec cost = CostSpec::single(15.0);  // defaults: alpha 50, gamma 1e-4
  const double c = evaluate_cost(
      waveform_coefficients(reference::large_mismatch_bernstein()), spec,
      cost);
  CHECK(c == doctest::Approx(1.0 - 0.469).epsilon(0.05));
}

TEST_CASE("minimal GA run: structure and elitism") {
  GenomeSpec spec = GenomeSpec::fourier(1, -20.0, 20.0);
  CostSpec cost = CostSpec::single(2.0);
  cost.solver = {128, Backend::ReducedSteadyState, false};
  GAConfig cfg;
  cfg.population = 4;
  cfg.generations = 1;
  cfg.elite_count = 1;
  cfg.rng_seed = 3;
  const OptimizationReport r = run_ga(spec, cost, cfg);
  REQUIRE(r.history.size() == 1);
  CHECK(r.history[0].first <= r.history[0].second);  // best <= mean
  CHECK(r.evaluations == 8);
}

TEST_CASE("GA is reproducible and monotone, and never loses to the baseline") {
  GenomeSpec spec = GenomeSpec::fourier(1, -60.0, 60.0);
  CostSpec cost = CostSpec::single(5.0);
  cost.solver = {128, Backend::ReducedSteadyState, false};
  GAConfig cfg;
  cfg.population = 8;
  cfg.generations = 12;
  cfg.rng_seed = 11;

  const OptimizationReport a = run_ga(spec, cost, cfg);
  const OptimizationReport b = run_ga(spec, cost, cfg);
  CHECK(a.best_genome == b.best_genome);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.history == b.history);

  for (std::size_t i = 1; i < a.history.size(); ++i)
    CHECK(a.history[i].first <= a.history[i - 1].first);

  const double baseline =
      evaluate_cost(std::vector<double>(spec.gene_count(), 0.0), spec, cost);
  CHECK(a.best_cost <= baseline);

  for (std::size_t g = 0; g < a.best_genome.size(); ++g) {
    CHECK(a.best_genome[g] >= spec.bounds[g].first);
    CHECK(a.best_genome[g] <= spec.bounds[g].second);
  }
}

TEST_CASE("config validation") {
  GenomeSpec spec = GenomeSpec::fourier(3);
  CostSpec cost = CostSpec::single(5.0);
  GAConfig bad;
  bad.population = 2;
  CHECK_THROWS_AS(run_ga(spec, cost, bad), Error);
  bad = GAConfig{};
  bad.elite_count = 64;
  CHECK_THROWS_AS(run_ga(spec, cost, bad), Error);
  CHECK_THROWS_AS(GenomeSpec::fourier(3, 5.0, -5.0), Error);
  CHECK_THROWS_AS(CostSpec::average_over({}), Error);
  CHECK_THROWS_AS(CostSpec::average_over({5.0, 1.0}), Error);
}

TEST_CASE("report serialization carries the run metadata") {
  GenomeSpec spec = GenomeSpec::fourier(1, -10.0, 10.0);
  CostSpec cost = CostSpec::single(2.0);
  cost.solver = {128, Backend::ReducedSteadyState, false};
  GAConfig cfg;
  cfg.population = 4;
  cfg.generations = 1;
  cfg.elite_count = 1;
  cfg.rng_seed = 99;
  const OptimizationReport r = run_ga(spec, cost, cfg);
  const std::string json = report_to_json(r, spec, cfg);
  CHECK(json.find("\"seed\": 99") != std::string::npos);
  CHECK(json.find("best_genome") != std::string::npos);
  CHECK(json.find("history") != std::string::npos);
}
