// Command-line reproduction and exploration tool. Emits CSV/JSON data
// files for the three standard figures, single propagation runs, and GA
// waveform optimization.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwm/analytic.hpp"
#include "fwm/core.hpp"
#include "fwm/optimizer.hpp"
#include "fwm/propagation.hpp"
#include "fwm/waveforms.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct RunConfig {
  fwm::MediumParams medium{200.0, 1e-4, 0.03};
  fwm::CouplingProfile coupling = fwm::LinearRamp{1.5, 1.5};
  std::optional<fwm::DetuningWaveform> detuning;
  double kappa = 5.0;
  std::vector<double> kappa_grid;
  fwm::SolverOptions solver{4096, fwm::Backend::ReducedSteadyState, true};
  fwm::GAConfig ga;
  std::string cost_type = "average";
  double cost_kappa = 15.0;
  std::vector<double> cost_grid;
  std::string genome_family = "fourier";
  int genome_order = 3;
  double genome_lo = -150.0, genome_hi = 150.0;

  json resolved;  // echoed into output headers
};

fwm::Backend parse_backend(const std::string& name) {
  if (name == "matrix") return fwm::Backend::MatrixModel;
  if (name == "reduced") return fwm::Backend::ReducedSteadyState;
  if (name == "lindblad") return fwm::Backend::FullLindblad;
  throw fwm::Error(fwm::ErrorCode::ConfigError,
                   "unknown backend '" + name +
                       "' (expected matrix, reduced or lindblad)");
}

std::string backend_name(fwm::Backend b) {
  switch (b) {
    case fwm::Backend::MatrixModel: return "matrix";
    case fwm::Backend::ReducedSteadyState: return "reduced";
    default: return "lindblad";
  }
}

fwm::CouplingProfile parse_coupling(const json& j) {
  const std::string type = j.value("type", "linear_ramp");
  if (type == "linear_ramp")
    return fwm::LinearRamp{j.value("omega_c0", 1.5), j.value("omega_d0", 1.5)};
  if (type == "constant_ratio")
    return fwm::ConstantRatio{j.value("theta", M_PI / 4.0)};
  if (type == "constant_amplitudes")
    return fwm::ConstantAmplitudes{j.value("omega_c", 1.5),
                                   j.value("omega_d", 1.5)};
  throw fwm::Error(fwm::ErrorCode::ConfigError,
                   "unknown coupling type: " + type);
}

json coupling_json(const fwm::CouplingProfile& c) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, fwm::LinearRamp>)
          return {{"type", "linear_ramp"},
                  {"omega_c0", p.omega_c0},
                  {"omega_d0", p.omega_d0}};
        else if constexpr (std::is_same_v<T, fwm::ConstantRatio>)
          return {{"type", "constant_ratio"}, {"theta", p.theta}};
        else
          return {{"type", "constant_amplitudes"},
                  {"omega_c", p.omega_c},
                  {"omega_d", p.omega_d}};
      },
      c);
}

std::vector<double> parse_grid(const json& j) {
  if (j.is_array()) return j.get<std::vector<double>>();
  const double lo = j.value("min", 0.0);
  const double hi = j.value("max", 5.0);
  const double step = j.value("step", 0.1);
  if (!(step > 0.0) || hi < lo)
    throw fwm::Error(fwm::ErrorCode::ConfigError, "bad kappa grid");
  std::vector<double> g;
  const int n = static_cast<int>(std::round((hi - lo) / step));
  for (int i = 0; i <= n; ++i) g.push_back(lo + i * step);
  return g;
}

RunConfig parse_config(const json& j, RunConfig cfg) {
  if (j.contains("medium")) {
    const auto& m = j["medium"];
    cfg.medium.alpha = m.value("alpha", cfg.medium.alpha);
    cfg.medium.gamma = m.value("gamma", cfg.medium.gamma);
    cfg.medium.omega_p0 = m.value("omega_p0", cfg.medium.omega_p0);
  }
  if (j.contains("coupling")) cfg.coupling = parse_coupling(j["coupling"]);
  if (j.contains("detuning")) {
    const auto& d = j["detuning"];
    cfg.detuning = fwm::make_waveform(
        d.value("family", "constant"),
        d.value("coefficients", std::vector<double>{0.0}));
  }
  if (j.contains("kappa")) cfg.kappa = j["kappa"].get<double>();
  if (j.contains("kappa_grid")) cfg.kappa_grid = parse_grid(j["kappa_grid"]);
  if (j.contains("solver")) {
    const auto& s = j["solver"];
    cfg.solver.steps = s.value("steps", cfg.solver.steps);
    if (s.contains("backend"))
      cfg.solver.backend = parse_backend(s["backend"].get<std::string>());
    cfg.solver.richardson_check =
        s.value("richardson_check", cfg.solver.richardson_check);
  }
  if (j.contains("ga")) {
    const auto& g = j["ga"];
    cfg.ga.population = g.value("population", cfg.ga.population);
    cfg.ga.generations = g.value("generations", cfg.ga.generations);
    cfg.ga.tournament_size = g.value("tournament_size", cfg.ga.tournament_size);
    cfg.ga.crossover_rate = g.value("crossover_rate", cfg.ga.crossover_rate);
    cfg.ga.mutation_sigma = g.value("mutation_sigma", cfg.ga.mutation_sigma);
    cfg.ga.elite_count = g.value("elite_count", cfg.ga.elite_count);
    cfg.ga.rng_seed = g.value("seed", cfg.ga.rng_seed);
  }
  if (j.contains("cost")) {
    const auto& c = j["cost"];
    cfg.cost_type = c.value("type", cfg.cost_type);
    cfg.cost_kappa = c.value("kappa", cfg.cost_kappa);
    if (c.contains("grid")) cfg.cost_grid = parse_grid(c["grid"]);
  }
  if (j.contains("genome")) {
    const auto& g = j["genome"];
    cfg.genome_family = g.value("family", cfg.genome_family);
    cfg.genome_order = g.value("order", cfg.genome_order);
    cfg.genome_lo = g.value("lo", cfg.genome_lo);
    cfg.genome_hi = g.value("hi", cfg.genome_hi);
  }
  return cfg;
}

json resolved_json(const RunConfig& cfg) {
  json j;
  j["medium"] = {{"alpha", cfg.medium.alpha},
                 {"gamma", cfg.medium.gamma},
                 {"omega_p0", cfg.medium.omega_p0}};
  j["coupling"] = coupling_json(cfg.coupling);
  if (cfg.detuning)
    j["detuning"] = json::parse(fwm::waveform_to_json(*cfg.detuning));
  j["solver"] = {{"steps", cfg.solver.steps},
                 {"backend", backend_name(cfg.solver.backend)},
                 {"richardson_check", cfg.solver.richardson_check}};
  return j;
}

std::ofstream open_out(const std::string& dir, const std::string& name,
                       const json& resolved) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out)
    throw fwm::Error(fwm::ErrorCode::ConfigError,
                     "cannot write output file: " + path.string());
  out << "# config " << resolved.dump() << "\n";
  return out;
}

void write_row(std::ofstream& out, const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    out << (i ? "," : "") << fmt(cells[i]);
  out << "\n";
}

// --- subcommands -----------------------------------------------------------

void cmd_fig2(const RunConfig& cfg, const std::string& out_dir) {
  // gamma = 0 throughout: this comparison is a matrix-model construct
  fwm::MediumParams med = cfg.medium;
  med.gamma = 0.0;
  fwm::SolverOptions opts = cfg.solver;
  opts.backend = fwm::Backend::MatrixModel;

  json resolved = resolved_json(cfg);
  resolved["medium"]["gamma"] = 0.0;
  resolved["solver"]["backend"] = "matrix";
  auto out = open_out(out_dir, "fig2_ce_vs_kappa.csv", resolved);
  out << "kappa,ce_fixed_analytic,ce_opt_analytic,ce_fixed_numeric,"
         "ce_opt_numeric\n";

  const auto fixed = fwm::optimal_constants(0.0, med.alpha);
  for (int i = 0; i <= 50; ++i) {
    const double kappa = 0.1 * i;
    const auto opt = fwm::optimal_constants(kappa, med.alpha);
    const double fa =
        fwm::ce_closed_form(fixed.theta, fixed.delta, med.alpha, kappa);
    const double oa =
        fwm::ce_closed_form(opt.theta, opt.delta, med.alpha, kappa);
    const double fn =
        fwm::propagate(med, fwm::ConstantRatio{fixed.theta},
                       fwm::ConstantDetuning{fixed.delta},
                       fwm::MismatchSpec{kappa}, opts)
            .ce;
    const double on = fwm::propagate(med, fwm::ConstantRatio{opt.theta},
                                     fwm::ConstantDetuning{opt.delta},
                                     fwm::MismatchSpec{kappa}, opts)
                          .ce;
    write_row(out, {kappa, fa, oa, fn, on});
  }
}

void cmd_fig3(const RunConfig& cfg, const std::string& out_dir) {
  const fwm::DetuningWaveform wf =
      cfg.detuning.value_or(fwm::reference::broadband_fourier());
  const json resolved = resolved_json(cfg);

  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(0.1 * i);
  const auto p2 = fwm::ce_sweep(cfg.medium, cfg.coupling,
                                fwm::ConstantDetuning{0.0}, grid, cfg.solver);
  const auto p3 =
      fwm::ce_sweep(cfg.medium, cfg.coupling, wf, grid, cfg.solver);

  auto out = open_out(out_dir, "fig3_ce_vs_kappa.csv", resolved);
  out << "kappa,ce_protocol2,ce_protocol3\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    write_row(out, {grid[i], p2[i].second, p3[i].second});

  auto wout = open_out(out_dir, "fig3_waveform.csv", resolved);
  wout << "z,delta,omega_c,omega_d\n";
  for (int i = 0; i <= 200; ++i) {
    const double z = i / 200.0;
    const auto [oc, od] = fwm::coupling_at(cfg.coupling, z);
    write_row(wout, {z, fwm::detuning_at(wf, z), oc, od});
  }
}

void cmd_fig4(const RunConfig& cfg, const std::string& out_dir) {
  const double kappa = cfg.kappa;
  const json resolved = resolved_json(cfg);

  const fwm::FourierDetuning four = fwm::reference::large_mismatch_fourier();
  const fwm::BernsteinDetuning bern =
      fwm::reference::large_mismatch_bernstein();

  auto run = [&](const fwm::DetuningWaveform& w) {
    return fwm::propagate(cfg.medium, cfg.coupling, w,
                          fwm::MismatchSpec{kappa}, cfg.solver);
  };
  auto dump = [&](const std::string& name, const fwm::DetuningWaveform& w,
                  const fwm::PropagationResult& r) {
    auto out = open_out(out_dir, name, resolved);
    out << "z,delta,probe_power,signal_power\n";
    for (std::size_t i = 0; i < r.z_grid.size(); ++i)
      write_row(out, {r.z_grid[i], fwm::detuning_at(w, r.z_grid[i]),
                      r.probe_power[i], r.signal_power[i]});
  };

  const auto rf = run(four);
  const auto rb = run(bern);
  dump("fig4_fourier.csv", four, rf);
  dump("fig4_bernstein.csv", bern, rb);

  // protocol I and II references at the same mismatch
  fwm::MediumParams med0 = cfg.medium;
  med0.gamma = 0.0;
  fwm::SolverOptions mopts = cfg.solver;
  mopts.backend = fwm::Backend::MatrixModel;
  const auto opt = fwm::optimal_constants(kappa, cfg.medium.alpha);
  const double ce1 =
      fwm::propagate(med0, fwm::ConstantRatio{opt.theta},
                     fwm::ConstantDetuning{opt.delta},
                     fwm::MismatchSpec{kappa}, mopts)
          .ce;
  const double ce2 = run(fwm::ConstantDetuning{0.0}).ce;

  json summary;
  summary["config"] = resolved;
  summary["kappa"] = kappa;
  summary["ce"] = {{"protocol1", ce1},
                   {"protocol2", ce2},
                   {"protocol3_fourier", rf.ce},
                   {"protocol3_bernstein", rb.ce}};
  std::filesystem::create_directories(out_dir);
  std::ofstream js(std::filesystem::path(out_dir) / "fig4_summary.json");
  js << summary.dump(2) << "\n";
}

void cmd_optimize(const RunConfig& cfg, const std::string& out_dir) {
  fwm::GenomeSpec spec =
      cfg.genome_family == "bernstein"
          ? fwm::GenomeSpec::bernstein(cfg.genome_order, cfg.genome_lo,
                                       cfg.genome_hi)
          : fwm::GenomeSpec::fourier(cfg.genome_order, cfg.genome_lo,
                                     cfg.genome_hi);

  fwm::CostSpec cost = [&] {
    if (cfg.cost_type == "single") return fwm::CostSpec::single(cfg.cost_kappa);
    if (cfg.cost_type == "average") {
      std::vector<double> grid = cfg.cost_grid;
      if (grid.empty())
        for (int i = 0; i <= 20; ++i) grid.push_back(i / 4.0);
      return fwm::CostSpec::average_over(grid);
    }
    throw fwm::Error(fwm::ErrorCode::ConfigError,
                     "cost type must be 'single' or 'average'");
  }();
  cost.params = cfg.medium;
  cost.coupling = cfg.coupling;
  cost.solver = cfg.solver;

  const fwm::OptimizationReport report = fwm::run_ga(spec, cost, cfg.ga);

  std::filesystem::create_directories(out_dir);
  std::ofstream js(std::filesystem::path(out_dir) / "optimize_report.json");
  js << fwm::report_to_json(report, spec, cfg.ga) << "\n";

  const fwm::DetuningWaveform best = spec.decode(report.best_genome);
  auto out = open_out(out_dir, "optimize_waveform.csv", resolved_json(cfg));
  out << "z,delta\n";
  for (int i = 0; i < 256; ++i) {
    const double z = i / 255.0;
    write_row(out, {z, fwm::detuning_at(best, z)});
  }
}

void cmd_propagate(const RunConfig& cfg, const std::string& out_dir) {
  const fwm::DetuningWaveform wf =
      cfg.detuning.value_or(fwm::DetuningWaveform{fwm::ConstantDetuning{0.0}});
  const auto r = fwm::propagate(cfg.medium, cfg.coupling, wf,
                                fwm::MismatchSpec{cfg.kappa}, cfg.solver);
  json resolved = resolved_json(cfg);
  resolved["kappa"] = cfg.kappa;
  auto out = open_out(out_dir, "propagate.csv", resolved);
  out << "z,probe_power,signal_power\n";
  for (std::size_t i = 0; i < r.z_grid.size(); ++i)
    write_row(out, {r.z_grid[i], r.probe_power[i], r.signal_power[i]});
  out << "# ce " << fmt(r.ce) << "\n";
  std::cout << "ce " << fmt(r.ce) << "\n";
}

int classify(const fwm::Error& e) {
  switch (e.code()) {
    case fwm::ErrorCode::ConfigError:
    case fwm::ErrorCode::NonPositiveAlpha:
    case fwm::ErrorCode::NegativeGamma:
    case fwm::ErrorCode::NonPositiveProbe:
      return kExitConfig;
    default:
      return kExitSolver;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-mismatched four-wave-mixing conversion simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", backend_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<int> steps_flag;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed_flag, "GA random seed");
  app.add_option("--steps", steps_flag, "solver grid size");
  app.add_option("--backend", backend_flag, "matrix|reduced|lindblad");

  auto* fig2 = app.add_subcommand(
      "fig2", "CE vs mismatch, fixed vs per-kappa optimal constants");
  auto* fig3 = app.add_subcommand(
      "fig3", "CE vs mismatch for linear-ramp couplings, flat vs Fourier "
              "detuning");
  auto* fig4 = app.add_subcommand(
      "fig4", "large-mismatch transmissions for the optimized waveforms");
  auto* optimize =
      app.add_subcommand("optimize", "GA search over detuning coefficients");
  auto* propagate = app.add_subcommand("propagate", "single propagation run");

  for (auto* sub : {fig2, fig3, fig4, optimize, propagate})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig base;
    if (fig2->parsed()) base.medium.gamma = 0.0;
    if (fig4->parsed()) {
      base.medium.alpha = 50.0;
      base.kappa = 15.0;
    }
    if (propagate->parsed()) base.kappa = 5.0;

    json j = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw fwm::Error(fwm::ErrorCode::ConfigError,
                         "cannot open config file: " + config_path);
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw fwm::Error(fwm::ErrorCode::ConfigError,
                         std::string("config parse error: ") + e.what());
      }
    }
    RunConfig cfg = parse_config(j, base);
    if (seed_flag) cfg.ga.rng_seed = *seed_flag;
    if (steps_flag) cfg.solver.steps = *steps_flag;
    if (!backend_flag.empty()) cfg.solver.backend = parse_backend(backend_flag);

    if (fig2->parsed()) cmd_fig2(cfg, out_dir);
    if (fig3->parsed()) cmd_fig3(cfg, out_dir);
    if (fig4->parsed()) cmd_fig4(cfg, out_dir);
    if (optimize->parsed()) cmd_optimize(cfg, out_dir);
    if (propagate->parsed()) cmd_propagate(cfg, out_dir);
  } catch (const fwm::Error& e) {
    std::cerr << "fwm: error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "fwm: error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
