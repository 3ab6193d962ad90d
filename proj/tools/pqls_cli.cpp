// Copyright 2026 The PQLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: instance generation, single runs, baselines,
// config-driven sweeps and CSV validation.
//
// Exit codes: 0 success, 1 validation or usage error, 2 sweep finished with
// error rows.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pqls/engine.hpp"
#include "pqls/errors.hpp"
#include "pqls/experiment.hpp"
#include "pqls/instance_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPartial = 2;

// PQLS_THREADS overrides the engine thread count; unset leaves the default.
std::optional<std::size_t> threads_from_env() {
  const char* value = std::getenv("PQLS_THREADS");
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0') throw pqls::ValidationError("PQLS_THREADS must be a non-negative integer");
  return static_cast<std::size_t>(parsed);
}

struct SolveOptions {
  std::string instance;
  std::size_t sub_size = 8;
  std::size_t branches = 1;
  std::size_t unit_length = 100;
  std::size_t generations = 1;
  std::string subsolver = "exact";
  pqls::AnnealingSpec annealing;
  pqls::TabuSpec tabu;
  pqls::VqeSpec vqe;
  std::uint64_t seed = 1;
  std::string accept_rule = "improve_or_equal";
  bool json = false;
};

pqls::SubsolverSpec make_subsolver(const SolveOptions& o) {
  if (o.subsolver == "exact") return pqls::ExactSpec{};
  if (o.subsolver == "annealing") return o.annealing;
  if (o.subsolver == "tabu") return o.tabu;
  if (o.subsolver == "vqe") return o.vqe;
  throw pqls::ValidationError("unknown subsolver '" + o.subsolver + "'");
}

int run_solve(const SolveOptions& o) {
  const pqls::IsingProblem problem = pqls::load_instance(o.instance);
  pqls::PqlsParams params;
  params.sub_size = o.sub_size;
  params.branches = o.branches;
  params.unit_length = o.unit_length;
  params.generations = o.generations;
  params.subsolver = make_subsolver(o);
  params.master_seed = o.seed;
  params.accept_rule = pqls::accept_rule_from_string(o.accept_rule);
  params.concurrency = threads_from_env().value_or(0);

  const auto initial = pqls::default_initial(problem.size(), o.seed);
  const auto start = std::chrono::steady_clock::now();
  const pqls::PqlsResult result = pqls::run_pqls(problem, initial, params);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();

  if (o.json) {
    nlohmann::json out;
    out["n"] = problem.size();
    out["sub_size"] = params.sub_size;
    out["branches"] = params.branches;
    out["unit_length"] = params.unit_length;
    out["generations"] = params.generations;
    out["subsolver"] = pqls::subsolver_name(params.subsolver);
    out["accept_rule"] = pqls::to_string(params.accept_rule);
    out["master_seed"] = params.master_seed;
    out["initial_energy"] = pqls::energy(problem, initial);
    out["best_energy"] = result.best_energy;
    out["per_generation"] = result.per_generation;
    out["subsolver_calls"] = result.subsolver_calls;
    out["wall_time_ms"] = ms;
    std::vector<int> spins(result.best_config.spins().begin(), result.best_config.spins().end());
    out["best_config"] = spins;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "best_energy " << pqls::format_double(result.best_energy) << '\n'
              << "subsolver_calls " << result.subsolver_calls << '\n'
              << "wall_time_ms " << ms << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel quantum local search for Ising problems"};
  app.require_subcommand(1);

  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random dense instance file");
  gen->add_option("--n", gen_n, "Number of spins")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Instance seed")->required();
  gen->add_option("--out", gen_out, "Output path (stdout if omitted)");

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Run QLS/PQLS on an instance file");
  solve->add_option("--instance", solve_opts.instance, "Instance file")->required();
  solve->add_option("--sub-size", solve_opts.sub_size, "Sub-problem size N_g");
  solve->add_option("--branches", solve_opts.branches, "Branches per generation B");
  solve->add_option("--unit-length", solve_opts.unit_length, "Iterations per branch L");
  solve->add_option("--generations", solve_opts.generations, "Generations N_G");
  solve->add_option("--subsolver", solve_opts.subsolver, "exact | annealing | tabu | vqe");
  solve->add_option("--sweeps", solve_opts.annealing.sweeps, "Annealing sweeps");
  solve->add_option("--t-initial", solve_opts.annealing.t_initial, "Annealing start temperature");
  solve->add_option("--t-final", solve_opts.annealing.t_final, "Annealing end temperature");
  solve->add_option("--tenure", solve_opts.tabu.tenure, "Tabu tenure");
  solve->add_option("--budget", solve_opts.tabu.budget, "Tabu iterations per restart");
  solve->add_option("--restarts", solve_opts.tabu.restarts, "Tabu restarts");
  solve->add_option("--layers", solve_opts.vqe.layers, "VQE ansatz depth");
  solve->add_option("--iterations", solve_opts.vqe.iterations, "VQE SPSA iterations");
  solve->add_option("--shots", solve_opts.vqe.shots, "VQE readout shots");
  solve->add_option("--seed", solve_opts.seed, "Master seed");
  solve->add_option("--accept-rule", solve_opts.accept_rule, "improve_or_equal | always");
  solve->add_flag("--json", solve_opts.json, "Print a JSON summary");

  std::string base_instance, base_out;
  std::uint64_t base_seed = 0;
  auto* baseline = app.add_subcommand("baseline", "Tabu baseline energy of an instance");
  baseline->add_option("--instance", base_instance, "Instance file")->required();
  baseline->add_option("--seed", base_seed, "Tabu seed");
  baseline->add_option("--out", base_out, "Write the energy here as well as to stdout");

  std::string sweep_config, sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Run a config-driven experiment sweep");
  sweep->add_option("--config", sweep_config, "JSON config file")->required();
  sweep->add_option("--out", sweep_out, "CSV output (overrides the config)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a results CSV");
  validate->add_option("--csv", validate_path, "CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen) {
      const auto problem = pqls::generate_instance(gen_n, gen_seed);
      if (gen_out.empty()) {
        std::cout << pqls::write_instance(problem);
      } else {
        pqls::save_instance(problem, gen_out);
      }
      return kExitOk;
    }
    if (*solve) return run_solve(solve_opts);
    if (*baseline) {
      const auto problem = pqls::load_instance(base_instance);
      const auto result =
          pqls::solve_tabu(problem, pqls::baseline_tabu_spec(problem.size()), base_seed);
      const std::string text = pqls::format_double(result.energy);
      std::cout << text << '\n';
      if (!base_out.empty()) {
        std::ofstream out(base_out);
        if (!out) throw std::runtime_error("cannot write " + base_out);
        out << text << '\n';
      }
      return kExitOk;
    }
    if (*sweep) {
      pqls::ExperimentConfig config = pqls::load_experiment_config(sweep_config);
      if (!sweep_out.empty()) config.output = sweep_out;
      if (auto threads = threads_from_env()) config.concurrency = *threads;
      const auto report = pqls::run_sweep(config);
      std::cerr << "points " << report.points << ", rows " << report.rows << ", error rows "
                << report.error_rows << "\n"
                << "wrote " << report.csv_path.string() << " and "
                << report.summary_path.string() << '\n';
      return report.error_rows ? kExitPartial : kExitOk;
    }
    if (*validate) {
      const auto check = pqls::validate_csv_file(validate_path);
      for (const auto& p : check.problems) std::cerr << p << '\n';
      std::cout << "rows " << check.rows << ", error rows " << check.error_rows << ", "
                << (check.ok() ? "valid" : "invalid") << '\n';
      return check.ok() ? kExitOk : kExitInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
