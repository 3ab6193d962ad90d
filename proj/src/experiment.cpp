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

#include "pqls/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>

#include "pqls/errors.hpp"
#include "pqls/instance_io.hpp"

namespace pqls {

double approximation_ratio(double e, double e_baseline) {
  if (!(e_baseline < 0.0)) {
    throw MetricUndefinedError("approximation ratio needs a negative baseline energy, got " +
                               format_double(e_baseline));
  }
  return e / e_baseline;
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t n_p, std::size_t k) {
  return derive_seed(master_seed, n_p, k);
}

namespace {

// Independent streams hanging off an instance seed.
std::uint64_t run_seed_for(std::uint64_t instance) { return derive_seed(instance, 0, 1); }
std::uint64_t baseline_seed_for(std::uint64_t instance) { return derive_seed(instance, 0, 2); }

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

SubsolverSpec subsolver_for_point(const ExperimentConfig& config, const SweepPoint& point) {
  SubsolverSpec spec = config.subsolver;
  if (auto* vqe = std::get_if<VqeSpec>(&spec); vqe && point.vqe_iterations > 0) {
    vqe->iterations = point.vqe_iterations;
  }
  return spec;
}

std::string describe(const std::exception& e) {
  std::string message = e.what();
  return message.empty() ? "unknown error" : message;
}

}  // namespace

std::vector<RunRecord> run_point(const ExperimentConfig& config, const SweepPoint& point,
                                 BaselineCache* cache) {
  std::vector<std::string> methods{"pqls"};
  if (config.compare_qls) methods.push_back("qls");

  const SubsolverSpec subsolver = subsolver_for_point(config, point);
  std::vector<RunRecord> records;
  for (std::size_t k = 1; k <= config.instances_per_point; ++k) {
    const std::uint64_t iseed = instance_seed(config.master_seed, point.n_p, k);
    const std::uint64_t run_seed = run_seed_for(iseed);

    RunRecord base;
    base.experiment_id = config.experiment_id;
    base.n_p = point.n_p;
    base.n_g = point.n_g;
    base.branches = point.branches;
    base.unit_length = point.unit_length;
    base.generations = point.generations;
    base.subsolver = subsolver_name(subsolver);
    base.vqe_iterations = std::holds_alternative<VqeSpec>(subsolver)
                              ? std::get<VqeSpec>(subsolver).iterations
                              : 0;
    base.instance_seed = iseed;
    base.master_seed = run_seed;

    auto fail_all = [&](const std::string& message) {
      for (const auto& method : methods) {
        RunRecord r = base;
        r.method = method;
        r.error = message;
        records.push_back(std::move(r));
      }
    };
    if (point.rejection) {
      fail_all(*point.rejection);
      continue;
    }

    std::optional<IsingProblem> problem;
    double baseline = 0.0;
    try {
      problem.emplace(generate_instance(point.n_p, iseed));
      const auto key = std::make_pair(point.n_p, iseed);
      if (cache && cache->count(key)) {
        baseline = cache->at(key);
      } else {
        baseline = solve_tabu(*problem, config.baseline.for_size(point.n_p),
                              baseline_seed_for(iseed))
                       .energy;
        if (cache) (*cache)[key] = baseline;
      }
    } catch (const std::exception& e) {
      fail_all("baseline: " + describe(e));
      continue;
    }

    PqlsParams params;
    params.sub_size = point.n_g;
    params.branches = point.branches;
    params.unit_length = point.unit_length;
    params.generations = point.generations;
    params.subsolver = subsolver;
    params.master_seed = run_seed;
    params.accept_rule = config.accept_rule;
    params.concurrency = config.concurrency;

    for (const auto& method : methods) {
      RunRecord r = base;
      r.method = method;
      r.baseline_energy = baseline;
      const auto start = std::chrono::steady_clock::now();
      try {
        const SpinConfiguration initial = default_initial(point.n_p, run_seed);
        if (method == "pqls") {
          const PqlsResult result = run_pqls(*problem, initial, params);
          r.best_energy = result.best_energy;
          r.subsolver_calls = result.subsolver_calls;
        } else {
          // Same per-branch budget: L * N_G sequential iterations.
          const BranchResult result =
              run_qls(*problem, initial, point.unit_length * point.generations, point.n_g,
                      subsolver, run_seed, config.accept_rule);
          r.best_energy = result.best_energy;
          r.subsolver_calls = result.subsolver_calls;
        }
        r.wall_time_ms = elapsed_ms(start);
        r.approx_ratio = approximation_ratio(r.best_energy, r.baseline_energy);
      } catch (const std::exception& e) {
        r.wall_time_ms = elapsed_ms(start);
        r.error = describe(e);
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::filesystem::path summary_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path out = csv_path;
  out.replace_filename(csv_path.stem().string() + ".summary.csv");
  return out;
}

SweepReport run_sweep(const ExperimentConfig& config) {
  const auto points = expand_points(config);

  SweepReport report;
  report.points = points.size();
  report.csv_path = config.output;
  report.summary_path = summary_path_for(config.output);
  if (report.csv_path.has_parent_path()) {
    std::filesystem::create_directories(report.csv_path.parent_path());
  }

  std::ofstream csv(report.csv_path, std::ios::binary | std::ios::trunc);
  if (!csv) throw std::runtime_error("cannot write " + report.csv_path.string());
  csv << csv_header() << '\n';

  BaselineCache cache;
  std::vector<RunRecord> all;
  for (const SweepPoint& point : points) {
    auto records = run_point(config, point, &cache);
    for (const auto& r : records) {
      csv << to_csv_row(r) << '\n';
      ++report.rows;
      if (!r.error.empty()) ++report.error_rows;
    }
    csv.flush();
    all.insert(all.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }

  std::ofstream summary(report.summary_path, std::ios::binary | std::ios::trunc);
  if (!summary) throw std::runtime_error("cannot write " + report.summary_path.string());
  write_summary(summary, all);
  return report;
}

}  // namespace pqls
