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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqls/engine.hpp"
#include "pqls/subsolver.hpp"

namespace pqls {

/// e / e_baseline. Throws MetricUndefinedError unless e_baseline < 0.
double approximation_ratio(double e, double e_baseline);

enum class SweepKind { grid_np_ng, branches, unit_length, vqe_iters, custom };

const char* to_string(SweepKind kind);
SweepKind sweep_kind_from_string(const std::string& name);

/// Tabu baseline settings. The tenure defaults to max(4, n/4) when unset.
struct BaselineSpec {
  std::optional<std::size_t> tenure;
  std::size_t budget_per_variable = 200;
  std::size_t restarts = 20;

  TabuSpec for_size(std::size_t n) const;
};

struct ExperimentConfig {
  std::string experiment_id = "experiment";
  SweepKind sweep = SweepKind::custom;

  // Axes; the sweep visits their Cartesian product.
  std::vector<std::size_t> n_p{36};
  std::vector<std::size_t> n_g{10};
  std::vector<std::size_t> branches{32};
  std::vector<std::size_t> unit_length{100};
  std::vector<std::size_t> generations{10};
  /// Only meaningful with a VQE subsolver; empty uses the spec's iterations.
  std::vector<std::size_t> vqe_iterations;
  /// unit_length sweeps derive generations = total_budget / unit_length.
  std::optional<std::size_t> total_budget;

  std::size_t instances_per_point = 5;
  SubsolverSpec subsolver = AnnealingSpec{};
  BaselineSpec baseline;
  /// Also run sequential QLS with L * N_G iterations on every instance.
  bool compare_qls = true;
  AcceptRule accept_rule = AcceptRule::improve_or_equal;
  std::uint64_t master_seed = 1;
  /// Engine threads; 0 means one per hardware thread.
  std::size_t concurrency = 0;
  std::filesystem::path output = "results.csv";
};

/// Throws ValidationError describing the first schema violation.
void validate(const ExperimentConfig& config);

/// Parses the JSON config schema documented in README.md. Unknown keys are
/// rejected. Throws ValidationError.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct SweepPoint {
  std::size_t n_p = 0;
  std::size_t n_g = 0;
  std::size_t branches = 0;
  std::size_t unit_length = 0;
  std::size_t generations = 0;
  std::size_t vqe_iterations = 0;
  /// Set when the point cannot run (e.g. budget not divisible by L).
  std::optional<std::string> rejection;
};

/// Cartesian product of the axes in the order n_p, n_g, branches,
/// unit_length, generations, vqe_iterations (last varies fastest).
std::vector<SweepPoint> expand_points(const ExperimentConfig& config);

struct RunRecord {
  std::string experiment_id;
  std::string method;  // "pqls" or "qls"
  std::size_t n_p = 0;
  std::size_t n_g = 0;
  std::size_t branches = 0;
  std::size_t unit_length = 0;
  std::size_t generations = 0;
  std::string subsolver;
  std::size_t vqe_iterations = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t master_seed = 0;
  double best_energy = 0.0;
  double baseline_energy = 0.0;
  double approx_ratio = 0.0;
  std::uint64_t subsolver_calls = 0;
  std::int64_t wall_time_ms = 0;
  /// Empty for successful rows.
  std::string error;
};

/// Seed of instance k (1-based) for problem size n_p. Shared by every point
/// with the same n_p, so different settings are compared on the same problems.
std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t n_p, std::size_t k);

/// Memoized baseline energies keyed by (n_p, instance seed).
using BaselineCache = std::map<std::pair<std::size_t, std::uint64_t>, double>;

/// Runs every instance of one point: tabu baseline, PQLS, and QLS when the
/// config asks for it. Failures become rows with the error column set.
std::vector<RunRecord> run_point(const ExperimentConfig& config, const SweepPoint& point,
                                 BaselineCache* cache = nullptr);

struct SweepReport {
  std::size_t points = 0;
  std::size_t rows = 0;
  std::size_t error_rows = 0;
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
};

/// Runs all points and writes config.output plus a sibling
/// "<stem>.summary.csv" with per-point mean and median approximation ratio.
SweepReport run_sweep(const ExperimentConfig& config);

std::filesystem::path summary_path_for(const std::filesystem::path& csv_path);

// CSV output: UTF-8, LF, header row, RFC 4180 quoting, 17 significant digits.

std::string csv_header();
std::string to_csv_row(const RunRecord& record);
/// Same as to_csv_row without the wall-time column; used for determinism checks.
std::string to_csv_row_without_time(const RunRecord& record);
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_summary(std::ostream& out, const std::vector<RunRecord>& records);

std::vector<std::string> split_csv_line(std::string_view line);

struct CsvValidation {
  std::size_t rows = 0;
  std::size_t error_rows = 0;
  std::vector<std::string> problems;

  bool ok() const noexcept { return problems.empty(); }
};

/// Re-checks an emitted results file: header, column count, integer and
/// float syntax, baseline < 0 and approx_ratio == best / baseline.
CsvValidation validate_csv(std::string_view text);
CsvValidation validate_csv_file(const std::filesystem::path& path);

}  // namespace pqls
