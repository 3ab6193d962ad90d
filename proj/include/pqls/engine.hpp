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
#include <string>
#include <vector>

#include "pqls/ising.hpp"
#include "pqls/rng.hpp"
#include "pqls/subsolver.hpp"

namespace pqls {

enum class AcceptRule {
  /// Keep the embedded sub-solution only if the full energy does not rise.
  improve_or_equal,
  /// Always embed the sub-solution.
  always,
};

const char* to_string(AcceptRule rule);
/// Inverse of to_string; throws ValidationError on unknown names.
AcceptRule accept_rule_from_string(const std::string& name);

struct PqlsParams {
  std::size_t sub_size = 8;     // N_g
  std::size_t branches = 1;     // B
  std::size_t unit_length = 1;  // L, QLS iterations per branch per generation
  std::size_t generations = 1;  // N_G
  SubsolverSpec subsolver = ExactSpec{};
  std::uint64_t master_seed = 0;
  AcceptRule accept_rule = AcceptRule::improve_or_equal;
  /// Worker threads for the branches of one generation; 0 means one per
  /// hardware thread. Has no effect on results.
  std::size_t concurrency = 1;
  /// Keep every BranchResult in PqlsResult::per_branch.
  bool keep_branches = false;
};

/// Throws ValidationError if any count is zero, the subsolver spec is
/// invalid, or sub_size exceeds n.
void validate(const PqlsParams& params, std::size_t n);

struct BranchResult {
  SpinConfiguration best_config;
  double best_energy = 0.0;
  /// Best-so-far energy after each of the L iterations.
  std::vector<double> trajectory;
  std::size_t generation_index = 0;
  std::size_t branch_index = 0;
  std::uint64_t subsolver_calls = 0;

  friend bool operator==(const BranchResult&, const BranchResult&) = default;
};

struct PqlsResult {
  SpinConfiguration best_config;
  double best_energy = 0.0;
  /// Incumbent energy at the end of each generation.
  std::vector<double> per_generation;
  /// Filled only when PqlsParams::keep_branches is set; generation-major.
  std::vector<BranchResult> per_branch;
  std::uint64_t subsolver_calls = 0;

  friend bool operator==(const PqlsResult&, const PqlsResult&) = default;
};

struct StepResult {
  SpinConfiguration config;
  double energy = 0.0;
  bool accepted = false;
  std::vector<std::size_t> subset;
};

/// One local-search iteration: draw a uniform random subset of `sub_size`
/// variables, clamp everything else, solve the sub-problem and embed the
/// answer according to `rule`. Annealing and tabu subsolvers are warm-started
/// from the current spins of the subset.
StepResult qls_step(const IsingProblem& problem, const SpinConfiguration& current,
                    std::size_t sub_size, const SubsolverSpec& subsolver, AcceptRule rule,
                    Rng& rng);

/// L qls_steps from `initial` on the stream derive_seed(master_seed,
/// generation_index, branch_index).
BranchResult run_branch(const IsingProblem& problem, const SpinConfiguration& initial,
                        const PqlsParams& params, std::size_t generation_index,
                        std::size_t branch_index);

/// Generations of B branches fanned out from the incumbent, reduced to the
/// lowest-energy branch (ties to the lowest branch index). A generation never
/// replaces the incumbent with something worse.
PqlsResult run_pqls(const IsingProblem& problem, const SpinConfiguration& initial,
                    const PqlsParams& params);

/// Sequential QLS: run_branch with generation 1, branch 1 and
/// L = total_iterations.
BranchResult run_qls(const IsingProblem& problem, const SpinConfiguration& initial,
                     std::size_t total_iterations, std::size_t sub_size,
                     const SubsolverSpec& subsolver, std::uint64_t seed,
                     AcceptRule rule = AcceptRule::improve_or_equal);

/// Starting configuration used when none is supplied: uniform random spins
/// from stream (0, 0) of master_seed.
SpinConfiguration default_initial(std::size_t n, std::uint64_t master_seed);

/// Number of worker threads for a requested concurrency (0 = hardware).
std::size_t resolve_concurrency(std::size_t requested);

}  // namespace pqls
