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
#include <optional>
#include <string>
#include <variant>

#include "pqls/ising.hpp"
#include "pqls/outcome.hpp"
#include "pqls/vqe.hpp"

namespace pqls {

inline constexpr std::size_t kMaxExactVariables = 24;

struct ExactSpec {
  friend bool operator==(const ExactSpec&, const ExactSpec&) = default;
};

struct AnnealingSpec {
  std::size_t sweeps = 100;
  double t_initial = 2.0;
  double t_final = 0.05;

  friend bool operator==(const AnnealingSpec&, const AnnealingSpec&) = default;
};

struct TabuSpec {
  std::size_t tenure = 4;
  /// Iterations per restart.
  std::size_t budget = 100;
  std::size_t restarts = 1;

  friend bool operator==(const TabuSpec&, const TabuSpec&) = default;
};

using SubsolverSpec = std::variant<ExactSpec, AnnealingSpec, TabuSpec, VqeSpec>;

/// "exact", "annealing", "tabu" or "vqe".
std::string subsolver_name(const SubsolverSpec& spec);

void validate(const AnnealingSpec& spec);
void validate(const TabuSpec& spec);
void validate(const SubsolverSpec& spec);

/// Full enumeration in order z = 0 .. 2^n - 1 (see spins_from_bits); the
/// minimum with the smallest z wins. Throws BudgetError for n > 24.
SolveOutcome solve_exact(const IsingProblem& inner);

/// Metropolis single-flip sweeps over a geometric temperature schedule,
/// returning the best configuration seen. Starts from `initial` when given,
/// otherwise from random spins.
SolveOutcome solve_annealing(const IsingProblem& inner, const AnnealingSpec& spec,
                             std::uint64_t seed,
                             const std::optional<SpinConfiguration>& initial = std::nullopt);

/// Steepest single-flip tabu search with aspiration. The first restart starts
/// from `initial` (random if absent), later restarts from fresh random spins.
SolveOutcome solve_tabu(const IsingProblem& problem, const TabuSpec& spec, std::uint64_t seed,
                        const std::optional<SpinConfiguration>& initial = std::nullopt);

/// Baseline configuration: tenure max(4, n/4), 200 n iterations, 20 restarts.
TabuSpec baseline_tabu_spec(std::size_t n);

/// Dispatches on the spec. `warm_start` is used by annealing and tabu and
/// ignored by the others.
SolveOutcome solve_subproblem(const IsingProblem& inner, const SubsolverSpec& spec,
                              std::uint64_t seed,
                              const std::optional<SpinConfiguration>& warm_start = std::nullopt);

}  // namespace pqls
