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

#include "pqls/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "pqls/errors.hpp"

namespace pqls {

const char* to_string(AcceptRule rule) {
  switch (rule) {
    case AcceptRule::improve_or_equal:
      return "improve_or_equal";
    case AcceptRule::always:
      return "always";
  }
  return "unknown";
}

AcceptRule accept_rule_from_string(const std::string& name) {
  if (name == "improve_or_equal") return AcceptRule::improve_or_equal;
  if (name == "always") return AcceptRule::always;
  throw ValidationError("unknown accept rule '" + name + "'");
}

void validate(const PqlsParams& params, std::size_t n) {
  if (params.sub_size == 0 || params.branches == 0 || params.unit_length == 0 ||
      params.generations == 0) {
    throw ValidationError("sub_size, branches, unit_length and generations must be >= 1");
  }
  if (params.sub_size > n) {
    throw ValidationError("sub_size " + std::to_string(params.sub_size) +
                          " exceeds problem size " + std::to_string(n));
  }
  validate(params.subsolver);
}

std::size_t resolve_concurrency(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

SpinConfiguration default_initial(std::size_t n, std::uint64_t master_seed) {
  return random_configuration(n, derive_seed(master_seed, 0, 0));
}

StepResult qls_step(const IsingProblem& problem, const SpinConfiguration& current,
                    std::size_t sub_size, const SubsolverSpec& subsolver, AcceptRule rule,
                    Rng& rng) {
  const std::size_t n = problem.size();
  if (sub_size == 0 || sub_size > n) throw ValidationError("sub_size must lie in [1, n]");

  // Partial Fisher-Yates: the first sub_size slots are a uniform sample.
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t k = 0; k < sub_size; ++k) {
    std::swap(pool[k], pool[k + uniform_index(rng, n - k)]);
  }
  std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(sub_size));
  std::sort(subset.begin(), subset.end());
  const std::uint64_t solver_seed = rng();

  const SubProblem sub = extract_subproblem(problem, current, subset);
  const SolveOutcome solved =
      solve_subproblem(sub.inner, subsolver, solver_seed, restrict_to(current, subset));

  StepResult step;
  step.subset = std::move(subset);
  SpinConfiguration candidate = embed_solution(current, step.subset, solved.config);
  const double candidate_energy = energy(problem, candidate);
  const double current_energy = energy(problem, current);
  // Compared on full energies rather than inner + offset so that an accepted
  // step can never raise the recomputed energy through rounding.
  if (rule == AcceptRule::always || candidate_energy <= current_energy) {
    step.config = std::move(candidate);
    step.energy = candidate_energy;
    step.accepted = true;
  } else {
    step.config = current;
    step.energy = current_energy;
  }
  return step;
}

BranchResult run_branch(const IsingProblem& problem, const SpinConfiguration& initial,
                        const PqlsParams& params, std::size_t generation_index,
                        std::size_t branch_index) {
  validate(params, problem.size());
  if (initial.size() != problem.size()) {
    throw DimensionError("initial configuration size mismatch");
  }
  Rng rng(derive_seed(params.master_seed, generation_index, branch_index));

  BranchResult result;
  result.generation_index = generation_index;
  result.branch_index = branch_index;
  result.best_config = initial;
  result.best_energy = energy(problem, initial);
  result.trajectory.reserve(params.unit_length);

  SpinConfiguration current = initial;
  for (std::size_t it = 0; it < params.unit_length; ++it) {
    StepResult step =
        qls_step(problem, current, params.sub_size, params.subsolver, params.accept_rule, rng);
    ++result.subsolver_calls;
    if (step.energy < result.best_energy) {
      result.best_energy = step.energy;
      result.best_config = step.config;
    }
    current = std::move(step.config);
    result.trajectory.push_back(result.best_energy);
  }
  return result;
}

namespace {

// Runs task(0..count-1) on `workers` threads. Results land in caller-owned
// slots, so the outcome does not depend on scheduling. The exception of the
// lowest failing index is rethrown.
template <class Task>
void run_indexed(std::size_t count, std::size_t workers, Task&& task) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t k) {
    try {
      task(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) guarded(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) guarded(k);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

PqlsResult run_pqls(const IsingProblem& problem, const SpinConfiguration& initial,
                    const PqlsParams& params) {
  validate(params, problem.size());
  if (initial.size() != problem.size()) {
    throw DimensionError("initial configuration size mismatch");
  }
  const std::size_t workers = resolve_concurrency(params.concurrency);

  PqlsResult result;
  result.best_config = initial;
  result.best_energy = energy(problem, initial);
  result.per_generation.reserve(params.generations);

  std::vector<BranchResult> branches(params.branches);
  for (std::size_t g = 1; g <= params.generations; ++g) {
    const SpinConfiguration incumbent = result.best_config;
    run_indexed(params.branches, workers, [&](std::size_t k) {
      branches[k] = run_branch(problem, incumbent, params, g, k + 1);
    });

    std::size_t winner = 0;
    for (std::size_t k = 1; k < branches.size(); ++k) {
      if (branches[k].best_energy < branches[winner].best_energy) winner = k;
    }
    for (const auto& b : branches) result.subsolver_calls += b.subsolver_calls;
    if (branches[winner].best_energy <= result.best_energy) {
      result.best_energy = branches[winner].best_energy;
      result.best_config = branches[winner].best_config;
    }
    result.per_generation.push_back(result.best_energy);
    if (params.keep_branches) {
      result.per_branch.insert(result.per_branch.end(), branches.begin(), branches.end());
    }
  }
  return result;
}

BranchResult run_qls(const IsingProblem& problem, const SpinConfiguration& initial,
                     std::size_t total_iterations, std::size_t sub_size,
                     const SubsolverSpec& subsolver, std::uint64_t seed, AcceptRule rule) {
  PqlsParams params;
  params.sub_size = sub_size;
  params.branches = 1;
  params.unit_length = total_iterations;
  params.generations = 1;
  params.subsolver = subsolver;
  params.master_seed = seed;
  params.accept_rule = rule;
  return run_branch(problem, initial, params, 1, 1);
}

}  // namespace pqls
