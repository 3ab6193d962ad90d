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

#include <algorithm>
#include <limits>
#include <vector>

#include "pqls/errors.hpp"
#include "pqls/rng.hpp"
#include "pqls/subsolver.hpp"

namespace pqls {

void validate(const TabuSpec& spec) {
  if (spec.budget == 0) throw ValidationError("tabu budget must be at least 1");
  if (spec.restarts == 0) throw ValidationError("tabu needs at least one restart");
}

TabuSpec baseline_tabu_spec(std::size_t n) {
  return TabuSpec{std::max<std::size_t>(4, n / 4), 200 * n, 20};
}

namespace {

struct TabuRun {
  std::vector<std::int8_t> best;
  double best_energy;
  std::uint64_t evaluations;
};

TabuRun tabu_from(const IsingProblem& problem, const TabuSpec& spec,
                  const std::vector<std::int8_t>& start) {
  const std::size_t n = problem.size();
  std::vector<std::int8_t> spins = start;
  std::vector<double> fields(n);
  for (std::size_t i = 0; i < n; ++i) fields[i] = local_field(problem, spins, i);
  double e = energy(problem, spins);

  TabuRun run{spins, e, 1};
  // Variable i is tabu while iteration < tabu_until[i].
  std::vector<std::size_t> tabu_until(n, 0);

  for (std::size_t iter = 0; iter < spec.budget; ++iter) {
    std::size_t chosen = n;
    double chosen_delta = std::numeric_limits<double>::infinity();
    std::size_t fallback = n;
    double fallback_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = -2.0 * spins[i] * fields[i];
      const bool tabu = iter < tabu_until[i];
      const bool aspirated = e + delta < run.best_energy;
      if ((!tabu || aspirated) && delta < chosen_delta) {
        chosen = i;
        chosen_delta = delta;
      }
      if (delta < fallback_delta) {
        fallback = i;
        fallback_delta = delta;
      }
    }
    run.evaluations += n;
    // Every move is tabu and none aspirates: take the steepest one anyway.
    if (chosen == n) {
      chosen = fallback;
      chosen_delta = fallback_delta;
    }

    spins[chosen] = static_cast<std::int8_t>(-spins[chosen]);
    for (const auto& nb : problem.neighbors(chosen)) {
      fields[nb.index] += 2.0 * nb.value * spins[chosen];
    }
    e += chosen_delta;
    tabu_until[chosen] = iter + 1 + spec.tenure;
    if (e < run.best_energy) {
      run.best_energy = e;
      run.best = spins;
    }
  }
  // Report the exact energy; drift in the incremental sum must not let the
  // result score above the starting point.
  const double start_energy = energy(problem, start);
  run.best_energy = energy(problem, run.best);
  run.evaluations += 2;
  if (run.best_energy > start_energy) {
    run.best = start;
    run.best_energy = start_energy;
  }
  return run;
}

}  // namespace

SolveOutcome solve_tabu(const IsingProblem& problem, const TabuSpec& spec, std::uint64_t seed,
                        const std::optional<SpinConfiguration>& initial) {
  validate(spec);
  const std::size_t n = problem.size();
  if (initial && initial->size() != n) {
    throw DimensionError("initial configuration size mismatch");
  }
  Rng rng(seed);

  SolveOutcome out;
  std::vector<std::int8_t> best;
  double best_e = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < spec.restarts; ++r) {
    const SpinConfiguration start =
        (r == 0 && initial) ? *initial : random_configuration(n, rng());
    TabuRun run = tabu_from(problem, spec, {start.spins().begin(), start.spins().end()});
    out.evaluations += run.evaluations;
    if (run.best_energy < best_e) {
      best_e = run.best_energy;
      best = std::move(run.best);
    }
  }
  out.config = SpinConfiguration(std::move(best));
  out.energy = best_e;
  return out;
}

}  // namespace pqls
