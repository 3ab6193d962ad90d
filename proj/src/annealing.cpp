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

#include <cmath>
#include <vector>

#include "pqls/errors.hpp"
#include "pqls/rng.hpp"
#include "pqls/subsolver.hpp"

namespace pqls {

void validate(const AnnealingSpec& spec) {
  if (spec.sweeps == 0) throw ValidationError("annealing needs at least one sweep");
  if (!(spec.t_final > 0.0) || !std::isfinite(spec.t_initial)) {
    throw ValidationError("annealing temperatures must be finite and positive");
  }
  if (spec.t_initial < spec.t_final) {
    throw ValidationError("annealing requires t_initial >= t_final");
  }
}

SolveOutcome solve_annealing(const IsingProblem& inner, const AnnealingSpec& spec,
                             std::uint64_t seed, const std::optional<SpinConfiguration>& initial) {
  validate(spec);
  const std::size_t n = inner.size();
  Rng rng(seed);

  SpinConfiguration current = initial ? *initial : random_configuration(n, rng());
  if (current.size() != n) throw DimensionError("initial configuration size mismatch");

  std::vector<std::int8_t> spins(current.spins().begin(), current.spins().end());
  std::vector<double> fields(n);
  for (std::size_t i = 0; i < n; ++i) fields[i] = local_field(inner, spins, i);
  double e = energy(inner, spins);
  const double start_energy = e;

  SolveOutcome out;
  out.evaluations = 1;
  std::vector<std::int8_t> best = spins;
  double best_e = e;

  // Geometric schedule T_k = T_i (T_f / T_i)^(k / (sweeps - 1)).
  const double ratio = spec.sweeps > 1
                           ? std::pow(spec.t_final / spec.t_initial,
                                      1.0 / static_cast<double>(spec.sweeps - 1))
                           : 1.0;
  double temperature = spec.t_initial;
  for (std::size_t sweep = 0; sweep < spec.sweeps; ++sweep) {
    const double beta = 1.0 / temperature;
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = -2.0 * spins[i] * fields[i];
      ++out.evaluations;
      if (delta > 0.0 && uniform01(rng) >= std::exp(-beta * delta)) continue;
      spins[i] = static_cast<std::int8_t>(-spins[i]);
      for (const auto& nb : inner.neighbors(i)) fields[nb.index] += 2.0 * nb.value * spins[i];
      e += delta;
      if (e < best_e) {
        best_e = e;
        best = spins;
      }
    }
    temperature *= ratio;
  }

  out.config = SpinConfiguration(std::move(best));
  out.energy = energy(inner, out.config);
  ++out.evaluations;
  if (out.energy > start_energy) {
    out.config = current;
    out.energy = start_energy;
  }
  return out;
}

}  // namespace pqls
