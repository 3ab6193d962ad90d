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

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "pqls/errors.hpp"
#include "pqls/subsolver.hpp"

namespace pqls {

namespace {

// Local fields and energy are rebuilt from scratch this often to bound the
// drift of the incremental updates.
constexpr std::uint64_t kResyncInterval = 256;

void resync(const IsingProblem& inner, const std::vector<std::int8_t>& spins,
            std::vector<double>& fields, double& e) {
  for (std::size_t k = 0; k < spins.size(); ++k) fields[k] = local_field(inner, spins, k);
  e = energy(inner, spins);
}

}  // namespace

SolveOutcome solve_exact(const IsingProblem& inner) {
  const std::size_t n = inner.size();
  if (n > kMaxExactVariables) {
    throw BudgetError("exact solver is limited to " + std::to_string(kMaxExactVariables) +
                      " variables, got " + std::to_string(n));
  }

  // Gray-code walk with O(degree) updates finds every state whose energy is
  // within `margin` of the minimum; those few are then re-scored with
  // energy() so the result matches a direct enumeration bit for bit.
  double scale = 1.0;
  for (double h : inner.fields()) scale += std::abs(h);
  for (const Coupling& c : inner.couplings()) scale += std::abs(c.value);
  const double margin = 1e-9 * scale;

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::int8_t> spins(n, 1);
  std::vector<double> fields(n);
  double e = 0.0;
  resync(inner, spins, fields, e);

  double best_walk = e;
  std::vector<std::pair<std::uint64_t, double>> candidates{{0, e}};
  std::uint64_t z = 0;
  for (std::uint64_t t = 1; t < states; ++t) {
    const auto k = static_cast<std::size_t>(std::countr_zero(t));
    const double delta = -2.0 * spins[k] * fields[k];
    spins[k] = static_cast<std::int8_t>(-spins[k]);
    z ^= std::uint64_t{1} << k;
    for (const auto& nb : inner.neighbors(k)) fields[nb.index] += 2.0 * nb.value * spins[k];
    e += delta;
    if (t % kResyncInterval == 0) resync(inner, spins, fields, e);

    if (e < best_walk - margin) {
      candidates.clear();
    }
    if (e <= best_walk + margin) candidates.emplace_back(z, e);
    if (e < best_walk) best_walk = e;
  }

  SolveOutcome out;
  out.evaluations = states;
  bool found = false;
  std::uint64_t best_z = 0;
  for (const auto& [cz, walk_e] : candidates) {
    if (walk_e > best_walk + margin) continue;
    const double exact = energy(inner, spins_from_bits(cz, n));
    ++out.evaluations;
    if (!found || exact < out.energy || (exact == out.energy && cz < best_z)) {
      found = true;
      best_z = cz;
      out.energy = exact;
    }
  }
  out.config = spins_from_bits(best_z, n);
  return out;
}

}  // namespace pqls
