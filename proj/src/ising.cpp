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

#include "pqls/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pqls/errors.hpp"
#include "pqls/rng.hpp"

namespace pqls {

namespace {

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string("non-finite ") + what + " coefficient");
  }
}

void check_spins_match(const IsingProblem& problem, std::size_t size) {
  if (size != problem.size()) {
    throw DimensionError("configuration has " + std::to_string(size) +
                         " spins, problem has " + std::to_string(problem.size()));
  }
}

}  // namespace

IsingProblem::IsingProblem(std::size_t n, std::vector<double> fields,
                           std::vector<Coupling> couplings)
    : n_(n), fields_(std::move(fields)), couplings_(std::move(couplings)) {
  if (n_ == 0) throw ValidationError("problem must have at least one variable");
  if (fields_.size() != n_) {
    throw ValidationError("expected " + std::to_string(n_) + " fields, got " +
                          std::to_string(fields_.size()));
  }
  for (double h : fields_) check_finite(h, "field");

  const auto lex = [](const Coupling& a, const Coupling& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  };
  if (!std::is_sorted(couplings_.begin(), couplings_.end(), lex)) {
    std::sort(couplings_.begin(), couplings_.end(), lex);
  }
  for (std::size_t k = 0; k < couplings_.size(); ++k) {
    const Coupling& c = couplings_[k];
    if (c.i >= c.j) throw ValidationError("coupling indices must satisfy i < j");
    if (c.j >= n_) throw ValidationError("coupling index out of range");
    check_finite(c.value, "coupling");
    if (k > 0 && couplings_[k - 1].i == c.i && couplings_[k - 1].j == c.j) {
      throw ValidationError("duplicate coupling (" + std::to_string(c.i + 1) + ", " +
                            std::to_string(c.j + 1) + ")");
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Coupling& c : couplings_) {
    ++offsets_[c.i + 1];
    ++offsets_[c.j + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Coupling& c : couplings_) {
    adjacency_[cursor[c.i]++] = {c.j, c.value};
    adjacency_[cursor[c.j]++] = {c.i, c.value};
  }
}

double IsingProblem::coupling(std::size_t i, std::size_t j) const noexcept {
  if (i == j || i >= n_ || j >= n_) return 0.0;
  if (i > j) std::swap(i, j);
  auto row = neighbors(i);
  auto it = std::find_if(row.begin(), row.end(), [j](const Neighbor& nb) { return nb.index == j; });
  return it == row.end() ? 0.0 : it->value;
}

SpinConfiguration::SpinConfiguration(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (std::int8_t s : spins_) {
    if (s != 1 && s != -1) throw ValidationError("spin values must be -1 or +1");
  }
}

SpinConfiguration::SpinConfiguration(std::initializer_list<int> spins) {
  spins_.reserve(spins.size());
  for (int s : spins) {
    if (s != 1 && s != -1) throw ValidationError("spin values must be -1 or +1");
    spins_.push_back(static_cast<std::int8_t>(s));
  }
}

void SpinConfiguration::set(std::size_t i, int spin) {
  if (spin != 1 && spin != -1) throw ValidationError("spin values must be -1 or +1");
  spins_.at(i) = static_cast<std::int8_t>(spin);
}

SpinConfiguration SpinConfiguration::negated() const {
  SpinConfiguration out = *this;
  for (auto& s : out.spins_) s = static_cast<std::int8_t>(-s);
  return out;
}

double energy(const IsingProblem& problem, std::span<const std::int8_t> spins) {
  check_spins_match(problem, spins.size());
  double total = 0.0;
  for (const Coupling& c : problem.couplings()) {
    total += c.value * spins[c.i] * spins[c.j];
  }
  const auto fields = problem.fields();
  for (std::size_t i = 0; i < fields.size(); ++i) total += fields[i] * spins[i];
  return total;
}

double energy(const IsingProblem& problem, const SpinConfiguration& config) {
  return energy(problem, config.spins());
}

double local_field(const IsingProblem& problem, std::span<const std::int8_t> spins,
                   std::size_t i) {
  double field = problem.fields()[i];
  for (const auto& nb : problem.neighbors(i)) field += nb.value * spins[nb.index];
  return field;
}

double delta_energy_flip(const IsingProblem& problem, const SpinConfiguration& config,
                         std::size_t i) {
  check_spins_match(problem, config.size());
  if (i >= problem.size()) {
    throw ValidationError("flip index " + std::to_string(i) + " out of range");
  }
  return -2.0 * config[i] * local_field(problem, config.spins(), i);
}

void validate_subset(std::span<const std::size_t> subset, std::size_t n) {
  if (subset.empty()) throw ValidationError("subset must be nonempty");
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= n) throw ValidationError("subset index out of range");
    if (k > 0 && subset[k] <= subset[k - 1]) {
      throw ValidationError("subset must be strictly ascending");
    }
  }
}

SubProblem extract_subproblem(const IsingProblem& problem, const SpinConfiguration& config,
                              std::span<const std::size_t> subset) {
  check_spins_match(problem, config.size());
  validate_subset(subset, problem.size());

  constexpr std::size_t kClamped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(problem.size(), kClamped);
  for (std::size_t a = 0; a < subset.size(); ++a) position[subset[a]] = a;

  const auto fields = problem.fields();
  std::vector<double> inner_fields(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) inner_fields[a] = fields[subset[a]];

  // The position map is monotone, so inner couplings come out already sorted.
  std::vector<Coupling> inner_couplings;
  double offset = 0.0;
  for (const Coupling& c : problem.couplings()) {
    const std::size_t a = position[c.i];
    const std::size_t b = position[c.j];
    if (a != kClamped && b != kClamped) {
      inner_couplings.push_back({a, b, c.value});
    } else if (a != kClamped) {
      inner_fields[a] += c.value * config[c.j];
    } else if (b != kClamped) {
      inner_fields[b] += c.value * config[c.i];
    } else {
      offset += c.value * config[c.i] * config[c.j];
    }
  }
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (position[i] == kClamped) offset += fields[i] * config[i];
  }

  return SubProblem{
      IsingProblem(subset.size(), std::move(inner_fields), std::move(inner_couplings)),
      std::vector<std::size_t>(subset.begin(), subset.end()), offset};
}

SpinConfiguration embed_solution(const SpinConfiguration& config,
                                 std::span<const std::size_t> subset,
                                 const SpinConfiguration& sub) {
  if (sub.size() != subset.size()) {
    throw DimensionError("sub-solution has " + std::to_string(sub.size()) +
                         " spins for a subset of " + std::to_string(subset.size()));
  }
  validate_subset(subset, config.size());
  SpinConfiguration out = config;
  for (std::size_t a = 0; a < subset.size(); ++a) out.set(subset[a], sub[a]);
  return out;
}

SpinConfiguration restrict_to(const SpinConfiguration& config,
                              std::span<const std::size_t> subset) {
  std::vector<std::int8_t> spins;
  spins.reserve(subset.size());
  for (std::size_t i : subset) {
    if (i >= config.size()) throw ValidationError("subset index out of range");
    spins.push_back(static_cast<std::int8_t>(config[i]));
  }
  return SpinConfiguration(std::move(spins));
}

SpinConfiguration spins_from_bits(std::uint64_t z, std::size_t n) {
  std::vector<std::int8_t> spins(n);
  for (std::size_t k = 0; k < n; ++k) spins[k] = ((z >> k) & 1U) ? -1 : 1;
  return SpinConfiguration(std::move(spins));
}

IsingProblem generate_instance(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("instance size must be positive");
  Rng rng(seed);
  std::vector<double> fields(n);
  for (auto& h : fields) h = uniform_real(rng, -1.0, 1.0);
  std::vector<Coupling> couplings;
  couplings.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      couplings.push_back({i, j, uniform_real(rng, -1.0, 1.0)});
    }
  }
  return IsingProblem(n, std::move(fields), std::move(couplings));
}

SpinConfiguration random_configuration(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::int8_t> spins(n);
  for (auto& s : spins) s = (rng() >> 63) ? -1 : 1;
  return SpinConfiguration(std::move(spins));
}

}  // namespace pqls
