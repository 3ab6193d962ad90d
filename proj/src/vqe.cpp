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

#include "pqls/vqe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pqls/errors.hpp"
#include "pqls/rng.hpp"

namespace pqls {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> entangler_ring(std::size_t qubits) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (qubits < 2) return pairs;
  for (std::size_t q = 0; q + 1 < qubits; ++q) pairs.emplace_back(q, q + 1);
  if (qubits > 2) pairs.emplace_back(qubits - 1, 0);
  return pairs;
}

// The controlled-Z ring is diagonal: basis state z picks up (-1) per ring
// pair with both bits set.
std::vector<double> entangler_signs(std::size_t qubits) {
  const auto ring = entangler_ring(qubits);
  std::vector<double> signs(std::size_t{1} << qubits, 1.0);
  for (std::size_t z = 0; z < signs.size(); ++z) {
    int parity = 0;
    for (const auto& [a, b] : ring) parity ^= static_cast<int>((z >> a) & (z >> b) & 1U);
    if (parity) signs[z] = -1.0;
  }
  return signs;
}

void apply_ry(std::vector<double>& amps, std::size_t qubit, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t z = 0; z < amps.size(); ++z) {
    if (z & bit) continue;
    const double a0 = amps[z];
    const double a1 = amps[z | bit];
    amps[z] = c * a0 - s * a1;
    amps[z | bit] = s * a0 + c * a1;
  }
}

void prepare(std::span<const double> theta, std::size_t qubits, std::size_t layers,
             std::span<const double> signs, std::vector<double>& amps) {
  std::fill(amps.begin(), amps.end(), 0.0);
  amps[0] = 1.0;
  for (std::size_t l = 0; l <= layers; ++l) {
    for (std::size_t q = 0; q < qubits; ++q) apply_ry(amps, q, theta[l * qubits + q]);
    if (l < layers) {
      for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= signs[z];
    }
  }
}

void check_qubit_budget(std::size_t qubits) {
  if (qubits > kMaxVqeQubits) {
    throw BudgetError("statevector simulation is limited to " + std::to_string(kMaxVqeQubits) +
                      " qubits, got " + std::to_string(qubits));
  }
}

}  // namespace

void validate(const VqeSpec& spec) {
  if (spec.layers == 0) throw ValidationError("VQE needs at least one layer");
  if (spec.iterations == 0) throw ValidationError("VQE needs at least one iteration");
  const SpsaGains& g = spec.gains;
  if (!(g.a > 0.0) || !(g.c > 0.0) || !(g.stability > 0.0)) {
    throw ValidationError("SPSA gains a, c and A must be positive");
  }
  if (!(g.alpha > 0.0 && g.alpha <= 1.0) || !(g.gamma > 0.0 && g.gamma <= 1.0)) {
    throw ValidationError("SPSA exponents alpha and gamma must lie in (0, 1]");
  }
}

std::size_t Statevector::qubits() const noexcept {
  return static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
}

double Statevector::norm_squared() const noexcept {
  double total = 0.0;
  for (double a : amplitudes) total += a * a;
  return total;
}

std::vector<double> hamiltonian_diagonal(const IsingProblem& inner) {
  const std::size_t m = inner.size();
  check_qubit_budget(m);
  std::vector<double> diag(std::size_t{1} << m);
  std::vector<std::int8_t> spins(m);
  for (std::size_t z = 0; z < diag.size(); ++z) {
    for (std::size_t k = 0; k < m; ++k) spins[k] = ((z >> k) & 1U) ? -1 : 1;
    diag[z] = energy(inner, spins);
  }
  return diag;
}

std::size_t ansatz_parameter_count(std::size_t qubits, std::size_t layers) {
  return (layers + 1) * qubits;
}

Statevector ansatz_state(std::span<const double> theta, std::size_t qubits, std::size_t layers) {
  check_qubit_budget(qubits);
  if (theta.size() != ansatz_parameter_count(qubits, layers)) {
    throw DimensionError("ansatz expects " + std::to_string(ansatz_parameter_count(qubits, layers)) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  Statevector state;
  state.amplitudes.resize(std::size_t{1} << qubits);
  const auto signs = entangler_signs(qubits);
  prepare(theta, qubits, layers, signs, state.amplitudes);
  return state;
}

double expectation(const Statevector& state, std::span<const double> diag) {
  if (state.amplitudes.size() != diag.size()) {
    throw DimensionError("statevector and diagonal differ in dimension");
  }
  double total = 0.0;
  for (std::size_t z = 0; z < diag.size(); ++z) {
    total += state.amplitudes[z] * state.amplitudes[z] * diag[z];
  }
  return total;
}

VqeReport run_vqe(const IsingProblem& inner, const VqeSpec& spec, std::uint64_t seed) {
  validate(spec);
  const std::size_t m = inner.size();
  const auto diag = hamiltonian_diagonal(inner);
  const auto signs = entangler_signs(m);
  const std::size_t count = ansatz_parameter_count(m, spec.layers);
  Rng rng(seed);

  VqeReport report;
  std::uint64_t preparations = 0;
  std::vector<double> amps(diag.size());
  auto objective = [&](std::span<const double> theta) {
    prepare(theta, m, spec.layers, signs, amps);
    ++preparations;
    double total = 0.0;
    for (std::size_t z = 0; z < diag.size(); ++z) total += amps[z] * amps[z] * diag[z];
    return total;
  };

  std::vector<double> theta(count);
  for (auto& t : theta) t = uniform_real(rng, -0.1, 0.1);
  std::vector<double> best_theta = theta;
  double best = objective(theta);

  const SpsaGains& g = spec.gains;
  std::vector<double> perturbation(count), plus(count), minus(count);
  report.best_expectation_trace.reserve(spec.iterations);
  for (std::size_t k = 0; k < spec.iterations; ++k) {
    const double step = static_cast<double>(k + 1);
    const double ak = g.a / std::pow(step + g.stability, g.alpha);
    const double ck = g.c / std::pow(step, g.gamma);
    for (std::size_t i = 0; i < count; ++i) {
      perturbation[i] = (rng() >> 63) ? 1.0 : -1.0;
      plus[i] = theta[i] + ck * perturbation[i];
      minus[i] = theta[i] - ck * perturbation[i];
    }
    const double y_plus = objective(plus);
    const double y_minus = objective(minus);
    if (y_plus < best) {
      best = y_plus;
      best_theta = plus;
    }
    if (y_minus < best) {
      best = y_minus;
      best_theta = minus;
    }
    const double scale = (y_plus - y_minus) / (2.0 * ck);
    // Rademacher entries are +-1, so dividing by them is multiplying.
    for (std::size_t i = 0; i < count; ++i) theta[i] -= ak * scale * perturbation[i];
    report.best_expectation_trace.push_back(best);
  }

  prepare(best_theta, m, spec.layers, signs, amps);
  ++preparations;

  std::size_t chosen = 0;
  if (spec.shots == 0) {
    double top = -1.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
      const double p = amps[z] * amps[z];
      if (p > top) {
        top = p;
        chosen = z;
      }
    }
  } else {
    std::vector<double> cumulative(amps.size());
    double running = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
      running += amps[z] * amps[z];
      cumulative[z] = running;
    }
    bool have = false;
    for (std::size_t shot = 0; shot < spec.shots; ++shot) {
      const double u = uniform01(rng) * running;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      auto z = static_cast<std::size_t>(it - cumulative.begin());
      if (z >= amps.size()) z = amps.size() - 1;
      if (!have || diag[z] < diag[chosen] || (diag[z] == diag[chosen] && z < chosen)) {
        chosen = z;
        have = true;
      }
    }
  }

  report.outcome.config = spins_from_bits(chosen, m);
  report.outcome.energy = diag[chosen];
  report.outcome.evaluations = preparations;
  report.best_parameters = std::move(best_theta);
  return report;
}

SolveOutcome solve_vqe(const IsingProblem& inner, const VqeSpec& spec, std::uint64_t seed) {
  return run_vqe(inner, spec, seed).outcome;
}

}  // namespace pqls
