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
#include <span>
#include <vector>

#include "pqls/ising.hpp"
#include "pqls/outcome.hpp"

namespace pqls {

// Exact statevector VQE for diagonal (Ising) Hamiltonians.
//
// Ansatz: layers + 1 rotation layers of RY on every qubit, with a ring of
// controlled-Z gates between consecutive rotation layers. Starting from
// |0...0>, every gate keeps the amplitudes real, so states are stored as
// real vectors. Qubit k is bit k of the basis index and maps to variable k
// with |0> -> +1 and |1> -> -1, the same convention as solve_exact.

inline constexpr std::size_t kMaxVqeQubits = 16;

struct SpsaGains {
  double a = 0.2;
  double c = 0.1;
  double stability = 10.0;  // A
  double alpha = 0.602;
  double gamma = 0.101;

  friend bool operator==(const SpsaGains&, const SpsaGains&) = default;
};

struct VqeSpec {
  std::size_t layers = 2;
  std::size_t iterations = 100;
  /// 0 reads out the most probable basis state instead of sampling.
  std::size_t shots = 1024;
  SpsaGains gains;

  friend bool operator==(const VqeSpec&, const VqeSpec&) = default;
};

void validate(const VqeSpec& spec);

/// Normalized real amplitudes over 2^m basis states.
struct Statevector {
  std::vector<double> amplitudes;

  std::size_t qubits() const noexcept;
  double norm_squared() const noexcept;
};

/// Entry z is energy(inner, spins_from_bits(z, m)). Throws BudgetError for m > 16.
std::vector<double> hamiltonian_diagonal(const IsingProblem& inner);

std::size_t ansatz_parameter_count(std::size_t qubits, std::size_t layers);

/// theta is layer-major: theta[l * qubits + q] is the RY angle of qubit q in
/// rotation layer l. Throws DimensionError on a parameter-count mismatch.
Statevector ansatz_state(std::span<const double> theta, std::size_t qubits, std::size_t layers);

/// <psi|H|psi> = sum_z psi_z^2 diag[z].
double expectation(const Statevector& state, std::span<const double> diag);

struct VqeReport {
  SolveOutcome outcome;
  /// Best objective value seen after each SPSA iteration.
  std::vector<double> best_expectation_trace;
  std::vector<double> best_parameters;
};

/// SPSA-optimized VQE followed by shot readout: the lowest-energy sampled
/// bitstring (ties to the smaller basis index) is returned.
SolveOutcome solve_vqe(const IsingProblem& inner, const VqeSpec& spec, std::uint64_t seed);

/// solve_vqe with the optimizer trace kept.
VqeReport run_vqe(const IsingProblem& inner, const VqeSpec& spec, std::uint64_t seed);

}  // namespace pqls
