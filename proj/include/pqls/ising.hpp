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
#include <initializer_list>
#include <span>
#include <vector>

namespace pqls {

// Variable indices in the C++ API are 0-based. Instance files, the CLI and
// CSV output use 1-based indices.

/// One coupling term J_ij s_i s_j, stored upper-triangular (i < j).
struct Coupling {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Ising Hamiltonian E(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i.
///
/// Immutable after construction. Couplings are kept sorted in (i, j)
/// lexicographic order together with a per-variable adjacency view used for
/// O(degree) flip evaluation.
class IsingProblem {
 public:
  struct Neighbor {
    std::size_t index;
    double value;
  };

  /// Throws ValidationError if n == 0, fields.size() != n, any coefficient is
  /// non-finite, a coupling has i >= j or j >= n, or a pair appears twice.
  IsingProblem(std::size_t n, std::vector<double> fields, std::vector<Coupling> couplings);

  std::size_t size() const noexcept { return n_; }
  std::span<const double> fields() const noexcept { return fields_; }
  std::span<const Coupling> couplings() const noexcept { return couplings_; }
  std::span<const Neighbor> neighbors(std::size_t i) const noexcept {
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// J_ij for either index order; 0 when the pair is absent or i == j.
  double coupling(std::size_t i, std::size_t j) const noexcept;

  friend bool operator==(const IsingProblem& a, const IsingProblem& b) {
    return a.n_ == b.n_ && a.fields_ == b.fields_ && a.couplings_ == b.couplings_;
  }

 private:
  std::size_t n_;
  std::vector<double> fields_;
  std::vector<Coupling> couplings_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Assignment of +1/-1 to every spin.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  /// All spins +1.
  explicit SpinConfiguration(std::size_t n) : spins_(n, 1) {}
  /// Throws ValidationError if any entry is not exactly -1 or +1.
  explicit SpinConfiguration(std::vector<std::int8_t> spins);
  SpinConfiguration(std::initializer_list<int> spins);

  std::size_t size() const noexcept { return spins_.size(); }
  int operator[](std::size_t i) const noexcept { return spins_[i]; }
  std::span<const std::int8_t> spins() const noexcept { return spins_; }

  void flip(std::size_t i) noexcept { spins_[i] = static_cast<std::int8_t>(-spins_[i]); }
  void set(std::size_t i, int spin);

  SpinConfiguration negated() const;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

/// A clamped restriction of a parent problem to an ascending subset.
///
/// For every assignment t of the subset:
///   energy(inner, t) + offset == energy(parent, embed_solution(s, subset, t))
struct SubProblem {
  IsingProblem inner;
  std::vector<std::size_t> subset;
  double offset = 0.0;
};

double energy(const IsingProblem& problem, const SpinConfiguration& config);

/// Same summation order as energy(); spins must hold +1/-1 and match the size.
double energy(const IsingProblem& problem, std::span<const std::int8_t> spins);

/// E(s with spin i negated) - E(s), in O(degree(i)).
double delta_energy_flip(const IsingProblem& problem, const SpinConfiguration& config,
                         std::size_t i);

/// Local field h_i + sum_j J_ij s_j seen by spin i.
double local_field(const IsingProblem& problem, std::span<const std::int8_t> spins,
                   std::size_t i);

/// Fixes every variable outside `subset` at its value in `config` and folds
/// those variables into the subset's fields and a constant offset.
/// `subset` must be nonempty, strictly ascending and in range.
SubProblem extract_subproblem(const IsingProblem& problem, const SpinConfiguration& config,
                              std::span<const std::size_t> subset);

/// Copy of `config` with the spins at `subset` positions replaced by `sub`.
SpinConfiguration embed_solution(const SpinConfiguration& config,
                                 std::span<const std::size_t> subset,
                                 const SpinConfiguration& sub);

/// Spins of `config` at the `subset` positions, in subset order.
SpinConfiguration restrict_to(const SpinConfiguration& config,
                              std::span<const std::size_t> subset);

/// Bit k of z is the spin of variable k: 0 -> +1, 1 -> -1.
SpinConfiguration spins_from_bits(std::uint64_t z, std::size_t n);

/// Dense random instance: complete graph, every J_ij and h_i uniform on
/// [-1, 1). Draw order: h_1..h_n, then J_ij in (i, j) lexicographic order,
/// all from one mt19937_64 seeded with `seed`.
IsingProblem generate_instance(std::size_t n, std::uint64_t seed);

/// Uniform random spins.
SpinConfiguration random_configuration(std::size_t n, std::uint64_t seed);

/// Throws ValidationError unless subset is nonempty, strictly ascending and
/// every index is < n.
void validate_subset(std::span<const std::size_t> subset, std::size_t n);

}  // namespace pqls
