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
#include <random>

#include "doctest.h"
#include "pqls/errors.hpp"
#include "pqls/subsolver.hpp"
#include "test_support.hpp"

using namespace pqls;
using pqls::testing::brute_force_ground;
using pqls::testing::two_spin_problem;

TEST_CASE("solve_exact on the two-spin antiferromagnet") {
  const auto p = two_spin_problem();
  // Oracle enumeration: z=0 -> 1, z=1 -> -1, z=2 -> -1, z=3 -> 1.
  const auto oracle = brute_force_ground(p);
  REQUIRE(oracle.z == 1);
  REQUIRE(oracle.energy == -1.0);

  const auto out = solve_exact(p);
  CHECK(out.config == SpinConfiguration{-1, 1});
  CHECK(out.energy == -1.0);
  CHECK(out.evaluations >= 4);
}

TEST_CASE("solve_exact single spin") {
  const auto out = solve_exact(IsingProblem(1, {-1.0}, {}));
  CHECK(out.config == SpinConfiguration{1});
  CHECK(out.energy == -1.0);
}

TEST_CASE("solve_exact breaks ties by smallest enumeration index") {
  // Everything degenerate: z = 0 (all +1) must win.
  const auto out = solve_exact(IsingProblem(4, {0, 0, 0, 0}, {}));
  CHECK(out.config == SpinConfiguration{1, 1, 1, 1});

  // Symmetric pair without fields: of s and -s the one with the smaller z wins.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto base = generate_instance(8, rng());
    IsingProblem p(8, std::vector<double>(8, 0.0), {base.couplings().begin(), base.couplings().end()});
    const auto out_sym = solve_exact(p);
    const auto oracle = brute_force_ground(p);
    CHECK(out_sym.config == pqls::testing::to_config(oracle.spins));
    // Bit 7 set would mean the partner (bit 7 clear) has smaller z.
    CHECK(out_sym.config[7] == 1);
  }
}

TEST_CASE("solve_exact matches an independent brute force") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto p = trial % 2 ? generate_instance(n, rng())
                             : pqls::testing::random_sparse_problem(rng, n, 0.4);
    const auto oracle = brute_force_ground(p);
    const auto out = solve_exact(p);
    CHECK(out.energy == oracle.energy);
    CHECK(out.config == pqls::testing::to_config(oracle.spins));
    CHECK(out.energy == energy(p, out.config));
  }
}

TEST_CASE("solve_exact refuses problems over budget") {
  CHECK_THROWS_AS(solve_exact(generate_instance(25, 1)), BudgetError);
}

TEST_CASE("annealing finds the two-spin ground state") {
  const auto p = two_spin_problem();
  const AnnealingSpec spec{100, 2.0, 0.01};
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (solve_annealing(p, spec, seed).energy == -1.0) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("annealing at near-zero temperature never worsens its start") {
  std::mt19937_64 rng(4);
  const AnnealingSpec greedy{20, 1e-9, 1e-9};
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = generate_instance(15, rng());
    const auto start = random_configuration(15, rng());
    const auto out = solve_annealing(p, greedy, rng(), start);
    CHECK(out.energy <= energy(p, start));
    CHECK(out.energy == energy(p, out.config));
  }
}

TEST_CASE("annealing is deterministic for a fixed seed") {
  const auto p = generate_instance(12, 5);
  const AnnealingSpec spec;
  CHECK(solve_annealing(p, spec, 42) == solve_annealing(p, spec, 42));
}

TEST_CASE("annealing validates its schedule") {
  const auto p = two_spin_problem();
  CHECK_THROWS_AS(solve_annealing(p, {0, 2.0, 0.05}, 1), ValidationError);
  CHECK_THROWS_AS(solve_annealing(p, {10, 0.01, 0.05}, 1), ValidationError);
  CHECK_THROWS_AS(solve_annealing(p, {10, 2.0, 0.0}, 1), ValidationError);
  CHECK_THROWS_AS(solve_annealing(p, {10, 2.0, 0.05}, 1, SpinConfiguration{1}), DimensionError);
}

TEST_CASE("tabu takes the improving flip on two spins") {
  // From (+1,+1) (E=1) both flips give -1; the lowest index goes first.
  const auto out = solve_tabu(two_spin_problem(), {3, 10, 1}, 0, SpinConfiguration{1, 1});
  CHECK(out.energy == -1.0);
  CHECK(out.config == SpinConfiguration{-1, 1});
}

TEST_CASE("tabu validation") {
  CHECK_THROWS_AS(solve_tabu(two_spin_problem(), {3, 0, 1}, 0), ValidationError);
  CHECK_THROWS_AS(solve_tabu(two_spin_problem(), {3, 10, 0}, 0), ValidationError);
}

TEST_CASE("tabu matches the exact ground state on small instances") {
  std::mt19937_64 rng(16);
  int matches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + rng() % 13;
    const auto p = generate_instance(n, rng());
    const TabuSpec spec{n / 4, 50 * n, 1};
    if (solve_tabu(p, spec, rng()).energy == solve_exact(p).energy) ++matches;
  }
  CHECK(matches >= 45);
}

TEST_CASE("tenure at least n still makes progress") {
  const auto p = generate_instance(6, 2);
  const auto out = solve_tabu(p, {50, 60, 1}, 7);
  CHECK(out.energy == energy(p, out.config));
}

TEST_CASE("oracle dominance and best-seen monotonicity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto p = generate_instance(n, rng());
    const auto start = random_configuration(n, rng());
    const double ground = solve_exact(p).energy;
    const auto sa = solve_annealing(p, {1 + rng() % 30, 1.5, 0.1}, rng(), start);
    const auto tabu = solve_tabu(p, {rng() % 4, 1 + rng() % 40, 1 + rng() % 3}, rng(), start);
    CHECK(ground <= sa.energy);
    CHECK(ground <= tabu.energy);
    CHECK(sa.energy <= energy(p, start));
    CHECK(tabu.energy <= energy(p, start));
    CHECK(std::abs(sa.energy - energy(p, sa.config)) <= 1e-9);
    CHECK(std::abs(tabu.energy - energy(p, tabu.config)) <= 1e-9);
  }
}

TEST_CASE("tabu is deterministic for a fixed seed") {
  const auto p = generate_instance(14, 9);
  const TabuSpec spec{3, 200, 4};
  CHECK(solve_tabu(p, spec, 5) == solve_tabu(p, spec, 5));
}

TEST_CASE("baseline tabu settings") {
  CHECK(baseline_tabu_spec(8) == TabuSpec{4, 1600, 20});
  CHECK(baseline_tabu_spec(36) == TabuSpec{9, 7200, 20});
}

TEST_CASE("subsolver dispatch") {
  const auto p = generate_instance(6, 3);
  CHECK(subsolver_name(ExactSpec{}) == "exact");
  CHECK(subsolver_name(AnnealingSpec{}) == "annealing");
  CHECK(subsolver_name(TabuSpec{}) == "tabu");
  CHECK(subsolver_name(VqeSpec{}) == "vqe");
  CHECK(solve_subproblem(p, ExactSpec{}, 0) == solve_exact(p));
  CHECK(solve_subproblem(p, AnnealingSpec{}, 4) == solve_annealing(p, AnnealingSpec{}, 4));
  const SpinConfiguration warm(6);
  CHECK(solve_subproblem(p, TabuSpec{}, 4, warm) == solve_tabu(p, TabuSpec{}, 4, warm));
  CHECK_THROWS_AS(validate(SubsolverSpec{TabuSpec{1, 0, 1}}), ValidationError);
}
