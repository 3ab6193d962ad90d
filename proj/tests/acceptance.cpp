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

// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// indented detail lines, and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pqls/engine.hpp"
#include "pqls/errors.hpp"
#include "pqls/experiment.hpp"
#include "pqls/subsolver.hpp"
#include "pqls/vqe.hpp"
#include "test_support.hpp"

using namespace pqls;

namespace {

struct Verdict {
  bool pass = false;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// One-sided sign-test p-value: P(X >= wins) for X ~ Binomial(trials, 1/2).
double sign_test_p(int wins, int trials) {
  double p = 0.0;
  for (int k = wins; k <= trials; ++k) {
    p += std::exp(std::lgamma(trials + 1.0) - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0) -
                  trials * std::log(2.0));
  }
  return p;
}

// ---------------------------------------------------------------------------

Verdict clamping_identity() {
  Verdict v;
  std::mt19937_64 rng(101);
  std::size_t checks = 0, violations = 0;
  double worst = 0.0;
  for (int triple = 0; triple < 1000; ++triple) {
    const std::size_t n = 1 + rng() % 20;
    const auto problem = generate_instance(n, rng());
    const auto config = random_configuration(n, rng());
    const std::size_t m = 1 + rng() % n;
    const auto subset = pqls::testing::random_subset(rng, n, m);
    const auto sub = extract_subproblem(problem, config, subset);

    auto check = [&](const SpinConfiguration& t) {
      const double lhs = energy(sub.inner, t) + sub.offset;
      const double rhs = energy(problem, embed_solution(config, subset, t));
      const double gap = std::abs(lhs - rhs);
      worst = std::max(worst, gap);
      ++checks;
      if (!(gap <= 1e-9)) ++violations;
    };
    if (m <= 8) {
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) check(spins_from_bits(z, m));
    } else {
      for (int k = 0; k < 32; ++k) check(random_configuration(m, rng()));
    }
  }
  v.pass = violations == 0;
  v.note(fmt("1000 triples, %zu sub-assignments checked, %zu violations, max |gap| %.3g",
             checks, violations, worst));
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(202);
  int energy_mismatch = 0, winner_mismatch = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 12;
    // Mix dense continuous instances with sparse ones and a coarse integer
    // grid, which produces many exact ties for the tie-break check.
    IsingProblem p = generate_instance(n, rng());
    if (k % 3 == 1) {
      p = pqls::testing::random_sparse_problem(rng, n, 0.3);
    } else if (k % 3 == 2) {
      std::vector<double> h(n);
      std::vector<Coupling> j;
      for (auto& x : h) x = static_cast<double>(static_cast<int>(rng() % 3) - 1);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (rng() % 2) j.push_back({a, b, static_cast<double>(static_cast<int>(rng() % 3) - 1)});
      p = IsingProblem(n, std::move(h), std::move(j));
    }
    const auto oracle = pqls::testing::brute_force_ground(p);
    const auto out = solve_exact(p);
    if (out.energy != oracle.energy) ++energy_mismatch;
    if (!(out.config == pqls::testing::to_config(oracle.spins))) ++winner_mismatch;
  }
  v.pass = energy_mismatch == 0 && winner_mismatch == 0;
  v.note(fmt("200 instances (n <= 12): %d energy mismatches, %d tie-break mismatches",
             energy_mismatch, winner_mismatch));
  return v;
}

Verdict monotone_descent() {
  Verdict v;
  std::mt19937_64 rng(303);
  int trajectory_violations = 0, step_violations = 0;
  for (int run = 0; run < 100; ++run) {
    const std::size_t n_g = 1 + rng() % 10;
    const std::size_t n_p = n_g + rng() % (31 - n_g);
    const auto problem = generate_instance(n_p, rng());
    const auto initial = random_configuration(n_p, rng());
    PqlsParams params;
    params.sub_size = n_g;
    params.unit_length = 50;
    params.subsolver = ExactSpec{};
    params.master_seed = rng();
    const auto branch = run_branch(problem, initial, params, 1, 1);
    double previous = energy(problem, initial);
    for (double e : branch.trajectory) {
      if (e > previous) ++trajectory_violations;
      previous = e;
    }

    // The current state itself, not just the best-so-far, must never rise.
    Rng step_rng(derive_seed(params.master_seed, 1, 1));
    SpinConfiguration s = initial;
    double current = energy(problem, s);
    for (int it = 0; it < 50; ++it) {
      auto step = qls_step(problem, s, n_g, ExactSpec{}, AcceptRule::improve_or_equal, step_rng);
      if (step.energy > current || energy(problem, step.config) != step.energy) ++step_violations;
      current = step.energy;
      s = std::move(step.config);
    }
    if (current != branch.trajectory.back()) ++trajectory_violations;
  }
  v.pass = trajectory_violations == 0 && step_violations == 0;
  v.note(fmt("100 runs x 50 iterations: %d trajectory violations, %d per-step violations",
             trajectory_violations, step_violations));
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::size_t max_threads =
      std::max<std::size_t>(8, std::thread::hardware_concurrency());
  std::mt19937_64 rng(404);
  int mismatches = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n_p = 8 + rng() % 25;
    PqlsParams params;
    params.sub_size = 2 + rng() % std::min<std::size_t>(9, n_p - 1);
    params.branches = 1 + rng() % 12;
    params.unit_length = 1 + rng() % 10;
    params.generations = 1 + rng() % 4;
    switch (k % 4) {
      case 0: params.subsolver = ExactSpec{}; break;
      case 1: params.subsolver = AnnealingSpec{30, 2.0, 0.05}; break;
      case 2: params.subsolver = TabuSpec{2, 40, 2}; break;
      default: {
        VqeSpec vqe;
        vqe.iterations = 5;
        vqe.shots = 32;
        params.sub_size = std::min<std::size_t>(params.sub_size, 5);
        params.subsolver = vqe;
      }
    }
    params.accept_rule = rng() % 2 ? AcceptRule::always : AcceptRule::improve_or_equal;
    params.master_seed = rng();
    params.keep_branches = true;
    const auto problem = generate_instance(n_p, rng());
    const auto initial = default_initial(n_p, params.master_seed);

    params.concurrency = 1;
    const auto serial = run_pqls(problem, initial, params);
    params.concurrency = max_threads;
    const auto parallel = run_pqls(problem, initial, params);
    if (!(serial == parallel)) ++mismatches;
  }
  v.pass = mismatches == 0;
  v.note(fmt("50 configurations, 1 vs %zu threads: %d mismatches (full result incl. every branch)",
             max_threads, mismatches));
  return v;
}

Verdict pqls_beats_qls() {
  Verdict v;
  const AnnealingSpec sa{100, 2.0, 0.05};
  int wins = 0, strict = 0, ties = 0;
  std::uint64_t pqls_calls = 0, qls_calls = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto problem = generate_instance(30, instance_seed(seed, 30, 1));
    const auto initial = default_initial(30, seed);
    PqlsParams params;
    params.sub_size = 8;
    params.branches = 16;
    params.unit_length = 20;
    params.generations = 5;
    params.subsolver = sa;
    params.master_seed = seed;
    params.concurrency = 0;
    const auto p = run_pqls(problem, initial, params);
    const auto q = run_qls(problem, initial, 20 * 5, 8, sa, seed);
    pqls_calls += p.subsolver_calls;
    qls_calls += q.subsolver_calls;
    if (p.best_energy <= q.best_energy) ++wins;
    if (p.best_energy < q.best_energy) ++strict;
    if (p.best_energy == q.best_energy) ++ties;
  }
  v.pass = wins >= 15;
  v.note(fmt("PQLS <= QLS on %d/20 seeds (%d strictly better, %d ties)", wins, strict, ties));
  const int decided = 20 - ties;
  v.note(fmt("sign test over %d untied pairs: one-sided p = %.3g", decided,
             decided > 0 ? sign_test_p(strict, decided) : 1.0));
  v.note(fmt("subsolver calls: PQLS %llu, QLS %llu (QLS matches one branch's budget)",
             static_cast<unsigned long long>(pqls_calls),
             static_cast<unsigned long long>(qls_calls)));
  return v;
}

Verdict branch_trend() {
  Verdict v;
  const std::size_t counts[] = {1, 4, 16, 64};
  std::vector<double> medians;
  for (std::size_t b : counts) {
    std::vector<double> finals;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto problem = generate_instance(36, instance_seed(seed, 36, 1));
      PqlsParams params;
      params.sub_size = 10;
      params.branches = b;
      params.unit_length = 20;
      params.generations = 5;
      params.subsolver = AnnealingSpec{100, 2.0, 0.05};
      params.master_seed = seed;
      params.concurrency = 0;
      finals.push_back(run_pqls(problem, default_initial(36, seed), params).best_energy);
    }
    medians.push_back(median(finals));
  }
  int inversions = 0;
  for (std::size_t k = 1; k < medians.size(); ++k) {
    if (medians[k] > medians[k - 1]) ++inversions;
  }
  v.pass = inversions <= 1;
  v.note(fmt("median final energy  B=1: %.6f  B=4: %.6f  B=16: %.6f  B=64: %.6f", medians[0],
             medians[1], medians[2], medians[3]));
  v.note(fmt("adjacent inversions: %d (at most 1 allowed)", inversions));
  return v;
}

Verdict vqe_sanity() {
  Verdict v;
  const auto two = pqls::testing::two_spin_problem();
  const double ground = pqls::testing::brute_force_ground(two).energy;
  VqeSpec spec;
  spec.layers = 2;
  spec.iterations = 200;
  spec.shots = 1024;
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (solve_vqe(two, spec, seed).energy == ground) ++hits;
  }

  VqeSpec one = spec, many = spec;
  one.iterations = 1;
  many.iterations = 500;
  double sum_one = 0.0, sum_many = 0.0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto p = generate_instance(8, derive_seed(505, 8, k + 1));
    sum_one += solve_vqe(p, one, k).energy;
    sum_many += solve_vqe(p, many, k).energy;
  }
  const double mean_one = sum_one / 50, mean_many = sum_many / 50;
  v.pass = hits >= 90 && mean_many <= mean_one;
  v.note(fmt("2-spin ground state found on %d/100 seeds (need >= 90)", hits));
  v.note(fmt("m=8, 50 instances: mean energy %.6f at 1 iteration, %.6f at 500", mean_one,
             mean_many));
  return v;
}

Verdict baseline_fidelity() {
  Verdict v;
  std::mt19937_64 rng(606);
  int matches = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + rng() % 15;
    const auto p = generate_instance(n, rng());
    const double tabu = solve_tabu(p, baseline_tabu_spec(n), rng()).energy;
    if (tabu == solve_exact(p).energy) ++matches;
  }
  v.pass = matches >= 45;
  v.note(fmt("tabu baseline equals the exact ground energy on %d/50 instances (n <= 16)",
             matches));
  return v;
}

Verdict metric() {
  Verdict v;
  const double r = approximation_ratio(-90.0, -100.0);
  auto refuses = [](double baseline) {
    try {
      approximation_ratio(-5.0, baseline);
    } catch (const MetricUndefinedError&) {
      return true;
    }
    return false;
  };
  const bool guards = refuses(0.0) && refuses(-0.0) && refuses(7.5);
  v.pass = r == 0.9 && guards && approximation_ratio(-100.0, -100.0) == 1.0;
  v.note(fmt("ratio(-90, -100) = %.17g; non-negative baselines %s", r,
             guards ? "raise the metric error" : "are NOT refused"));
  return v;
}

Verdict end_to_end() {
  Verdict v;
  const std::filesystem::path config_path = std::filesystem::path(PQLS_CONFIG_DIR) / "branches.json";
  auto config = load_experiment_config(config_path);
  const auto out_dir = std::filesystem::temp_directory_path() / "pqls_acceptance";
  std::filesystem::create_directories(out_dir);
  config.output = out_dir / "branches.csv";
  config.concurrency = 0;

  const auto start = std::chrono::steady_clock::now();
  const auto report = run_sweep(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto check = validate_csv_file(report.csv_path);

  const std::size_t methods = config.compare_qls ? 2 : 1;
  const std::size_t expected = report.points * config.instances_per_point * methods;
  v.pass = check.ok() && report.error_rows == 0 && check.rows == expected && seconds < 600.0;
  v.note(fmt("%zu points, %zu rows (expected %zu), %zu error rows, validator %s", report.points,
             check.rows, expected, report.error_rows, check.ok() ? "passed" : "FAILED"));
  for (const auto& problem : check.problems) v.note("validator: " + problem);
  v.note(fmt("sweep wall time %.1f s on %u hardware threads", seconds,
             std::thread::hardware_concurrency()));
  v.note("csv: " + report.csv_path.string());
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_seconds;  // 0 = no runtime bound
  };
  const Criterion criteria[] = {
      {"clamping identity", clamping_identity, 10.0},
      {"oracle equivalence", oracle_equivalence, 0.0},
      {"monotone descent", monotone_descent, 0.0},
      {"determinism across thread counts", determinism, 0.0},
      {"PQLS >= QLS trend", pqls_beats_qls, 120.0},
      {"branch-count trend", branch_trend, 300.0},
      {"VQE subsolver sanity", vqe_sanity, 0.0},
      {"baseline fidelity", baseline_fidelity, 0.0},
      {"metric correctness", metric, 0.0},
      {"end-to-end sweep", end_to_end, 600.0},
  };

  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      v.pass = false;
      v.note(fmt("runtime limit %.0f s exceeded", c.limit_seconds));
    }
    std::printf("[%s] %2d %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", index, c.name, seconds);
    for (const auto& line : v.details) std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
