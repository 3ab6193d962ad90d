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

#include "pqls/subsolver.hpp"

#include <type_traits>

namespace pqls {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string subsolver_name(const SubsolverSpec& spec) {
  return std::visit(overloaded{
                        [](const ExactSpec&) { return std::string("exact"); },
                        [](const AnnealingSpec&) { return std::string("annealing"); },
                        [](const TabuSpec&) { return std::string("tabu"); },
                        [](const VqeSpec&) { return std::string("vqe"); },
                    },
                    spec);
}

void validate(const SubsolverSpec& spec) {
  std::visit(overloaded{
                 [](const ExactSpec&) {},
                 [](const auto& s) { validate(s); },
             },
             spec);
}

SolveOutcome solve_subproblem(const IsingProblem& inner, const SubsolverSpec& spec,
                              std::uint64_t seed,
                              const std::optional<SpinConfiguration>& warm_start) {
  return std::visit(overloaded{
                        [&](const ExactSpec&) { return solve_exact(inner); },
                        [&](const AnnealingSpec& s) {
                          return solve_annealing(inner, s, seed, warm_start);
                        },
                        [&](const TabuSpec& s) { return solve_tabu(inner, s, seed, warm_start); },
                        [&](const VqeSpec& s) { return solve_vqe(inner, s, seed); },
                    },
                    spec);
}

}  // namespace pqls
