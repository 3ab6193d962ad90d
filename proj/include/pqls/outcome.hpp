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

#include <cstdint>

#include "pqls/ising.hpp"

namespace pqls {

/// Result of solving one (sub-)problem.
struct SolveOutcome {
  SpinConfiguration config;
  /// energy(problem, config); excludes any clamping offset.
  double energy = 0.0;
  /// Energy or flip-delta evaluations (statevector preparations for VQE).
  std::uint64_t evaluations = 0;

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

}  // namespace pqls
