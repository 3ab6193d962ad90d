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
#include <random>

namespace pqls {

// mt19937_64 output is fixed by the standard, unlike the std:: distributions,
// so every draw below goes through the helpers in this header.
using Rng = std::mt19937_64;

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Unbiased integer in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return static_cast<std::size_t>(x % bound);
  }
}

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Seed for the random stream of branch `branch` in generation `generation`.
///
/// The value is mix64(master ^ generation * K_g ^ branch * K_b) with the two
/// odd constants below. It is a pure integer function and therefore stable
/// across runs, compilers and platforms. Index 0 is reserved for streams that
/// are not tied to a branch (the random initial configuration uses (0, 0)).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t generation,
                                    std::uint64_t branch) noexcept {
  constexpr std::uint64_t kGenerationMultiplier = 0x9e3779b97f4a7c15ULL;
  constexpr std::uint64_t kBranchMultiplier = 0xc2b2ae3d27d4eb4fULL;
  return mix64(master ^ (generation * kGenerationMultiplier) ^ (branch * kBranchMultiplier));
}

}  // namespace pqls
