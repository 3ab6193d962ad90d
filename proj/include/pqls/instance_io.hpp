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

#include <filesystem>
#include <string>
#include <string_view>

#include "pqls/ising.hpp"

namespace pqls {

// Text instance format (UTF-8, LF):
//
//   # comment to end of line
//   ising <n>
//   h <i> <value>
//   J <i> <j> <value>      (1 <= i < j <= n)
//
// The header must be the first non-comment line. Entry lines may come in any
// order; omitted entries are zero. Duplicates are errors.

/// Throws ParseError carrying the offending 1-based line number.
IsingProblem read_instance(std::string_view text);

/// Canonical form: header, all n h lines ascending, then J lines in (i, j)
/// order. Values use 17 significant digits so read_instance(write_instance(p))
/// reproduces p bit for bit.
std::string write_instance(const IsingProblem& problem);

IsingProblem load_instance(const std::filesystem::path& path);
void save_instance(const IsingProblem& problem, const std::filesystem::path& path);

/// "%.17g" formatting shared by the instance writer and CSV output.
std::string format_double(double value);

}  // namespace pqls
