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

#include "pqls/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "pqls/errors.hpp"

namespace pqls {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "invalid index '" + std::string(token) + "'");
  }
  return value;
}

double parse_value(std::string_view token, std::size_t line) {
  // from_chars rejects a leading '+', which hand-written files do use.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "invalid number '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line, "coefficient must be finite");
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

IsingProblem read_instance(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<double> fields;
  std::vector<bool> field_seen;
  std::vector<Coupling> couplings;
  std::set<std::pair<std::size_t, std::size_t>> coupling_seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] != "ising") throw ParseError(line_no, "expected header 'ising <n>'");
      if (tokens.size() != 2) throw ParseError(line_no, "header takes exactly one argument");
      n = parse_index(tokens[1], line_no);
      if (n == 0) throw ParseError(line_no, "problem size must be positive");
      fields.assign(n, 0.0);
      field_seen.assign(n, false);
      have_header = true;
      continue;
    }

    if (tokens[0] == "h") {
      if (tokens.size() != 3) throw ParseError(line_no, "field line must be 'h <i> <value>'");
      const std::size_t i = parse_index(tokens[1], line_no);
      if (i < 1 || i > n) throw ParseError(line_no, "index out of range");
      if (field_seen[i - 1]) throw ParseError(line_no, "duplicate field entry");
      field_seen[i - 1] = true;
      fields[i - 1] = parse_value(tokens[2], line_no);
    } else if (tokens[0] == "J") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "coupling line must be 'J <i> <j> <value>'");
      }
      const std::size_t i = parse_index(tokens[1], line_no);
      const std::size_t j = parse_index(tokens[2], line_no);
      if (i < 1 || i > n || j < 1 || j > n) throw ParseError(line_no, "index out of range");
      if (i >= j) throw ParseError(line_no, "coupling indices must satisfy i < j");
      if (!coupling_seen.emplace(i, j).second) {
        throw ParseError(line_no, "duplicate coupling entry");
      }
      couplings.push_back({i - 1, j - 1, parse_value(tokens[3], line_no)});
    } else if (tokens[0] == "ising") {
      throw ParseError(line_no, "duplicate header");
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header 'ising <n>'");
  return IsingProblem(n, std::move(fields), std::move(couplings));
}

std::string write_instance(const IsingProblem& problem) {
  std::string out = "ising " + std::to_string(problem.size()) + "\n";
  const auto fields = problem.fields();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "h " + std::to_string(i + 1) + " " + format_double(fields[i]) + "\n";
  }
  for (const Coupling& c : problem.couplings()) {
    out += "J " + std::to_string(c.i + 1) + " " + std::to_string(c.j + 1) + " " +
           format_double(c.value) + "\n";
  }
  return out;
}

IsingProblem load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_instance(buf.str());
}

void save_instance(const IsingProblem& problem, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  out << write_instance(problem);
}

}  // namespace pqls
