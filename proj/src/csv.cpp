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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "pqls/experiment.hpp"
#include "pqls/instance_io.hpp"

namespace pqls {

namespace {

constexpr const char* kColumns[] = {
    "experiment_id", "method",          "n_p",           "n_g",          "branches",
    "unit_length",   "generations",     "subsolver",     "vqe_iterations", "instance_seed",
    "master_seed",   "best_energy",     "baseline_energy", "approx_ratio", "subsolver_calls",
    "wall_time_ms",  "error"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Rows are one physical line each.
std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  std::replace(text.begin(), text.end(), '\r', ' ');
  return text;
}

std::vector<std::string> fields_of(const RunRecord& r) {
  const bool ok = r.error.empty();
  return {quote(r.experiment_id),
          quote(r.method),
          std::to_string(r.n_p),
          std::to_string(r.n_g),
          std::to_string(r.branches),
          std::to_string(r.unit_length),
          std::to_string(r.generations),
          quote(r.subsolver),
          std::to_string(r.vqe_iterations),
          std::to_string(r.instance_seed),
          std::to_string(r.master_seed),
          ok ? format_double(r.best_energy) : "",
          ok ? format_double(r.baseline_energy) : "",
          ok ? format_double(r.approx_ratio) : "",
          std::to_string(r.subsolver_calls),
          std::to_string(r.wall_time_ms),
          quote(single_line(r.error))};
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

bool parse_uint(std::string_view s, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

bool parse_finite(std::string_view s, double& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty() && std::isfinite(value);
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  return out;
}

std::string to_csv_row(const RunRecord& record) { return join(fields_of(record)); }

std::string to_csv_row_without_time(const RunRecord& record) {
  auto fields = fields_of(record);
  fields.erase(fields.begin() + 15);
  return join(fields);
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

void write_summary(std::ostream& out, const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, std::string, std::size_t, std::size_t, std::size_t,
                         std::size_t, std::size_t, std::size_t>;
  // Keyed by first appearance so the summary follows sweep order.
  std::vector<Key> order;
  std::map<Key, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) {
    Key key{r.experiment_id, r.method,     r.n_p,         r.n_g,
            r.branches,      r.unit_length, r.generations, r.vqe_iterations};
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&r);
  }

  out << "experiment_id,method,n_p,n_g,branches,unit_length,generations,subsolver,"
         "vqe_iterations,runs,errors,mean_approx_ratio,median_approx_ratio,"
         "mean_best_energy,median_best_energy\n";
  for (const Key& key : order) {
    const auto& rows = groups[key];
    const RunRecord& first = *rows.front();
    std::vector<double> ratios, energies;
    std::size_t errors = 0;
    for (const RunRecord* r : rows) {
      if (!r->error.empty()) {
        ++errors;
        continue;
      }
      ratios.push_back(r->approx_ratio);
      energies.push_back(r->best_energy);
    }
    out << quote(first.experiment_id) << ',' << quote(first.method) << ',' << first.n_p << ','
        << first.n_g << ',' << first.branches << ',' << first.unit_length << ','
        << first.generations << ',' << quote(first.subsolver) << ',' << first.vqe_iterations
        << ',' << rows.size() << ',' << errors;
    if (ratios.empty()) {
      out << ",,,,\n";
      continue;
    }
    double ratio_sum = 0.0, energy_sum = 0.0;
    for (double v : ratios) ratio_sum += v;
    for (double v : energies) energy_sum += v;
    const double count = static_cast<double>(ratios.size());
    out << ',' << format_double(ratio_sum / count) << ',' << format_double(median_of(ratios))
        << ',' << format_double(energy_sum / count) << ',' << format_double(median_of(energies))
        << '\n';
  }
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

CsvValidation validate_csv(std::string_view text) {
  CsvValidation result;
  auto problem = [&](std::size_t line, const std::string& message) {
    result.problems.push_back("line " + std::to_string(line) + ": " + message);
  };

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty() || lines[0] != csv_header()) {
    problem(1, "header does not match the expected columns");
    return result;
  }

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const auto fields = split_csv_line(lines[li]);
    if (fields.size() != kColumnCount) {
      problem(line_no, "expected " + std::to_string(kColumnCount) + " columns, got " +
                           std::to_string(fields.size()));
      continue;
    }
    ++result.rows;
    if (fields[1] != "pqls" && fields[1] != "qls") problem(line_no, "unknown method");
    for (std::size_t c : {2, 3, 4, 5, 6, 8, 9, 10, 14, 15}) {
      std::uint64_t value = 0;
      if (!parse_uint(fields[c], value)) {
        problem(line_no, std::string("column ") + kColumns[c] + " is not an integer");
      }
    }
    if (!fields[16].empty()) {
      ++result.error_rows;
      continue;
    }
    double best = 0.0, baseline = 0.0, ratio = 0.0;
    if (!parse_finite(fields[11], best) || !parse_finite(fields[12], baseline) ||
        !parse_finite(fields[13], ratio)) {
      problem(line_no, "energies and ratio must be finite numbers");
      continue;
    }
    if (!(baseline < 0.0)) {
      problem(line_no, "baseline_energy must be negative");
      continue;
    }
    if (ratio != best / baseline) {
      problem(line_no, "approx_ratio " + fields[13] + " != best_energy / baseline_energy");
    }
  }
  return result;
}

CsvValidation validate_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    CsvValidation result;
    result.problems.push_back("cannot open " + path.string());
    return result;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate_csv(buf.str());
}

}  // namespace pqls
