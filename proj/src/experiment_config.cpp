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
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pqls/errors.hpp"
#include "pqls/experiment.hpp"

namespace pqls {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

std::uint64_t as_unsigned(const json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw ValidationError("'" + key + "' must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

double as_double(const json& value, const std::string& key) {
  if (!value.is_number()) throw ValidationError("'" + key + "' must be a number");
  return value.get<double>();
}

// An axis may be written as a scalar or as a list.
std::vector<std::size_t> as_axis(const json& value, const std::string& key) {
  std::vector<std::size_t> axis;
  if (value.is_array()) {
    for (const auto& item : value) axis.push_back(as_unsigned(item, key));
  } else {
    axis.push_back(as_unsigned(value, key));
  }
  return axis;
}

SubsolverSpec parse_subsolver(const json& object) {
  if (!object.is_object() || !object.contains("kind") || !object["kind"].is_string()) {
    throw ValidationError("'subsolver' must be an object with a string 'kind'");
  }
  const auto kind = object["kind"].get<std::string>();
  if (kind == "exact") {
    reject_unknown_keys(object, {"kind"}, "subsolver");
    return ExactSpec{};
  }
  if (kind == "annealing") {
    reject_unknown_keys(object, {"kind", "sweeps", "t_initial", "t_final"}, "subsolver");
    AnnealingSpec spec;
    if (object.contains("sweeps")) spec.sweeps = as_unsigned(object["sweeps"], "sweeps");
    if (object.contains("t_initial")) spec.t_initial = as_double(object["t_initial"], "t_initial");
    if (object.contains("t_final")) spec.t_final = as_double(object["t_final"], "t_final");
    return spec;
  }
  if (kind == "tabu") {
    reject_unknown_keys(object, {"kind", "tenure", "budget", "restarts"}, "subsolver");
    TabuSpec spec;
    if (object.contains("tenure")) spec.tenure = as_unsigned(object["tenure"], "tenure");
    if (object.contains("budget")) spec.budget = as_unsigned(object["budget"], "budget");
    if (object.contains("restarts")) spec.restarts = as_unsigned(object["restarts"], "restarts");
    return spec;
  }
  if (kind == "vqe") {
    reject_unknown_keys(object,
                        {"kind", "layers", "iterations", "shots", "a", "c", "A", "alpha", "gamma"},
                        "subsolver");
    VqeSpec spec;
    if (object.contains("layers")) spec.layers = as_unsigned(object["layers"], "layers");
    if (object.contains("iterations")) {
      spec.iterations = as_unsigned(object["iterations"], "iterations");
    }
    if (object.contains("shots")) spec.shots = as_unsigned(object["shots"], "shots");
    if (object.contains("a")) spec.gains.a = as_double(object["a"], "a");
    if (object.contains("c")) spec.gains.c = as_double(object["c"], "c");
    if (object.contains("A")) spec.gains.stability = as_double(object["A"], "A");
    if (object.contains("alpha")) spec.gains.alpha = as_double(object["alpha"], "alpha");
    if (object.contains("gamma")) spec.gains.gamma = as_double(object["gamma"], "gamma");
    return spec;
  }
  throw ValidationError("unknown subsolver kind '" + kind + "'");
}

void require_nonempty_positive(const std::vector<std::size_t>& axis, const std::string& key) {
  if (axis.empty()) throw ValidationError("axis '" + key + "' must not be empty");
  if (std::find(axis.begin(), axis.end(), 0) != axis.end()) {
    throw ValidationError("axis '" + key + "' values must be >= 1");
  }
}

}  // namespace

const char* to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::grid_np_ng:
      return "grid_np_ng";
    case SweepKind::branches:
      return "branches";
    case SweepKind::unit_length:
      return "unit_length";
    case SweepKind::vqe_iters:
      return "vqe_iters";
    case SweepKind::custom:
      return "custom";
  }
  return "unknown";
}

SweepKind sweep_kind_from_string(const std::string& name) {
  for (SweepKind kind : {SweepKind::grid_np_ng, SweepKind::branches, SweepKind::unit_length,
                         SweepKind::vqe_iters, SweepKind::custom}) {
    if (name == to_string(kind)) return kind;
  }
  throw ValidationError("unknown sweep kind '" + name + "'");
}

TabuSpec BaselineSpec::for_size(std::size_t n) const {
  TabuSpec spec = baseline_tabu_spec(n);
  if (tenure) spec.tenure = *tenure;
  spec.budget = budget_per_variable * n;
  spec.restarts = restarts;
  return spec;
}

void validate(const ExperimentConfig& config) {
  require_nonempty_positive(config.n_p, "n_p");
  require_nonempty_positive(config.n_g, "n_g");
  require_nonempty_positive(config.branches, "branches");
  require_nonempty_positive(config.unit_length, "unit_length");
  if (config.instances_per_point == 0) {
    throw ValidationError("instances_per_point must be >= 1");
  }
  if (config.baseline.budget_per_variable == 0 || config.baseline.restarts == 0) {
    throw ValidationError("baseline budget_per_variable and restarts must be >= 1");
  }
  validate(config.subsolver);

  const bool is_vqe = std::holds_alternative<VqeSpec>(config.subsolver);
  if (config.sweep == SweepKind::unit_length) {
    if (!config.total_budget || *config.total_budget == 0) {
      throw ValidationError("unit_length sweeps require a positive total_budget");
    }
  } else {
    require_nonempty_positive(config.generations, "generations");
    if (config.total_budget) {
      throw ValidationError("total_budget only applies to unit_length sweeps");
    }
  }
  if (config.sweep == SweepKind::vqe_iters) {
    if (!is_vqe) throw ValidationError("vqe_iters sweeps require the vqe subsolver");
    require_nonempty_positive(config.vqe_iterations, "vqe_iterations");
  }
  if (!config.vqe_iterations.empty()) {
    if (!is_vqe) throw ValidationError("vqe_iterations requires the vqe subsolver");
    require_nonempty_positive(config.vqe_iterations, "vqe_iterations");
  }
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  reject_unknown_keys(doc,
                      {"experiment_id", "sweep", "n_p", "n_g", "branches", "unit_length",
                       "generations", "vqe_iterations", "total_budget", "instances_per_point",
                       "subsolver", "baseline", "compare_qls", "accept_rule", "master_seed",
                       "concurrency", "output"},
                      "config");

  ExperimentConfig config;
  if (doc.contains("experiment_id")) {
    if (!doc["experiment_id"].is_string()) throw ValidationError("'experiment_id' must be a string");
    config.experiment_id = doc["experiment_id"].get<std::string>();
  }
  if (doc.contains("sweep")) {
    if (!doc["sweep"].is_string()) throw ValidationError("'sweep' must be a string");
    config.sweep = sweep_kind_from_string(doc["sweep"].get<std::string>());
  }
  if (doc.contains("n_p")) config.n_p = as_axis(doc["n_p"], "n_p");
  if (doc.contains("n_g")) config.n_g = as_axis(doc["n_g"], "n_g");
  if (doc.contains("branches")) config.branches = as_axis(doc["branches"], "branches");
  if (doc.contains("unit_length")) config.unit_length = as_axis(doc["unit_length"], "unit_length");
  if (doc.contains("generations")) {
    if (config.sweep == SweepKind::unit_length) {
      throw ValidationError("unit_length sweeps derive generations from total_budget");
    }
    config.generations = as_axis(doc["generations"], "generations");
  }
  if (doc.contains("vqe_iterations")) {
    config.vqe_iterations = as_axis(doc["vqe_iterations"], "vqe_iterations");
  }
  if (doc.contains("total_budget")) {
    config.total_budget = as_unsigned(doc["total_budget"], "total_budget");
  }
  if (doc.contains("instances_per_point")) {
    config.instances_per_point = as_unsigned(doc["instances_per_point"], "instances_per_point");
  }
  if (doc.contains("subsolver")) config.subsolver = parse_subsolver(doc["subsolver"]);
  if (doc.contains("baseline")) {
    const json& b = doc["baseline"];
    if (!b.is_object()) throw ValidationError("'baseline' must be an object");
    reject_unknown_keys(b, {"tenure", "budget_per_variable", "restarts"}, "baseline");
    if (b.contains("tenure")) config.baseline.tenure = as_unsigned(b["tenure"], "tenure");
    if (b.contains("budget_per_variable")) {
      config.baseline.budget_per_variable =
          as_unsigned(b["budget_per_variable"], "budget_per_variable");
    }
    if (b.contains("restarts")) config.baseline.restarts = as_unsigned(b["restarts"], "restarts");
  }
  if (doc.contains("compare_qls")) {
    if (!doc["compare_qls"].is_boolean()) throw ValidationError("'compare_qls' must be a boolean");
    config.compare_qls = doc["compare_qls"].get<bool>();
  }
  if (doc.contains("accept_rule")) {
    if (!doc["accept_rule"].is_string()) throw ValidationError("'accept_rule' must be a string");
    config.accept_rule = accept_rule_from_string(doc["accept_rule"].get<std::string>());
  }
  if (doc.contains("master_seed")) config.master_seed = as_unsigned(doc["master_seed"], "master_seed");
  if (doc.contains("concurrency")) config.concurrency = as_unsigned(doc["concurrency"], "concurrency");
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw ValidationError("'output' must be a string");
    config.output = doc["output"].get<std::string>();
  }

  validate(config);
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::vector<SweepPoint> expand_points(const ExperimentConfig& config) {
  validate(config);
  std::vector<std::size_t> vqe_axis = config.vqe_iterations;
  if (vqe_axis.empty()) {
    const auto* vqe = std::get_if<VqeSpec>(&config.subsolver);
    vqe_axis.push_back(vqe ? vqe->iterations : 0);
  }
  const bool derived_generations = config.sweep == SweepKind::unit_length;
  const std::vector<std::size_t> generation_axis =
      derived_generations ? std::vector<std::size_t>{0} : config.generations;

  std::vector<SweepPoint> points;
  for (std::size_t n_p : config.n_p) {
    for (std::size_t n_g : config.n_g) {
      for (std::size_t b : config.branches) {
        for (std::size_t l : config.unit_length) {
          for (std::size_t g : generation_axis) {
            for (std::size_t it : vqe_axis) {
              SweepPoint p{n_p, n_g, b, l, g, it, std::nullopt};
              if (derived_generations) {
                if (*config.total_budget % l != 0) {
                  p.rejection = "total_budget " + std::to_string(*config.total_budget) +
                                " is not divisible by unit_length " + std::to_string(l);
                } else {
                  p.generations = *config.total_budget / l;
                }
              }
              points.push_back(std::move(p));
            }
          }
        }
      }
    }
  }
  return points;
}

}  // namespace pqls
