// Copyright 2026 The rigidperc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigidperc/json_output.hpp"

#include <cmath>
#include <map>

#include "json.hpp"

namespace rigidperc::json {

namespace {

using Json = nlohmann::ordered_json;

// NaN and infinities are not JSON numbers; emit them as strings.
Json number(double value) {
  if (std::isfinite(value)) return value;
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

}  // namespace

std::string decomposition(const RigidDecomposition& d) {
  Json doc;
  doc["n"] = d.vertex_count;
  doc["m"] = d.edge_count;
  Json components = Json::array();
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& comp : d.components) {
    Json entry;
    entry["vertices"] = comp.vertices;
    entry["edge_count"] = comp.edge_count();
    entry["trivial"] = comp.trivial;
    components.push_back(std::move(entry));
    ++histogram[comp.span()];
  }
  doc["components"] = std::move(components);
  doc["largest_span"] = largest_component_size(d);
  Json hist = Json::object();
  for (const auto& [span, count] : histogram) hist[std::to_string(span)] = count;
  doc["histogram"] = std::move(hist);
  return doc.dump(2) + "\n";
}

std::string bound_report(const bounds::BoundReport& report) {
  Json doc;
  doc["formula"] = report.formula;
  Json inputs = Json::object();
  for (const auto& [name, value] : report.inputs) inputs[name] = number(value);
  doc["inputs"] = std::move(inputs);
  doc["value"] = number(report.value);
  return doc.dump(2) + "\n";
}

std::string certification(const bounds::CertificationReport& report) {
  Json doc;
  doc["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    Json entry;
    entry["name"] = check.name;
    entry["passed"] = check.passed();
    entry["cases"] = check.cases;
    entry["violations"] = check.violations;
    entry["worst"] = number(check.worst);
    entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string sweep_summary(const ExperimentConfig& config,
                          std::span<const CellSummary> cells) {
  Json doc;
  doc["rng"] = std::string(kRngName);
  doc["master_seed"] = config.master_seed.value;
  doc["trials"] = config.trials;
  doc["gap_lower"] = config.gap.lower;
  doc["gap_upper_fraction"] = number(config.gap.upper_fraction);
  Json list = Json::array();
  for (const auto& cell : cells) {
    Json entry;
    entry["n"] = cell.n;
    entry["c"] = number(cell.c);
    entry["trials"] = cell.trials;
    entry["fraction_largest_at_least_tenth"] =
        number(cell.fraction_largest_at_least_tenth);
    entry["fraction_gap_violation"] = number(cell.fraction_gap_violation);
    entry["fraction_any_linear"] = number(cell.fraction_any_linear);
    entry["fraction_triangle"] = number(cell.fraction_triangle);
    entry["mean_edge_count"] = number(cell.mean_edge_count);
    entry["mean_largest_fraction"] = number(cell.mean_largest_fraction);
    entry["q10_largest_fraction"] = number(cell.q10_largest_fraction);
    entry["median_largest_fraction"] = number(cell.median_largest_fraction);
    entry["q90_largest_fraction"] = number(cell.q90_largest_fraction);
    if (cell.uniqueness) {
      entry["uniqueness"] = number(*cell.uniqueness);
    } else {
      entry["uniqueness"] = nullptr;
    }
    list.push_back(std::move(entry));
  }
  doc["cells"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace rigidperc::json
