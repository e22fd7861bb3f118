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

#ifndef RIGIDPERC_JSON_OUTPUT_HPP_
#define RIGIDPERC_JSON_OUTPUT_HPP_

#include <span>
#include <string>

#include "rigidperc/bounds.hpp"
#include "rigidperc/percolation.hpp"
#include "rigidperc/pebble_game.hpp"

// JSON documents written by the command-line tool. Keys are emitted in a
// fixed order so outputs can be compared textually.
namespace rigidperc::json {

// {n, m, components: [{vertices, edge_count, trivial}], largest_span,
//  histogram: {"<span>": count, ...}} with histogram keys in numeric order.
std::string decomposition(const RigidDecomposition& d);

// {formula, inputs: {...}, value}
std::string bound_report(const bounds::BoundReport& report);

// {passed, checks: [{name, cases, violations, worst, detail}]}
std::string certification(const bounds::CertificationReport& report);

// {rng, master_seed, gap_lower, gap_upper_fraction, trials, cells: [...]}
std::string sweep_summary(const ExperimentConfig& config,
                          std::span<const CellSummary> cells);

}  // namespace rigidperc::json

#endif  // RIGIDPERC_JSON_OUTPUT_HPP_
