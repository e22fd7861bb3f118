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

#ifndef RIGIDPERC_PERCOLATION_HPP_
#define RIGIDPERC_PERCOLATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidperc/graph.hpp"
#include "rigidperc/pebble_game.hpp"
#include "rigidperc/rng.hpp"

namespace rigidperc {

// Finite-n stand-in for "size 2, 3 or linear": component spans in
// [lower, upper_fraction * n) count as violations, spans at or above
// upper_fraction * n as linear-size.
struct GapWindow {
  std::size_t lower = 4;
  double upper_fraction = 0.01;

  bool is_linear(std::size_t span, std::size_t n) const noexcept;
  bool in_gap(std::size_t span, std::size_t n) const noexcept;
};

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  std::vector<double> c_values;
  std::size_t trials = 1;
  RngSeed master_seed{};
  GapWindow gap{};

  // Throws InvalidArgument on empty grids, trials == 0, gap.lower < 4 or
  // gap.upper_fraction outside (0, 1).
  void validate() const;
};

// Reads "key = value" lines (keys: n, c, trials, seed, gap_lower,
// gap_upper_fraction; n and c take comma-separated lists). Blank lines and
// lines starting with '#' are skipped. Throws ParseError on malformed
// lines and InvalidArgument if the result fails validate().
ExperimentConfig parse_experiment_config(std::istream& in);

struct TrialRecord {
  std::size_t n = 0;
  double c = 0.0;
  std::size_t trial_index = 0;
  RngSeed seed{};
  std::size_t edge_count = 0;
  bool triangle_present = false;
  std::map<std::size_t, std::size_t> span_histogram;  // span -> components
  std::size_t component_edge_total = 0;
  std::size_t largest_span = 0;
  std::size_t component_count = 0;
  std::size_t trivial_count = 0;
  std::size_t linear_count = 0;
  bool gap_violation = false;
};

// Seed of trial `index` in cell (n, c); independent of scheduling.
RngSeed trial_seed(RngSeed master, std::size_t n, double c, std::size_t index);

// Statistics of one decomposed graph.
TrialRecord summarize_trial(const Graph& g, const RigidDecomposition& d,
                            double c, std::size_t trial_index, RngSeed seed,
                            const GapWindow& gap = {});

// Samples G(n, c/n) with `seed`, decomposes it and summarizes. Throws
// InvalidArgument unless 0 <= c < n.
TrialRecord run_trial(std::size_t n, double c, RngSeed seed,
                      const GapWindow& gap = {}, std::size_t trial_index = 0);

// True iff no component span falls inside the gap window.
bool dichotomy_check(const TrialRecord& record, const GapWindow& gap = {});

// Among records with at least one linear-size component, the fraction with
// exactly one. Empty if no record has one.
std::optional<double> uniqueness_stat(std::span<const TrialRecord> records);

struct CellSummary {
  std::size_t n = 0;
  double c = 0.0;
  std::size_t trials = 0;
  double fraction_largest_at_least_tenth = 0.0;  // largest_span >= n/10
  double fraction_gap_violation = 0.0;
  double fraction_any_linear = 0.0;
  double fraction_triangle = 0.0;
  double mean_edge_count = 0.0;
  double mean_largest_fraction = 0.0;  // largest_span / n
  double q10_largest_fraction = 0.0;
  double median_largest_fraction = 0.0;
  double q90_largest_fraction = 0.0;
  std::optional<double> uniqueness;
};

CellSummary summarize_cell(std::span<const TrialRecord> records);

struct SweepResult {
  std::vector<TrialRecord> records;  // sorted by (n, c, trial_index)
  std::vector<CellSummary> cells;    // in grid order
};

using RecordSink = std::function<void(const TrialRecord&)>;

// Runs every (n, c, trial) of the grid on up to `threads` workers
// (0 = hardware concurrency). `sink`, when set, sees records in canonical
// order. If a trial throws, the sink has received the canonical prefix of
// completed records before the exception propagates.
SweepResult run_sweep(const ExperimentConfig& config, unsigned threads = 0,
                      const RecordSink& sink = {});

struct EmergencePoint {
  double c = 0.0;
  std::size_t trials = 0;
  double fraction_linear = 0.0;
};

// Per-c fraction of trials with a linear-size component.
std::vector<EmergencePoint> emergence_scan(std::size_t n,
                                           std::span<const double> c_grid,
                                           std::size_t trials, RngSeed seed,
                                           const GapWindow& gap = {},
                                           unsigned threads = 0);

// Largest component span of sample_gnp_coupled(n, c/n, seed) for each c.
// Samples are nested, so spans are non-decreasing in c.
std::vector<std::size_t> coupled_largest_spans(std::size_t n,
                                               std::span<const double> c_values,
                                               RngSeed seed);

// Mean number of components spanning exactly k vertices over `trials`
// samples of G(n, c/n): a Monte Carlo estimate of E[X_k].
double mean_components_of_span(std::size_t n, double c, std::size_t k,
                               std::size_t trials, RngSeed seed,
                               unsigned threads = 0);

// Fraction of `samples` draws of G(n, c/n) in which the vertex set
// {0, ..., k-1} is exactly one rigid component.
double fixed_set_component_frequency(std::size_t n, double c, std::size_t k,
                                     std::size_t samples, RngSeed seed,
                                     unsigned threads = 0);

// CSV columns: n,c,trial,seed,m,triangle,largest_span,n_components,
// n_trivial,gap_violation,n_linear.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrialRecord& record);

// Shortest round-trip decimal form; used wherever c appears in output.
std::string format_double(double value);

}  // namespace rigidperc

#endif  // RIGIDPERC_PERCOLATION_HPP_
