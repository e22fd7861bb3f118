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

#include "rigidperc/percolation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

#include "parallel.hpp"
#include "rigidperc/errors.hpp"

namespace rigidperc {

bool GapWindow::is_linear(std::size_t span, std::size_t n) const noexcept {
  return static_cast<double>(span) >= upper_fraction * static_cast<double>(n);
}

bool GapWindow::in_gap(std::size_t span, std::size_t n) const noexcept {
  return span >= lower && !is_linear(span, n);
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw InvalidArgument("sweep needs at least one n");
  if (c_values.empty()) throw InvalidArgument("sweep needs at least one c");
  if (trials < 1) throw InvalidArgument("sweep needs trials >= 1");
  if (gap.lower < 4) throw InvalidArgument("gap_lower must be >= 4");
  if (!(gap.upper_fraction > 0.0 && gap.upper_fraction < 1.0)) {
    throw InvalidArgument("gap_upper_fraction must lie in (0, 1)");
  }
  for (double c : c_values) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidArgument("c values must be finite and non-negative");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, "bad value for " + std::string(key) + ": \"" +
                               std::string(text) + "\"");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::size_t line,
                          std::string_view key) {
  std::vector<T> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number<T>(text.substr(0, comma), line, key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected \"key = value\"");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "n") {
      config.n_values = parse_list<std::size_t>(value, line_no, key);
    } else if (key == "c") {
      config.c_values = parse_list<double>(value, line_no, key);
    } else if (key == "trials") {
      config.trials = parse_number<std::size_t>(value, line_no, key);
    } else if (key == "seed") {
      config.master_seed = RngSeed{parse_number<std::uint64_t>(value, line_no, key)};
    } else if (key == "gap_lower") {
      config.gap.lower = parse_number<std::size_t>(value, line_no, key);
    } else if (key == "gap_upper_fraction") {
      config.gap.upper_fraction = parse_number<double>(value, line_no, key);
    } else {
      throw ParseError(line_no, "unknown key \"" + std::string(key) + "\"");
    }
  }
  config.validate();
  return config;
}

RngSeed trial_seed(RngSeed master, std::size_t n, double c, std::size_t index) {
  return derive_seed(master, n, std::bit_cast<std::uint64_t>(c), index);
}

TrialRecord summarize_trial(const Graph& g, const RigidDecomposition& d,
                            double c, std::size_t trial_index, RngSeed seed,
                            const GapWindow& gap) {
  TrialRecord r;
  r.n = g.vertex_count();
  r.c = c;
  r.trial_index = trial_index;
  r.seed = seed;
  r.edge_count = g.edge_count();
  r.triangle_present = count_triangles(g) > 0;
  r.component_count = d.components.size();
  for (const auto& comp : d.components) {
    ++r.span_histogram[comp.span()];
    r.component_edge_total += comp.edge_count();
    r.trivial_count += comp.trivial ? 1 : 0;
    r.linear_count += gap.is_linear(comp.span(), r.n) ? 1 : 0;
    r.gap_violation = r.gap_violation || gap.in_gap(comp.span(), r.n);
  }
  r.largest_span = largest_component_size(d);
  return r;
}

TrialRecord run_trial(std::size_t n, double c, RngSeed seed,
                      const GapWindow& gap, std::size_t trial_index) {
  if (!(c >= 0.0 && c < static_cast<double>(n))) {
    throw InvalidArgument("run_trial needs 0 <= c < n");
  }
  const Graph g = sample_gnp(n, c / static_cast<double>(n), seed);
  return summarize_trial(g, rigid_components(g), c, trial_index, seed, gap);
}

bool dichotomy_check(const TrialRecord& record, const GapWindow& gap) {
  return std::none_of(record.span_histogram.begin(), record.span_histogram.end(),
                      [&](const auto& entry) {
                        return entry.second > 0 && gap.in_gap(entry.first, record.n);
                      });
}

std::optional<double> uniqueness_stat(std::span<const TrialRecord> records) {
  std::size_t with_linear = 0;
  std::size_t exactly_one = 0;
  for (const auto& r : records) {
    if (r.linear_count == 0) continue;
    ++with_linear;
    exactly_one += r.linear_count == 1 ? 1 : 0;
  }
  if (with_linear == 0) return std::nullopt;
  return static_cast<double>(exactly_one) / static_cast<double>(with_linear);
}

namespace {

// Nearest-rank quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

}  // namespace

CellSummary summarize_cell(std::span<const TrialRecord> records) {
  CellSummary s;
  if (records.empty()) return s;
  s.n = records.front().n;
  s.c = records.front().c;
  s.trials = records.size();
  std::vector<double> largest;
  std::size_t tenth = 0, gap = 0, linear = 0, triangle = 0;
  double edges = 0.0;
  for (const auto& r : records) {
    tenth += 10 * r.largest_span >= r.n ? 1 : 0;
    gap += r.gap_violation ? 1 : 0;
    linear += r.linear_count > 0 ? 1 : 0;
    triangle += r.triangle_present ? 1 : 0;
    edges += static_cast<double>(r.edge_count);
    largest.push_back(static_cast<double>(r.largest_span) /
                      static_cast<double>(std::max<std::size_t>(r.n, 1)));
  }
  const auto count = static_cast<double>(records.size());
  s.fraction_largest_at_least_tenth = static_cast<double>(tenth) / count;
  s.fraction_gap_violation = static_cast<double>(gap) / count;
  s.fraction_any_linear = static_cast<double>(linear) / count;
  s.fraction_triangle = static_cast<double>(triangle) / count;
  s.mean_edge_count = edges / count;
  double total = 0.0;
  for (double x : largest) total += x;
  s.mean_largest_fraction = total / count;
  std::sort(largest.begin(), largest.end());
  s.q10_largest_fraction = quantile(largest, 0.1);
  s.median_largest_fraction = quantile(largest, 0.5);
  s.q90_largest_fraction = quantile(largest, 0.9);
  s.uniqueness = uniqueness_stat(records);
  return s;
}

SweepResult run_sweep(const ExperimentConfig& config, unsigned threads,
                      const RecordSink& sink) {
  config.validate();
  std::vector<std::size_t> ns = config.n_values;
  std::vector<double> cs = config.c_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  const std::size_t per_cell = config.trials;
  const std::size_t total = ns.size() * cs.size() * per_cell;
  std::vector<std::optional<TrialRecord>> slots(total);
  auto errors = detail::parallel_for(total, threads, [&](std::size_t i) {
    const std::size_t cell = i / per_cell;
    const std::size_t trial = i % per_cell;
    const std::size_t n = ns[cell / cs.size()];
    const double c = cs[cell % cs.size()];
    slots[i] = run_trial(n, c, trial_seed(config.master_seed, n, c, trial),
                         config.gap, trial);
  });

  SweepResult result;
  result.records.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (!slots[i]) break;  // a later index failed first; stop at the gap
    if (sink) sink(*slots[i]);
    result.records.push_back(std::move(*slots[i]));
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t cell = 0; cell < ns.size() * cs.size(); ++cell) {
    result.cells.push_back(summarize_cell(std::span<const TrialRecord>(
        result.records.data() + cell * per_cell, per_cell)));
  }
  return result;
}

std::vector<EmergencePoint> emergence_scan(std::size_t n,
                                           std::span<const double> c_grid,
                                           std::size_t trials, RngSeed seed,
                                           const GapWindow& gap,
                                           unsigned threads) {
  ExperimentConfig config;
  config.n_values = {n};
  config.c_values.assign(c_grid.begin(), c_grid.end());
  config.trials = trials;
  config.master_seed = seed;
  config.gap = gap;
  const SweepResult sweep = run_sweep(config, threads);
  std::vector<EmergencePoint> out;
  for (const auto& cell : sweep.cells) {
    out.push_back({cell.c, cell.trials, cell.fraction_any_linear});
  }
  return out;
}

std::vector<std::size_t> coupled_largest_spans(std::size_t n,
                                               std::span<const double> c_values,
                                               RngSeed seed) {
  std::vector<std::size_t> spans;
  for (double c : c_values) {
    if (!(c >= 0.0 && c < static_cast<double>(n))) {
      throw InvalidArgument("coupled sample needs 0 <= c < n");
    }
    const Graph g = sample_gnp_coupled(n, c / static_cast<double>(n), seed);
    spans.push_back(largest_component_size(rigid_components(g)));
  }
  return spans;
}

double mean_components_of_span(std::size_t n, double c, std::size_t k,
                               std::size_t trials, RngSeed seed,
                               unsigned threads) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (!(c >= 0.0 && c < static_cast<double>(n))) {
    throw InvalidArgument("mean_components_of_span needs 0 <= c < n");
  }
  std::vector<std::size_t> counts(trials, 0);
  auto errors = detail::parallel_for(trials, threads, [&](std::size_t i) {
    const Graph g = sample_gnp(n, c / static_cast<double>(n),
                               trial_seed(seed, n, c, i));
    for (const auto& comp : rigid_components(g).components) {
      counts[i] += comp.span() == k ? 1 : 0;
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  double total = 0.0;
  for (std::size_t x : counts) total += static_cast<double>(x);
  return total / static_cast<double>(trials);
}

double fixed_set_component_frequency(std::size_t n, double c, std::size_t k,
                                     std::size_t samples, RngSeed seed,
                                     unsigned threads) {
  if (samples == 0) throw InvalidArgument("need at least one sample");
  if (k > n) throw InvalidArgument("fixed set larger than the graph");
  if (!(c >= 0.0 && c < static_cast<double>(n))) {
    throw InvalidArgument("fixed_set_component_frequency needs 0 <= c < n");
  }
  std::vector<Vertex> target(k);
  for (std::size_t i = 0; i < k; ++i) target[i] = static_cast<Vertex>(i);
  std::vector<std::uint8_t> hit(samples, 0);
  auto errors = detail::parallel_for(samples, threads, [&](std::size_t i) {
    const Graph g = sample_gnp(n, c / static_cast<double>(n),
                               trial_seed(seed, n, c, i));
    for (const auto& comp : rigid_components(g).components) {
      if (comp.vertices == target) {
        hit[i] = 1;
        break;
      }
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::size_t hits = 0;
  for (auto h : hit) hits += h;
  return static_cast<double>(hits) / static_cast<double>(samples);
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void write_csv_header(std::ostream& out) {
  out << "n,c,trial,seed,m,triangle,largest_span,n_components,n_trivial,"
         "gap_violation,n_linear\n";
}

void write_csv_row(std::ostream& out, const TrialRecord& r) {
  out << r.n << ',' << format_double(r.c) << ',' << r.trial_index << ','
      << r.seed.value << ',' << r.edge_count << ',' << (r.triangle_present ? 1 : 0)
      << ',' << r.largest_span << ',' << r.component_count << ','
      << r.trivial_count << ',' << (r.gap_violation ? 1 : 0) << ','
      << r.linear_count << '\n';
}

}  // namespace rigidperc
