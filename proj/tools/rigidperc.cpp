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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigidperc/bounds.hpp"
#include "rigidperc/errors.hpp"
#include "rigidperc/graph.hpp"
#include "rigidperc/json_output.hpp"
#include "rigidperc/oracle.hpp"
#include "rigidperc/pebble_game.hpp"
#include "rigidperc/percolation.hpp"
#include "rigidperc/version.hpp"

namespace {

using namespace rigidperc;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kMismatch = 4,
  kCertification = 5,
  kOracleTooLarge = 6,
};

// Thrown for files that cannot be opened; reported as a usage error.
struct IoError : Error {
  using Error::Error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_edge_list(in);
}

// Writes to `path`, or stdout for "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  fn(out);
  if (!out) throw IoError("write failed: " + path);
}

void print_seed(RngSeed seed) { std::cerr << "seed: " << seed.value << "\n"; }

std::string join(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

struct GenArgs {
  std::size_t n = 0;
  std::optional<double> p, c;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  print_seed(RngSeed{a.seed});
  double p = 0.0;
  if (a.p) {
    p = *a.p;
  } else {
    if (a.n == 0) throw InvalidArgument("--c needs n > 0");
    p = *a.c / static_cast<double>(a.n);
  }
  const Graph g = sample_gnp(a.n, p, RngSeed{a.seed});
  with_output(a.out, [&](std::ostream& os) { write_edge_list(g, os); });
  return kOk;
}

int run_decompose(const std::string& in, const std::string& out) {
  const Graph g = read_graph(in);
  RigidDecomposition d;
  if (g.vertex_count() < 2) {
    std::cerr << "warning: graph has fewer than 2 vertices; decomposition is empty\n";
    d.vertex_count = g.vertex_count();
  } else {
    d = rigid_components(g);
  }
  with_output(out, [&](std::ostream& os) { os << json::decomposition(d); });
  return kOk;
}

int run_verify(const std::string& in) {
  const Graph g = read_graph(in);
  if (g.vertex_count() > oracle::kMaxRigidityVertices) {
    std::cerr << "error: graph too large for oracle (n = " << g.vertex_count() << ", limit "
              << oracle::kMaxRigidityVertices << ")\n";
    return kOracleTooLarge;
  }
  const oracle::Verdict truth = oracle::brute_components(g);
  std::vector<std::vector<Vertex>> engine;
  bool engine_sparse = is_sparse_23(g);
  bool engine_rigid = false;
  if (g.vertex_count() >= 2) {
    for (const auto& c : rigid_components(g).components) engine.push_back(c.vertices);
    engine_rigid = is_rigid(g);
  }
  const auto show = [](const char* who, bool sparse, bool rigid,
                       const std::vector<std::vector<Vertex>>& comps) {
    std::cout << who << ": sparse=" << sparse << " rigid=" << rigid << " components=";
    for (const auto& c : comps) std::cout << join(c);
    std::cout << "\n";
  };
  show("engine", engine_sparse, engine_rigid, engine);
  show("oracle", truth.is_sparse, truth.is_rigid, truth.components);
  const bool match = engine == truth.components && engine_sparse == truth.is_sparse &&
                     engine_rigid == truth.is_rigid;
  std::cout << (match ? "match" : "MISMATCH") << "\n";
  return match ? kOk : kMismatch;
}

int run_bounds(const std::string& formula, bool certify_all,
               const std::map<std::string, std::optional<double>>& flags) {
  if (certify_all) {
    const bounds::CertificationReport report = bounds::certify();
    std::cout << json::certification(report);
    return report.passed() ? kOk : kCertification;
  }
  std::map<std::string, double, std::less<>> params;
  for (const auto& [name, value] : flags) {
    if (value) params.emplace(name, *value);
  }
  std::cout << json::bound_report(bounds::evaluate_named(formula, params));
  return kOk;
}

struct SweepArgs {
  std::string config_path;
  std::vector<std::size_t> n;
  std::vector<double> c;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t gap_lower = 4;
  double gap_upper_fraction = 0.01;
  unsigned threads = 0;
  std::string csv = "-";
  std::string summary;
};

int run_sweep_command(const SweepArgs& a) {
  ExperimentConfig config;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw IoError("cannot open " + a.config_path);
    config = parse_experiment_config(in);
  } else {
    config.n_values = a.n;
    config.c_values = a.c;
    config.trials = a.trials;
    config.master_seed = RngSeed{a.seed};
    config.gap = GapWindow{a.gap_lower, a.gap_upper_fraction};
  }
  config.validate();
  print_seed(config.master_seed);
  SweepResult result;
  with_output(a.csv, [&](std::ostream& os) {
    write_csv_header(os);
    result = run_sweep(config, a.threads, [&](const TrialRecord& r) { write_csv_row(os, r); });
  });
  if (!a.summary.empty()) {
    with_output(a.summary,
                [&](std::ostream& os) { os << json::sweep_summary(config, result.cells); });
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigid components and rigidity percolation in G(n, c/n)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample G(n, p) and write an edge list");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  auto* p_opt = gen_cmd->add_option("--p", gen.p, "Edge probability");
  auto* c_opt = gen_cmd->add_option("--c", gen.c, "Mean-degree parameter, p = c/n");
  p_opt->excludes(c_opt);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  std::string dec_in, dec_out = "-";
  auto* dec_cmd = app.add_subcommand("decompose", "Rigid components of an edge list as JSON");
  dec_cmd->add_option("input", dec_in, "Edge-list file, or - for stdin")->required();
  dec_cmd->add_option("--out", dec_out, "Output path (default stdout)");

  std::string ver_in;
  auto* ver_cmd = app.add_subcommand("verify", "Compare the pebble game with the brute-force oracle");
  ver_cmd->add_option("input", ver_in, "Edge-list file, or - for stdin")->required();

  std::string formula;
  bool certify_all = false;
  std::map<std::string, std::optional<double>> params;
  auto* bnd_cmd = app.add_subcommand("bounds", "Evaluate or certify the probability bounds");
  auto* formula_opt = bnd_cmd->add_option("--formula", formula, "Formula name");
  auto* certify_opt = bnd_cmd->add_flag("--certify", certify_all, "Run the full check grid");
  formula_opt->excludes(certify_opt);
  bnd_cmd->require_option(1, 0);
  for (const char* name : {"N", "p", "delta", "x", "n", "k", "a", "c", "t", "s", "epsilon"}) {
    bnd_cmd->add_option(std::string("--") + name, params[name]);
  }

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Run a grid of percolation trials");
  auto* cfg_opt = sw_cmd->add_option("--config", sw.config_path, "Config file (key = value)");
  auto* n_opt = sw_cmd->add_option("--n", sw.n, "Vertex counts")->delimiter(',');
  auto* sc_opt = sw_cmd->add_option("--c", sw.c, "Values of c")->delimiter(',');
  auto* tr_opt = sw_cmd->add_option("--trials", sw.trials, "Trials per cell");
  auto* seed_opt = sw_cmd->add_option("--seed", sw.seed, "Master seed");
  auto* gl_opt = sw_cmd->add_option("--gap-lower", sw.gap_lower, "Smallest span in the gap");
  auto* gu_opt = sw_cmd->add_option("--gap-upper-fraction", sw.gap_upper_fraction,
                                    "Spans >= this fraction of n count as linear");
  for (auto* o : {n_opt, sc_opt, tr_opt, seed_opt, gl_opt, gu_opt}) cfg_opt->excludes(o);
  sw_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");
  sw_cmd->add_option("--csv", sw.csv, "CSV output path (default stdout)");
  sw_cmd->add_option("--summary", sw.summary, "Per-cell summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::cerr << "rigidperc " << kVersion << "\n";
  try {
    if (*gen_cmd) {
      if (!gen.p && !gen.c) throw InvalidArgument("gen needs exactly one of --p or --c");
      return run_gen(gen);
    }
    if (*dec_cmd) return run_decompose(dec_in, dec_out);
    if (*ver_cmd) return run_verify(ver_in);
    if (*bnd_cmd) return run_bounds(formula, certify_all, params);
    if (*sw_cmd) return run_sweep_command(sw);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const OracleLimitError& e) {
    std::cerr << "error: too large for oracle: " << e.what() << "\n";
    return kOracleTooLarge;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
