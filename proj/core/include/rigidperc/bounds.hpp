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

#ifndef RIGIDPERC_BOUNDS_HPP_
#define RIGIDPERC_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Closed-form probability bounds for dense and rigid subgraphs of
// G(n, c/n), with exact binomial tails to check them against.
namespace rigidperc::bounds {

// Density parameters: a > 1 is the edge-to-vertex ratio of a "bad"
// subgraph, c > a the mean-degree parameter.
struct DensityParams {
  double a = 0.0;
  double c = 0.0;
};

// Throws HypothesisError unless a > 1 and c > a.
void validate(const DensityParams& params);

// t(a, c) = (2a/c)^(a/(a-1)) * exp(-(a+1)/(a-1)). G(n, c/n) almost surely
// has no subgraph on at most t(a,c) n vertices with edge ratio >= a.
double t_threshold(const DensityParams& params);

// (e^delta / (1+delta)^(1+delta))^(N p), an upper bound on
// Pr[Bin(N, p) >= (1 + delta) N p]. N may be fractional.
// Throws HypothesisError if delta < 0, N < 0 or p outside [0, 1].
double chernoff_upper(double trials, double p, double delta);
double log_chernoff_upper(double trials, double p, double delta);

// Pr[Bin(N, p) >= x], summed in log space. Throws InvalidArgument if
// x > N or p outside [0, 1].
double exact_binomial_tail(std::uint64_t trials, double p, std::uint64_t x);
double log_binomial_tail(std::uint64_t trials, double p, std::uint64_t x);

double log_binomial_coefficient(std::uint64_t n, std::uint64_t k);

// Edge threshold for a k-vertex component: 2k - 3 is exact; 2k is the
// rounded form used once lower-order terms are absorbed.
enum class EdgeThreshold { kTwoKMinusThree, kTwoK };

// Bound on the probability that a fixed set of k vertices spans a rigid
// component of G(n, c/n):
//   Pr[Bin(floor(k^2/2), c/n) >= 2k-3] *
//   ((1-c/n)^k + k (c/n) (1-c/n)^(k-1))^(n-k)
// The first factor needs enough internal edges, the second that no outside
// vertex has two neighbors inside. Requires 4 <= k <= n and 0 <= c < n.
double component_prob_bound(std::uint64_t n, std::uint64_t k, double c,
                            EdgeThreshold threshold = EdgeThreshold::kTwoKMinusThree);
double log_component_prob_bound(std::uint64_t n, std::uint64_t k, double c,
                                EdgeThreshold threshold = EdgeThreshold::kTwoKMinusThree);

// The two factors of component_prob_bound, separately.
double component_edge_factor(std::uint64_t n, std::uint64_t k, double c,
                             EdgeThreshold threshold = EdgeThreshold::kTwoKMinusThree);
double component_isolation_factor(std::uint64_t n, std::uint64_t k, double c);

// Markov bound on E[X_k], the expected number of k-vertex components:
// C(n, k) times component_prob_bound. Evaluated in log space.
double expected_components_bound(std::uint64_t n, std::uint64_t k, double c,
                                 EdgeThreshold threshold = EdgeThreshold::kTwoKMinusThree);
double log_expected_components_bound(std::uint64_t n, std::uint64_t k, double c,
                                     EdgeThreshold threshold = EdgeThreshold::kTwoKMinusThree);

// Per-vertex exponential rate, (1/n) log, of the bound on the expected number
// of components of size s n in the limit c -> 4+:
//   s + 2s^2 [(1/s - 1) - (1/s) ln(1/s)] + s ln(1/s) + (1-s)(ln(1+4s) - 4s).
// Negative means the bound decays exponentially in n. Requires 0 < s < 1.
double per_vertex_rate(double s);

// The same rate before the limit, at c = 4 + epsilon, with the Chernoff
// deviation delta = (4 - (4+eps)s) / (s (4+eps)). Throws HypothesisError
// unless 0 < s < 1, epsilon > 0 and delta > 0.
double per_vertex_rate_eps(double s, double epsilon);

// -(1/10) ln 2 - ln 5 + (9/10) ln 7 - 2/25: the closed form of
// per_vertex_rate(1/10).
double simplified_rate_at_tenth();

// t (a + 1 - c t / 2 - a ln(2a/c) + (a-1) ln t): per-vertex log of the
// bound on the expected number of bad subgraphs on t n vertices. At
// t = t(a, c) it equals -c t^2 / 2.
double appendix_log_expr(double a, double c, double t);

// Chernoff bound that a fixed set of t n vertices spans at least a t n
// edges, written with x = 2a/(ct):
//   (e^(x-1) x^(-x))^(c n t^2 / 2)
// Requires x >= 1 (delta = x - 1 >= 0).
double prdense_bound(double n, double t, double a, double c);

// A formula evaluation with its inputs echoed, as emitted by the CLI.
struct BoundReport {
  std::string formula;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
};

// Names accepted by evaluate_named: t_threshold, chernoff, binomial_tail,
// component_prob, component_prob_2k, expected_components,
// expected_components_2k, per_vertex_rate, per_vertex_rate_eps,
// simplified_rate_at_tenth, appendix_log_expr, prdense.
std::vector<std::string_view> formula_names();

// Parameter names each formula reads, in report order.
std::vector<std::string_view> formula_parameters(std::string_view formula);

// Throws InvalidArgument for unknown formulas or missing parameters and the
// formula's own errors otherwise.
BoundReport evaluate_named(std::string_view formula,
                           const std::map<std::string, double, std::less<>>& params);

struct CertificationCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  // Largest deviation observed (relative error for identities, amount of
  // violation for inequalities); 0 when nothing deviates.
  double worst = 0.0;
  std::string detail;

  bool passed() const noexcept { return violations == 0; }
};

struct CertificationReport {
  std::vector<CertificationCheck> checks;

  bool passed() const noexcept;
};

// Runs every identity, domination and sign check over its parameter grid.
CertificationReport certify();

}  // namespace rigidperc::bounds

#endif  // RIGIDPERC_BOUNDS_HPP_
