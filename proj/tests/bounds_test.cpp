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

#include "rigidperc/bounds.hpp"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "rigidperc/errors.hpp"
#include "rigidperc/percolation.hpp"

namespace rigidperc::bounds {
namespace {

// Pr[Bin(N, p) >= x] by forward summation of the mass function in long
// double, starting from (1-p)^N. Only usable when (1-p)^N does not underflow.
long double direct_tail(unsigned trials, long double p, unsigned x) {
  long double term = std::pow(1.0L - p, static_cast<long double>(trials));
  long double below = 0.0L;
  for (unsigned k = 0; k < x; ++k) {
    below += term;
    term *= static_cast<long double>(trials - k) / (k + 1) * p / (1.0L - p);
  }
  long double above = 0.0L;
  for (unsigned k = x; k <= trials; ++k) {
    above += term;
    if (k < trials) term *= static_cast<long double>(trials - k) / (k + 1) * p / (1.0L - p);
  }
  (void)below;
  return above;
}

TEST(ThresholdTest, KnownValue) {
  // Reference value computed to 30 digits with arbitrary precision.
  EXPECT_NEAR(t_threshold({2.0, 5.0}), 0.03186372375543292, 1e-15);
  EXPECT_NEAR(t_threshold({1.25, 4.5}), 6.53111208946593e-6, 1e-18);
  EXPECT_THROW(t_threshold({1.0, 5.0}), HypothesisError);
  EXPECT_THROW(t_threshold({2.0, 2.0}), HypothesisError);
  EXPECT_THROW(t_threshold({2.0, 1.5}), HypothesisError);
}

TEST(ThresholdTest, DecreasesInC) {
  for (double a : {1.1, 1.5, 2.0}) {
    double previous = 1.0;
    for (double c = a + 0.1; c < 20.0; c += 0.1) {
      const double t = t_threshold({a, c});
      EXPECT_GT(t, 0.0);
      EXPECT_LT(t, previous);
      previous = t;
    }
  }
}

TEST(ChernoffTest, KnownValues) {
  // N p = 10, delta = 1: (e/4)^10.
  EXPECT_NEAR(chernoff_upper(20.0, 0.5, 1.0), 0.021006074709707943, 1e-15);
  EXPECT_NEAR(chernoff_upper(20.0, 0.5, 1.0), std::pow(std::exp(1.0) / 4.0, 10.0), 1e-15);
  EXPECT_DOUBLE_EQ(chernoff_upper(20.0, 0.5, 0.0), 1.0);
  EXPECT_THROW(chernoff_upper(20.0, 0.5, -0.1), HypothesisError);
  EXPECT_THROW(chernoff_upper(20.0, 1.5, 1.0), HypothesisError);
  EXPECT_THROW(chernoff_upper(-1.0, 0.5, 1.0), HypothesisError);
}

TEST(ChernoffTest, DominatesExactTail) {
  for (unsigned trials : {5u, 20u, 80u, 300u}) {
    for (double p : {0.02, 0.1, 0.3, 0.5}) {
      for (double delta : {0.05, 0.3, 1.0, 2.5}) {
        const double mean = trials * p;
        const auto x = static_cast<std::uint64_t>(std::ceil((1.0 + delta) * mean));
        if (x > trials) continue;
        EXPECT_LE(exact_binomial_tail(trials, p, x), chernoff_upper(trials, p, delta) * (1 + 1e-12))
            << trials << " " << p << " " << delta;
      }
    }
  }
}

TEST(BinomialTailTest, KnownValues) {
  EXPECT_NEAR(exact_binomial_tail(10, 0.5, 5), 0.623046875, 1e-14);
  EXPECT_NEAR(exact_binomial_tail(200, 0.2, 37), 0.7282627486357334, 1e-12);
  EXPECT_NEAR(exact_binomial_tail(50, 0.2, 15), 0.0607220796319493, 1e-13);
  EXPECT_DOUBLE_EQ(exact_binomial_tail(10, 0.5, 0), 1.0);
  EXPECT_DOUBLE_EQ(exact_binomial_tail(10, 0.0, 1), 0.0);
  EXPECT_DOUBLE_EQ(exact_binomial_tail(10, 1.0, 10), 1.0);
  EXPECT_NEAR(exact_binomial_tail(10, 0.5, 10), std::ldexp(1.0, -10), 1e-18);
  EXPECT_THROW(exact_binomial_tail(10, 0.5, 11), InvalidArgument);
  EXPECT_THROW(exact_binomial_tail(10, -0.1, 1), InvalidArgument);
}

TEST(BinomialTailTest, MatchesDirectSummation) {
  for (unsigned trials : {1u, 7u, 40u, 150u, 600u}) {
    for (double p : {0.001, 0.05, 0.3, 0.5, 0.8}) {
      for (unsigned x = 0; x <= trials; x += 1 + trials / 17) {
        const long double expected = direct_tail(trials, p, x);
        if (expected < 1e-280L) continue;
        const double got = exact_binomial_tail(trials, p, x);
        EXPECT_NEAR(got / static_cast<double>(expected), 1.0, 1e-10)
            << trials << " " << p << " " << x;
      }
    }
  }
}

TEST(BinomialTailTest, LogCoefficient) {
  EXPECT_NEAR(log_binomial_coefficient(10, 5), std::log(252.0), 1e-13);
  EXPECT_DOUBLE_EQ(log_binomial_coefficient(7, 0), 0.0);
  EXPECT_DOUBLE_EQ(log_binomial_coefficient(7, 7), 0.0);
}

TEST(ComponentBoundTest, FactorsMultiply) {
  for (std::uint64_t k : {4u, 10u, 20u}) {
    const double edge = component_edge_factor(200, k, 4.5);
    const double iso = component_isolation_factor(200, k, 4.5);
    EXPECT_NEAR(component_prob_bound(200, k, 4.5), edge * iso, 1e-12 * edge * iso);
    // Isolation factor by direct power.
    const double q = 4.5 / 200;
    const double direct = std::pow(std::pow(1 - q, k) + k * q * std::pow(1 - q, k - 1), 200.0 - k);
    EXPECT_NEAR(iso / direct, 1.0, 1e-10);
    // The edge factor is a binomial tail over floor(k^2/2) pairs.
    EXPECT_NEAR(edge, exact_binomial_tail(k * k / 2, q, 2 * k - 3), 1e-15);
    EXPECT_NEAR(component_edge_factor(200, k, 4.5, EdgeThreshold::kTwoK),
                exact_binomial_tail(k * k / 2, q, 2 * k), 1e-15);
  }
}

TEST(ComponentBoundTest, Validation) {
  EXPECT_THROW(component_prob_bound(200, 3, 4.5), InvalidArgument);
  EXPECT_THROW(component_prob_bound(200, 201, 4.5), InvalidArgument);
  EXPECT_THROW(component_prob_bound(10, 5, 10.0), InvalidArgument);
  EXPECT_THROW(component_prob_bound(10, 5, -1.0), InvalidArgument);
}

TEST(ComponentBoundTest, ExpectedCountIsBinomialTimesProbability) {
  const double direct = std::exp(log_binomial_coefficient(200, 20)) * component_prob_bound(200, 20, 4.5);
  EXPECT_NEAR(expected_components_bound(200, 20, 4.5) / direct, 1.0, 1e-10);
  EXPECT_NEAR(log_expected_components_bound(200, 20, 4.5),
              std::log(expected_components_bound(200, 20, 4.5)), 1e-10);
}

// The bound must dominate the frequency with which a fixed 10-set is a
// rigid component of G(50, 4.5/50).
TEST(ComponentBoundTest, DominatesMonteCarloFrequency) {
  const std::size_t samples = 4000;
  const double freq = fixed_set_component_frequency(50, 4.5, 10, samples, RngSeed{5});
  const double bound = component_prob_bound(50, 10, 4.5);
  const double se = std::sqrt(std::max(freq * (1 - freq), 1e-12) / samples);
  EXPECT_LE(freq, bound + 3 * se) << "freq=" << freq << " bound=" << bound;
}

TEST(RateTest, KnownValues) {
  EXPECT_NEAR(per_vertex_rate(0.1), -0.00743349634031293, 1e-14);
  EXPECT_NEAR(simplified_rate_at_tenth(), -0.00743349634031293, 1e-14);
  EXPECT_NEAR(per_vertex_rate(0.1), -0.0074335, 1e-6);
  EXPECT_THROW(per_vertex_rate(0.0), HypothesisError);
  EXPECT_THROW(per_vertex_rate(1.0), HypothesisError);
}

TEST(RateTest, NegativeOnSmallFractions) {
  for (int i = 1; i <= 1000; ++i) EXPECT_LT(per_vertex_rate(1e-4 * i), 0.0) << i;
}

TEST(RateTest, EpsilonVersionConverges) {
  for (double s : {0.01, 0.05, 0.1, 0.3}) {
    EXPECT_NEAR(per_vertex_rate_eps(s, 1e-8), per_vertex_rate(s), 1e-6) << s;
  }
  // delta = (4 - 4.5 * 0.97) / (0.97 * 4.5) < 0.
  EXPECT_THROW(per_vertex_rate_eps(0.97, 0.5), HypothesisError);
  EXPECT_THROW(per_vertex_rate_eps(0.1, 0.0), HypothesisError);
}

TEST(AppendixTest, EndpointIdentity) {
  const double t = t_threshold({2.0, 5.0});
  EXPECT_NEAR(appendix_log_expr(2.0, 5.0, t), -0.002538242228906351, 1e-14);
  for (double a : {1.1, 1.5, 3.0}) {
    for (double c : {a + 0.5, a + 2.0, 9.0}) {
      const double ts = t_threshold({a, c});
      EXPECT_NEAR(appendix_log_expr(a, c, ts) / (-c * ts * ts / 2), 1.0, 1e-9);
    }
  }
}

// The expression is negative on the whole interval but not monotone: for
// (a, c) = (2, 5) its derivative 4 - 2 ln(4/5) + ln t - 5t changes sign
// near t = 0.0117.
TEST(AppendixTest, NegativeButNotMonotone) {
  const double ts = t_threshold({2.0, 5.0});
  for (double t = 1e-6; t <= ts; t *= 1.01) EXPECT_LT(appendix_log_expr(2.0, 5.0, t), 0.0);
  const double low = appendix_log_expr(2.0, 5.0, 0.005);
  const double turn = appendix_log_expr(2.0, 5.0, 0.0117);
  const double high = appendix_log_expr(2.0, 5.0, 0.02);
  EXPECT_LT(turn, low);
  EXPECT_LT(turn, high);
}

TEST(PrDenseTest, MatchesChernoff) {
  // x = 2a/(ct) = 1 + delta with N = t^2 n^2 / 2 pairs and p = c/n.
  const double n = 1000, t = 0.01, a = 2.0, c = 5.0;
  const double x = 2 * a / (c * t);
  const double expected = chernoff_upper(t * t * n * n / 2, c / n, x - 1);
  EXPECT_NEAR(prdense_bound(n, t, a, c) / expected, 1.0, 1e-12);
  // x = 1 gives the trivial bound.
  EXPECT_NEAR(prdense_bound(1000, 0.8, 2.0, 5.0), 1.0, 1e-13);
  EXPECT_THROW(prdense_bound(1000, 0.9, 2.0, 5.0), HypothesisError);
}

TEST(NamedFormulaTest, EvaluatesAndEchoesInputs) {
  const BoundReport r = evaluate_named("t_threshold", {{"a", 2.0}, {"c", 5.0}});
  EXPECT_EQ(r.formula, "t_threshold");
  ASSERT_EQ(r.inputs.size(), 2u);
  EXPECT_EQ(r.inputs[0].first, "a");
  EXPECT_NEAR(r.value, 0.03186372375543292, 1e-15);
  EXPECT_NEAR(evaluate_named("binomial_tail", {{"N", 10}, {"p", 0.5}, {"x", 5}}).value,
              0.623046875, 1e-14);
  EXPECT_THROW(evaluate_named("nope", {}), InvalidArgument);
  EXPECT_THROW(evaluate_named("t_threshold", {{"a", 2.0}}), InvalidArgument);
  EXPECT_THROW(evaluate_named("t_threshold", {{"a", 2.0}, {"c", 5.0}, {"z", 1}}),
               InvalidArgument);
  EXPECT_THROW(evaluate_named("binomial_tail", {{"N", 10.5}, {"p", 0.5}, {"x", 5}}),
               InvalidArgument);
  for (auto name : formula_names()) EXPECT_FALSE(formula_parameters(name).empty() && name != "simplified_rate_at_tenth") << name;
}

TEST(CertifyTest, AllChecksPass) {
  const CertificationReport report = certify();
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.checks.size(), 8u);
  for (const auto& check : report.checks) {
    EXPECT_TRUE(check.passed()) << check.name << ": " << check.detail;
    EXPECT_GT(check.cases, 0u) << check.name;
  }
}

}  // namespace
}  // namespace rigidperc::bounds
