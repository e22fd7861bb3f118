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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "rigidperc/errors.hpp"

namespace rigidperc::bounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw HypothesisError(std::string(what) + ": p must lie in [0, 1]");
  }
}

void require_component_args(std::uint64_t n, std::uint64_t k, double c) {
  if (k < 4) {
    throw HypothesisError("component bound needs k >= 4 (got k = " +
                          std::to_string(k) + ")");
  }
  if (k > n) throw HypothesisError("component bound needs k <= n");
  if (!(c >= 0.0 && c < static_cast<double>(n))) {
    throw HypothesisError("component bound needs 0 <= c < n");
  }
}

std::uint64_t edge_threshold(std::uint64_t k, EdgeThreshold threshold) {
  return threshold == EdgeThreshold::kTwoK ? 2 * k : 2 * k - 3;
}

}  // namespace

void validate(const DensityParams& params) {
  if (!(params.a > 1.0)) throw HypothesisError("density bound needs a > 1");
  if (!(params.c > params.a)) throw HypothesisError("density bound needs c > a");
}

double t_threshold(const DensityParams& params) {
  validate(params);
  const long double a = params.a;
  const long double c = params.c;
  return static_cast<double>(std::pow(2.0L * a / c, a / (a - 1.0L)) *
                             std::exp(-(a + 1.0L) / (a - 1.0L)));
}

double log_chernoff_upper(double trials, double p, double delta) {
  if (!(delta >= 0.0)) throw HypothesisError("Chernoff bound needs delta >= 0");
  if (!(trials >= 0.0)) throw HypothesisError("Chernoff bound needs N >= 0");
  require_probability(p, "chernoff_upper");
  const long double mean = static_cast<long double>(trials) * p;
  const long double d = delta;
  return static_cast<double>(mean * (d - (1.0L + d) * std::log1p(d)));
}

double chernoff_upper(double trials, double p, double delta) {
  return std::exp(log_chernoff_upper(trials, p, delta));
}

double log_binomial_coefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return kNegInf;
  const auto ln = static_cast<long double>(n);
  const auto lk = static_cast<long double>(k);
  return static_cast<double>(std::lgamma(ln + 1.0L) - std::lgamma(lk + 1.0L) -
                             std::lgamma(ln - lk + 1.0L));
}

double log_binomial_tail(std::uint64_t trials, double p, std::uint64_t x) {
  require_probability(p, "exact_binomial_tail");
  if (x > trials) {
    throw InvalidArgument("exact_binomial_tail needs x <= N");
  }
  if (x == 0) return 0.0;
  if (p == 0.0) return kNegInf;
  if (p == 1.0) return 0.0;

  // Sum pmf(j) / pmf(peak) for j in [x, N] by term ratios, where peak is the
  // largest term in that range.
  const long double lp = p;
  const long double ratio_up = lp / (1.0L - lp);
  const auto mode = static_cast<std::uint64_t>(
      std::floor(static_cast<long double>(trials + 1) * lp));
  const std::uint64_t peak = std::clamp(mode, x, trials);
  const long double log_peak =
      static_cast<long double>(log_binomial_coefficient(trials, peak)) +
      static_cast<long double>(peak) * std::log(lp) +
      static_cast<long double>(trials - peak) * std::log1p(-lp);

  constexpr long double kNegligible = 1e-30L;
  long double sum = 1.0L;
  long double term = 1.0L;
  for (std::uint64_t j = peak; j < trials; ++j) {
    term *= static_cast<long double>(trials - j) /
            static_cast<long double>(j + 1) * ratio_up;
    sum += term;
    if (term < kNegligible * sum) break;
  }
  term = 1.0L;
  for (std::uint64_t j = peak; j > x; --j) {
    term *= static_cast<long double>(j) /
            static_cast<long double>(trials - j + 1) / ratio_up;
    sum += term;
    if (term < kNegligible * sum) break;
  }
  return static_cast<double>(std::min(0.0L, log_peak + std::log(sum)));
}

double exact_binomial_tail(std::uint64_t trials, double p, std::uint64_t x) {
  return std::exp(log_binomial_tail(trials, p, x));
}

double log_component_edge_factor(std::uint64_t n, std::uint64_t k, double c,
                                 EdgeThreshold threshold) {
  require_component_args(n, k, c);
  const std::uint64_t trials = k * k / 2;
  const std::uint64_t need = edge_threshold(k, threshold);
  if (need > trials) return kNegInf;
  return log_binomial_tail(trials, c / static_cast<double>(n), need);
}

double component_edge_factor(std::uint64_t n, std::uint64_t k, double c,
                             EdgeThreshold threshold) {
  return std::exp(log_component_edge_factor(n, k, c, threshold));
}

namespace {

double log_isolation_factor(std::uint64_t n, std::uint64_t k, double c) {
  require_component_args(n, k, c);
  if (n == k) return 0.0;
  const long double p = c / static_cast<long double>(n);
  const auto kk = static_cast<long double>(k);
  // (1-p)^k + k p (1-p)^(k-1) = (1-p)^(k-1) (1 + (k-1) p)
  const long double log_base =
      (kk - 1.0L) * std::log1p(-p) + std::log1p((kk - 1.0L) * p);
  return static_cast<double>(static_cast<long double>(n - k) * log_base);
}

}  // namespace

double component_isolation_factor(std::uint64_t n, std::uint64_t k, double c) {
  return std::exp(log_isolation_factor(n, k, c));
}

double log_component_prob_bound(std::uint64_t n, std::uint64_t k, double c,
                                EdgeThreshold threshold) {
  return log_component_edge_factor(n, k, c, threshold) +
         log_isolation_factor(n, k, c);
}

double component_prob_bound(std::uint64_t n, std::uint64_t k, double c,
                            EdgeThreshold threshold) {
  return std::exp(log_component_prob_bound(n, k, c, threshold));
}

double log_expected_components_bound(std::uint64_t n, std::uint64_t k,
                                     double c, EdgeThreshold threshold) {
  const double log_bound = log_component_prob_bound(n, k, c, threshold);
  return log_binomial_coefficient(n, k) + log_bound;
}

double expected_components_bound(std::uint64_t n, std::uint64_t k, double c,
                                 EdgeThreshold threshold) {
  return std::exp(log_expected_components_bound(n, k, c, threshold));
}

double per_vertex_rate(double s) {
  if (!(s > 0.0 && s < 1.0)) throw HypothesisError("rate needs 0 < s < 1");
  const long double x = s;
  const long double inv_log = -std::log(x);  // ln(1/s)
  const long double value =
      x + 2.0L * x * x * ((1.0L / x - 1.0L) - inv_log / x) + x * inv_log +
      (1.0L - x) * (std::log1p(4.0L * x) - 4.0L * x);
  return static_cast<double>(value);
}

double per_vertex_rate_eps(double s, double epsilon) {
  if (!(s > 0.0 && s < 1.0)) throw HypothesisError("rate needs 0 < s < 1");
  if (!(epsilon > 0.0)) throw HypothesisError("rate needs epsilon > 0");
  const long double x = s;
  const long double c = 4.0L + epsilon;
  const long double delta = (4.0L - c * x) / (x * c);
  if (!(delta > 0.0L)) {
    throw HypothesisError("Chernoff deviation must be positive: s < 4/(4+eps)");
  }
  const long double choose = x * (1.0L - std::log(x));
  const long double chernoff =
      0.5L * x * x * c * (delta - (1.0L + delta) * std::log1p(delta));
  const long double isolation = (1.0L - x) * (std::log1p(c * x) - c * x);
  return static_cast<double>(choose + chernoff + isolation);
}

double simplified_rate_at_tenth() {
  return static_cast<double>(-0.1L * std::log(2.0L) - std::log(5.0L) +
                             0.9L * std::log(7.0L) - 2.0L / 25.0L);
}

double appendix_log_expr(double a, double c, double t) {
  validate({a, c});
  if (!(t > 0.0)) throw HypothesisError("log expression needs t > 0");
  // a + 1 - a ln(2a/c) + (a-1) ln t = (a-1) ln(t / t(a,c)). Written this way
  // the O(1) terms do not cancel, which matters because t(a,c) can be as
  // small as 1e-17 and the whole bracket is then of order c t / 2.
  const long double la = a;
  const long double lt = t;
  const long double ratio = lt / static_cast<long double>(t_threshold({a, c}));
  return static_cast<double>(lt * ((la - 1.0L) * std::log(ratio) - c * lt / 2.0L));
}

namespace {

long double log_prdense(double n, double t, double a, double c) {
  if (!(n > 0.0 && t > 0.0 && a > 0.0 && c > 0.0)) {
    throw HypothesisError("prdense bound needs positive n, t, a, c");
  }
  const long double x = 2.0L * a / (static_cast<long double>(c) * t);
  // x == 1 exactly at t = 2a/c; absorb rounding there.
  if (x < 1.0L - 64 * std::numeric_limits<double>::epsilon()) {
    throw HypothesisError("prdense bound needs 2a/(ct) >= 1 (delta >= 0)");
  }
  const long double xc = std::max(x, 1.0L);
  const long double exponent = 0.5L * c * n * static_cast<long double>(t) * t;
  return exponent * ((xc - 1.0L) - xc * std::log(xc));
}

}  // namespace

double prdense_bound(double n, double t, double a, double c) {
  return static_cast<double>(std::exp(log_prdense(n, t, a, c)));
}

namespace {

struct FormulaSpec {
  std::string_view name;
  std::vector<std::string_view> parameters;
  std::function<double(const std::vector<double>&)> evaluate;
};

std::uint64_t as_count(double value, std::string_view name) {
  if (!(value >= 0.0) || value != std::floor(value) || value > 9.0e15) {
    throw InvalidArgument("parameter " + std::string(name) +
                          " must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(value);
}

const std::vector<FormulaSpec>& registry() {
  static const std::vector<FormulaSpec> specs = {
      {"t_threshold", {"a", "c"},
       [](const auto& v) { return t_threshold({v[0], v[1]}); }},
      {"chernoff", {"N", "p", "delta"},
       [](const auto& v) { return chernoff_upper(v[0], v[1], v[2]); }},
      {"binomial_tail", {"N", "p", "x"},
       [](const auto& v) {
         return exact_binomial_tail(as_count(v[0], "N"), v[1],
                                    as_count(v[2], "x"));
       }},
      {"component_prob", {"n", "k", "c"},
       [](const auto& v) {
         return component_prob_bound(as_count(v[0], "n"), as_count(v[1], "k"),
                                     v[2]);
       }},
      {"component_prob_2k", {"n", "k", "c"},
       [](const auto& v) {
         return component_prob_bound(as_count(v[0], "n"), as_count(v[1], "k"),
                                     v[2], EdgeThreshold::kTwoK);
       }},
      {"expected_components", {"n", "k", "c"},
       [](const auto& v) {
         return expected_components_bound(as_count(v[0], "n"),
                                          as_count(v[1], "k"), v[2]);
       }},
      {"expected_components_2k", {"n", "k", "c"},
       [](const auto& v) {
         return expected_components_bound(as_count(v[0], "n"),
                                          as_count(v[1], "k"), v[2],
                                          EdgeThreshold::kTwoK);
       }},
      {"per_vertex_rate", {"s"},
       [](const auto& v) { return per_vertex_rate(v[0]); }},
      {"per_vertex_rate_eps", {"s", "epsilon"},
       [](const auto& v) { return per_vertex_rate_eps(v[0], v[1]); }},
      {"simplified_rate_at_tenth", {},
       [](const auto&) { return simplified_rate_at_tenth(); }},
      {"appendix_log_expr", {"a", "c", "t"},
       [](const auto& v) { return appendix_log_expr(v[0], v[1], v[2]); }},
      {"prdense", {"n", "t", "a", "c"},
       [](const auto& v) { return prdense_bound(v[0], v[1], v[2], v[3]); }},
  };
  return specs;
}

const FormulaSpec& find_formula(std::string_view name) {
  for (const auto& spec : registry()) {
    if (spec.name == name) return spec;
  }
  throw InvalidArgument("unknown formula \"" + std::string(name) + "\"");
}

}  // namespace

std::vector<std::string_view> formula_names() {
  std::vector<std::string_view> names;
  for (const auto& spec : registry()) names.push_back(spec.name);
  return names;
}

std::vector<std::string_view> formula_parameters(std::string_view formula) {
  return find_formula(formula).parameters;
}

BoundReport evaluate_named(
    std::string_view formula,
    const std::map<std::string, double, std::less<>>& params) {
  const FormulaSpec& spec = find_formula(formula);
  BoundReport report;
  report.formula = std::string(spec.name);
  std::vector<double> values;
  for (std::string_view p : spec.parameters) {
    auto it = params.find(p);
    if (it == params.end()) {
      throw InvalidArgument("formula " + report.formula +
                            " needs parameter " + std::string(p));
    }
    values.push_back(it->second);
    report.inputs.emplace_back(std::string(p), it->second);
  }
  for (const auto& [key, value] : params) {
    if (std::find(spec.parameters.begin(), spec.parameters.end(), key) ==
        spec.parameters.end()) {
      throw InvalidArgument("formula " + report.formula +
                            " does not take parameter " + key);
    }
  }
  report.value = spec.evaluate(values);
  return report;
}

bool CertificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificationCheck& c) { return c.passed(); });
}

namespace {

double relative_error(double got, double want) {
  const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
  return std::abs(got - want) / scale;
}

// Grid of c values {a + 0.5, a + 1.0, ...} up to 10.
std::vector<double> c_grid(double a) {
  std::vector<double> out;
  for (int i = 1; a + 0.5 * i <= 10.0 + 1e-12; ++i) out.push_back(a + 0.5 * i);
  return out;
}

const std::vector<double> kDensityRatios = {1.1, 1.25, 1.5, 2.0, 3.0};

CertificationCheck named_check(std::string name) {
  CertificationCheck check;
  check.name = std::move(name);
  return check;
}

void record(CertificationCheck& check, bool ok, double deviation,
            const std::string& where) {
  ++check.cases;
  if (!ok) {
    if (check.violations == 0) check.detail = where;
    ++check.violations;
  }
  check.worst = std::max(check.worst, deviation);
}

CertificationCheck check_chernoff_domination() {
  CertificationCheck check = named_check("chernoff_dominates_exact_tail");
  for (std::uint64_t n : {10, 20, 50, 100, 200, 500}) {
    for (double p : {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5}) {
      for (double delta : {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0}) {
        const double mean = static_cast<double>(n) * p;
        const auto x = static_cast<std::uint64_t>(std::ceil((1.0 + delta) * mean));
        const double tail = x > n ? 0.0 : exact_binomial_tail(n, p, x);
        const double bound = chernoff_upper(static_cast<double>(n), p, delta);
        std::ostringstream where;
        where << "N=" << n << " p=" << p << " delta=" << delta;
        record(check, bound >= tail, std::max(0.0, tail - bound), where.str());
      }
      const double at_zero = chernoff_upper(static_cast<double>(n), p, 0.0);
      std::ostringstream where;
      where << "N=" << n << " p=" << p << " delta=0";
      record(check, at_zero == 1.0, std::abs(at_zero - 1.0), where.str());
    }
  }
  return check;
}

CertificationCheck check_appendix_identity() {
  CertificationCheck check = named_check("appendix_identity_at_threshold");
  for (double a : kDensityRatios) {
    for (double c : c_grid(a)) {
      const double t = t_threshold({a, c});
      const double lhs = appendix_log_expr(a, c, t);
      const double rhs = -c * t * t / 2.0;
      const double err = relative_error(lhs, rhs);
      std::ostringstream where;
      where << "a=" << a << " c=" << c;
      record(check, err <= 1e-9, err, where.str());
    }
  }
  return check;
}

CertificationCheck check_appendix_negative() {
  CertificationCheck check = named_check("appendix_expr_negative_below_threshold");
  for (double a : kDensityRatios) {
    for (double c : c_grid(a)) {
      const double top = t_threshold({a, c});
      const double bottom = std::min(1e-6, top);
      for (int i = 0; i <= 200; ++i) {
        const double t = bottom * std::pow(top / bottom, i / 200.0);
        const double f = appendix_log_expr(a, c, t);
        std::ostringstream where;
        where << "a=" << a << " c=" << c << " t=" << t;
        record(check, f < 0.0, std::max(0.0, f), where.str());
      }
    }
  }
  return check;
}

CertificationCheck check_t_threshold() {
  CertificationCheck check = named_check("t_threshold_in_unit_interval_and_decreasing");
  for (double a : kDensityRatios) {
    double previous = 1.0;
    for (double c : c_grid(a)) {
      const double t = t_threshold({a, c});
      std::ostringstream where;
      where << "a=" << a << " c=" << c;
      record(check, t > 0.0 && t < 1.0 && t < previous, 0.0, where.str());
      previous = t;
    }
  }
  return check;
}

CertificationCheck check_simplification() {
  CertificationCheck check = named_check("rate_at_tenth_simplifies");
  const double rate = per_vertex_rate(0.1);
  const double closed = simplified_rate_at_tenth();
  const double diff = std::abs(rate - closed);
  record(check, diff <= 1e-10, diff, "per_vertex_rate(0.1) vs closed form");
  const double off = std::abs(closed - (-0.0074335));
  record(check, off <= 1e-6, off, "closed form vs -0.0074335");
  return check;
}

CertificationCheck check_rate_negative() {
  CertificationCheck check = named_check("rate_negative_on_(0,0.1]");
  for (int i = 1; i <= 1000; ++i) {
    const double s = 1e-4 * i;
    const double r = per_vertex_rate(s);
    record(check, r < 0.0, std::max(0.0, r), "s=" + std::to_string(s));
  }
  return check;
}

CertificationCheck check_rate_limit() {
  CertificationCheck check = named_check("rate_eps_limit");
  for (double s : {0.02, 0.05, 0.1, 0.2, 0.5}) {
    const double diff = std::abs(per_vertex_rate_eps(s, 1e-8) - per_vertex_rate(s));
    record(check, diff <= 1e-6, diff, "s=" + std::to_string(s));
  }
  return check;
}

CertificationCheck check_prdense_consistency() {
  CertificationCheck check = named_check("prdense_equals_chernoff_substitution");
  for (double a : kDensityRatios) {
    for (double c : c_grid(a)) {
      for (double n : {100.0, 1000.0, 10000.0}) {
        for (double frac : {0.05, 0.2, 0.5, 0.9}) {
          const double t = frac * 2.0 * a / c;  // keeps delta > 0
          const double direct = prdense_bound(n, t, a, c);
          const double delta = 2.0 * a / (c * t) - 1.0;
          const double via = chernoff_upper(0.5 * (t * n) * (t * n), c / n, delta);
          // Compare logarithms once either value leaves the normal range.
          const double err =
              direct >= 1e-300 && via >= 1e-300
                  ? relative_error(direct, via)
                  : relative_error(
                        static_cast<double>(log_prdense(n, t, a, c)),
                        log_chernoff_upper(0.5 * (t * n) * (t * n), c / n, delta));
          std::ostringstream where;
          where << "a=" << a << " c=" << c << " n=" << n << " t=" << t;
          record(check, err <= 1e-12, err, where.str());
        }
      }
    }
  }
  return check;
}

CertificationCheck check_expected_components_paths() {
  CertificationCheck check = named_check("expected_components_log_vs_direct");
  for (std::uint64_t n : {20, 50, 100, 200}) {
    for (std::uint64_t k : {4, 10, 20}) {
      if (k > n) continue;
      for (double c : {1.0, 3.0, 4.5, 6.0}) {
        // Direct route: plain products and sums in extended precision.
        const long double p = c / static_cast<long double>(n);
        long double choose = 1.0L;
        for (std::uint64_t i = 0; i < k; ++i) {
          choose = choose * static_cast<long double>(n - i) /
                   static_cast<long double>(i + 1);
        }
        const std::uint64_t trials = k * k / 2;
        long double tail = 0.0L;
        long double coef = 1.0L;  // C(trials, j)
        for (std::uint64_t j = 0; j <= trials; ++j) {
          if (j > 0) {
            coef = coef * static_cast<long double>(trials - j + 1) /
                   static_cast<long double>(j);
          }
          if (j >= 2 * k - 3) {
            tail += coef * std::pow(p, static_cast<long double>(j)) *
                    std::pow(1.0L - p, static_cast<long double>(trials - j));
          }
        }
        const long double base =
            std::pow(1.0L - p, static_cast<long double>(k)) +
            static_cast<long double>(k) * p *
                std::pow(1.0L - p, static_cast<long double>(k - 1));
        const long double direct =
            choose * tail * std::pow(base, static_cast<long double>(n - k));
        const double logged = expected_components_bound(n, k, c);
        const double err = relative_error(logged, static_cast<double>(direct));
        std::ostringstream where;
        where << "n=" << n << " k=" << k << " c=" << c;
        record(check, err <= 1e-9, err, where.str());
      }
    }
  }
  return check;
}

CertificationCheck check_probability_ranges() {
  CertificationCheck check = named_check("probability_bounds_in_unit_interval");
  for (std::uint64_t n : {20, 50, 200, 1000}) {
    for (std::uint64_t k : {4, 5, 10, 20}) {
      if (k > n) continue;
      for (double c : {0.5, 1.0, 4.0, 4.5, 8.0}) {
        for (auto th : {EdgeThreshold::kTwoKMinusThree, EdgeThreshold::kTwoK}) {
          const double v = component_prob_bound(n, k, c, th);
          const double e1 = component_edge_factor(n, k, c, th);
          const double e2 = component_isolation_factor(n, k, c);
          std::ostringstream where;
          where << "n=" << n << " k=" << k << " c=" << c;
          const bool ok = v >= 0.0 && v <= 1.0 && e1 >= 0.0 && e1 <= 1.0 &&
                          e2 >= 0.0 && e2 <= 1.0;
          record(check, ok, 0.0, where.str());
        }
      }
    }
  }
  for (double a : kDensityRatios) {
    for (double c : c_grid(a)) {
      const double t = 0.5 * t_threshold({a, c});
      const double v = prdense_bound(1000.0, t, a, c);
      record(check, v >= 0.0 && v <= 1.0, 0.0, "prdense");
    }
  }
  return check;
}

}  // namespace

CertificationReport certify() {
  CertificationReport report;
  report.checks.push_back(check_chernoff_domination());
  report.checks.push_back(check_appendix_identity());
  report.checks.push_back(check_appendix_negative());
  report.checks.push_back(check_t_threshold());
  report.checks.push_back(check_simplification());
  report.checks.push_back(check_rate_negative());
  report.checks.push_back(check_rate_limit());
  report.checks.push_back(check_prdense_consistency());
  report.checks.push_back(check_expected_components_paths());
  report.checks.push_back(check_probability_ranges());
  return report;
}

}  // namespace rigidperc::bounds
