// Copyright 2026 The Juror Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JUROR_EQUILIBRIUM_HPP_
#define JUROR_EQUILIBRIUM_HPP_

// Best responses, equilibrium verification and the structural checks on
// payment functions (simple-equilibrium condition, monotonicity).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "juror/distribution.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"
#include "juror/utility.hpp"

namespace juror {

// Law of the number of T-votes cast by everyone except agent i.
inline CountDistribution others_vote_pmf(const StrategyProfile& profile, std::size_t i) {
  if (i >= profile.size()) throw std::out_of_range("agent index out of range");
  std::vector<double> probabilities;
  probabilities.reserve(profile.size() - 1);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == i) continue;
    const Agent& a = profile[j];
    probabilities.push_back(vote_probability(a.effort_profile, a.strategy));
  }
  return CountDistribution(poisson_binomial_pmf(probabilities));
}

enum class FidelityChoice { Zero, One, Any };

struct BestResponse {
  double effort = 0.0;
  FidelityChoice fidelity = FidelityChoice::Any;

  // Concrete fidelity; only meaningful when fidelity != Any.
  double fidelity_value() const { return fidelity == FidelityChoice::One ? 1.0 : 0.0; }
};

// Best response to a known payment advantage q of a T-vote over an F-vote.
// With s = f'(0) q: |s| <= 1 gives zero effort with any fidelity; otherwise
// the effort solves f'(effort) q = sign(s) and the fidelity is 1 for s > 1
// and 0 for s < -1. For the exponential family the effort is
// ln(rate |q| / 2) / rate.
inline BestResponse best_response_point(const EffortProfile& e, double q) {
  const double s = e.derivative(0.0) * q;
  if (std::abs(s) <= 1.0) return {0.0, FidelityChoice::Any};
  const double effort = std::log(e.rate() * std::abs(q) / 2.0) / e.rate();
  return {effort, s > 1.0 ? FidelityChoice::One : FidelityChoice::Zero};
}

inline BestResponse best_response_distributional(const EffortProfile& e,
                                                 const PaymentFunction& p,
                                                 const CountDistribution& dist, std::size_t n) {
  return best_response_point(e, q_expected(p, dist, n));
}

struct AgentVerdict {
  char case_label = 'a';  // 'a' no effort, 'b' fidelity 1, 'c' fidelity 0
  double q = 0.0;
  // Case a: |f'(0) q| - 1 (must be <= tol). Cases b/c: |f'(effort) q -+ 1|.
  double residual = 0.0;
  bool ok = false;
};

struct EquilibriumReport {
  bool is_equilibrium = false;
  std::vector<AgentVerdict> per_agent;
};

inline constexpr double kDefaultEquilibriumTolerance = 1e-8;

// Checks every agent's strategy against the first-order equilibrium
// conditions given the others' strategies.
inline EquilibriumReport verify_equilibrium(const StrategyProfile& profile,
                                            const PaymentFunction& p,
                                            double tol = kDefaultEquilibriumTolerance) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = profile.size();
  EquilibriumReport report;
  report.is_equilibrium = true;
  report.per_agent.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& agent = profile[i];
    const EffortProfile& e = agent.effort_profile;
    const Strategy& s = agent.strategy;
    AgentVerdict v;
    v.q = q_expected(p, others_vote_pmf(profile, i), n);
    if (s.effort() == 0.0) {
      v.case_label = 'a';
      v.residual = std::abs(e.derivative(0.0) * v.q) - 1.0;
      v.ok = v.residual <= tol;
    } else {
      const double slope = e.derivative(s.effort()) * v.q;
      if (s.fidelity() == 1.0) {
        v.case_label = 'b';
        v.residual = std::abs(slope - 1.0);
        v.ok = v.residual <= tol;
      } else if (s.fidelity() == 0.0) {
        v.case_label = 'c';
        v.residual = std::abs(slope + 1.0);
        v.ok = v.residual <= tol;
      } else {
        // Positive effort with a mixed fidelity is never a best response.
        v.case_label = slope >= 0.0 ? 'b' : 'c';
        v.residual = std::numeric_limits<double>::infinity();
        v.ok = false;
      }
    }
    report.is_equilibrium = report.is_equilibrium && v.ok;
    report.per_agent.push_back(v);
  }
  return report;
}

// Every fidelity b replaced by 1 - b.
inline StrategyProfile mirror(const StrategyProfile& profile) {
  std::vector<Agent> agents(profile.agents().begin(), profile.agents().end());
  for (Agent& a : agents) {
    a.strategy = Strategy(a.strategy.effort(), 1.0 - a.strategy.fidelity());
  }
  return StrategyProfile(std::move(agents));
}

inline constexpr double kSimpleConditionSlack = 1e-12;

// Residual of the simple-equilibrium inequality at vote count m:
// p((2+m)/n) - p((1+m)/n) + p((n-m)/n) - p((n-m-1)/n).
inline double simple_condition_residual(const PaymentFunction& p, std::size_t m, std::size_t n) {
  if (n < 2 || m > n - 2) throw std::out_of_range("m must lie in [0, n-2]");
  return p.at(2 + m, n) - p.at(1 + m, n) + p.at(n - m, n) - p.at(n - m - 1, n);
}

// True when the residual is non-negative for every m in [0, n-2]; such
// payments admit only simple equilibria.
inline bool check_simple_condition(const PaymentFunction& p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("simple condition needs n >= 2");
  for (std::size_t m = 0; m + 2 <= n; ++m) {
    if (simple_condition_residual(p, m, n) < -kSimpleConditionSlack) return false;
  }
  return true;
}

inline bool is_monotone_nondecreasing(const PaymentFunction& p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("monotonicity check needs n >= 2");
  for (std::size_t k = 1; k < n; ++k) {
    if (p.at(k, n) > p.at(k + 1, n)) return false;
  }
  return true;
}

// All T-vote probabilities on the same side of 1/2.
inline bool is_simple_profile(const StrategyProfile& profile) {
  bool all_at_least_half = true;
  bool all_at_most_half = true;
  for (const Agent& a : profile.agents()) {
    const double v = vote_probability(a.effort_profile, a.strategy);
    all_at_least_half = all_at_least_half && v >= 0.5;
    all_at_most_half = all_at_most_half && v <= 0.5;
  }
  return all_at_least_half || all_at_most_half;
}

struct SymmetricSearchOptions {
  double max_effort = 20.0;
  std::size_t grid_points = 10000;
  double root_tolerance = 1e-8;
};

// g(effort) = f'(effort) Q(effort) - 1, where Q is taken under
// Bin(n-1, f(effort)): the first-order condition of the symmetric profile in
// which every agent plays (effort, 1).
inline double symmetric_condition(const EffortProfile& e, const PaymentFunction& p,
                                  std::size_t n, double effort) {
  const double x = e.value(effort);
  const CountDistribution dist(binomial_pmf(n - 1, x));
  return e.derivative(effort) * q_expected(p, dist, n) - 1.0;
}

// Efforts of all symmetric non-trivial equilibria (every agent plays
// (effort, 1)) detected as sign changes of g on a uniform grid, refined by
// bisection. Sorted largest first; empty when none is found.
inline std::vector<double> find_symmetric_equilibrium(const EffortProfile& e,
                                                      const PaymentFunction& p, std::size_t n,
                                                      const SymmetricSearchOptions& opts = {}) {
  if (!e.is_well_informed()) {
    throw std::invalid_argument("symmetric equilibria are defined for well-informed juries");
  }
  if (n < 2) throw std::invalid_argument("symmetric search needs n >= 2");
  if (!check_simple_condition(p, n)) {
    throw std::invalid_argument("payment violates the simple-equilibrium condition");
  }
  if (opts.grid_points < 2 || !(opts.max_effort > 0.0)) {
    throw std::invalid_argument("invalid symmetric search grid");
  }
  const auto g = [&](double effort) { return symmetric_condition(e, p, n, effort); };
  const double step = opts.max_effort / static_cast<double>(opts.grid_points - 1);

  std::vector<double> roots;
  double lo = 0.0;
  double g_lo = g(lo);
  for (std::size_t k = 1; k < opts.grid_points; ++k) {
    const double hi = step * static_cast<double>(k);
    const double g_hi = g(hi);
    if (g_hi == 0.0) {
      roots.push_back(hi);
    } else if ((g_lo < 0.0 && g_hi > 0.0) || (g_lo > 0.0 && g_hi < 0.0)) {
      double a = lo, b = hi, g_a = g_lo;
      double mid = 0.5 * (a + b);
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (a + b);
        const double g_mid = g(mid);
        if (g_mid == 0.0 || b - a < 1e-15) break;
        if ((g_mid < 0.0) == (g_a < 0.0)) {
          a = mid;
          g_a = g_mid;
        } else {
          b = mid;
        }
      }
      if (mid > 0.0 && std::abs(g(mid)) <= opts.root_tolerance) roots.push_back(mid);
    }
    lo = hi;
    g_lo = g_hi;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace juror

#endif  // JUROR_EQUILIBRIUM_HPP_
