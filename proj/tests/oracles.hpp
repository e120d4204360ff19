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

#ifndef JUROR_TESTS_ORACLES_HPP_
#define JUROR_TESTS_ORACLES_HPP_

// Test-only reference computations. None of these call into the code paths
// they are used to check (convolution, log-space binomials, closed-form best
// responses, the simplex).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "juror/juror.hpp"

namespace juror::oracle {

// Pr[sum of Bernoulli(p_j) = t] by enumerating all 2^k outcomes.
inline std::vector<double> enumerate_count_pmf(const std::vector<double>& p) {
  const std::size_t k = p.size();
  std::vector<double> pmf(k + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    double prob = 1.0;
    std::size_t ones = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1) {
        prob *= p[j];
        ++ones;
      } else {
        prob *= 1.0 - p[j];
      }
    }
    pmf[ones] += prob;
  }
  return pmf;
}

// Binomial PMF from the ratio recurrence z(t+1)/z(t) = (k-t)/(t+1) * x/(1-x),
// accumulated in long double.
inline std::vector<double> binomial_by_recurrence(std::size_t trials, double x) {
  std::vector<double> out(trials + 1);
  long double z = std::pow(1.0L - static_cast<long double>(x), static_cast<long double>(trials));
  const long double odds = static_cast<long double>(x) / (1.0L - static_cast<long double>(x));
  for (std::size_t t = 0; t <= trials; ++t) {
    out[t] = static_cast<double>(z);
    z *= static_cast<long double>(trials - t) / static_cast<long double>(t + 1) * odds;
  }
  return out;
}

// Expected payments under `pmf` evaluated through fractional x = k/n.
inline double expected_t_payment(const PaymentFunction& p, const std::vector<double>& pmf,
                                 std::size_t n) {
  double s = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    s += pmf[t] * payment_value(p, static_cast<double>(1 + t) / static_cast<double>(n), n);
  }
  return s;
}

inline double expected_f_payment(const PaymentFunction& p, const std::vector<double>& pmf,
                                 std::size_t n) {
  double s = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    s += pmf[t] * payment_value(p, static_cast<double>(n - t) / static_cast<double>(n), n);
  }
  return s;
}

// Expected utility as the sum over (signal, vote) cases.
inline double four_branch_utility(double quality, double effort, double beta, double pay_t,
                                  double pay_f) {
  return -effort + quality * beta * pay_t + quality * (1.0 - beta) * pay_f +
         (1.0 - quality) * beta * pay_f + (1.0 - quality) * (1.0 - beta) * pay_t;
}

inline double four_branch_utility(const EffortProfile& e, double effort, double beta,
                                  const PaymentFunction& p, const std::vector<double>& pmf,
                                  std::size_t n) {
  return four_branch_utility(e.value(effort), effort, beta, expected_t_payment(p, pmf, n),
                             expected_f_payment(p, pmf, n));
}

struct GridOptimum {
  double utility = -INFINITY;
  double effort = 0.0;
  double beta = 0.0;
};

// Maximizes the four-branch utility over effort in {0, h, ..., max} and
// beta in {0, 1}.
inline GridOptimum grid_search(const EffortProfile& e, const PaymentFunction& p,
                               const std::vector<double>& pmf, std::size_t n,
                               double max_effort = 5.0, double h = 1e-3) {
  const double pay_t = expected_t_payment(p, pmf, n);
  const double pay_f = expected_f_payment(p, pmf, n);
  GridOptimum best;
  const auto steps = static_cast<std::size_t>(std::llround(max_effort / h));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double effort = h * static_cast<double>(k);
    const double quality = e.value(effort);
    for (double beta : {0.0, 1.0}) {
      const double u = four_branch_utility(quality, effort, beta, pay_t, pay_f);
      if (u > best.utility) best = {u, effort, beta};
    }
  }
  return best;
}

// ------------------------------------------------------------ generators

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline EffortProfile random_effort(Rng& rng) {
  const auto kind = rng() % 2 == 0 ? EffortKind::WellInformed : EffortKind::Misinformed;
  return EffortProfile(kind, uniform(rng, 0.5, 2.0));
}

// One of the four payment variants with magnitudes bounded in `scale`.
inline PaymentFunction random_payment(Rng& rng, std::size_t n, double scale = 10.0) {
  switch (rng() % 4) {
    case 0: return PaymentFunction::threshold(uniform(rng, 0.0, scale));
    case 1: return PaymentFunction::award_loss(uniform(rng, 0.0, 2.0 * scale));
    case 2: {
      const double w = uniform(rng, 0.0, 2.0 * scale);
      return PaymentFunction::kleros(w, uniform(rng, w, 2.0 * scale));
    }
    default: {
      std::vector<double> v(n);
      for (double& x : v) x = uniform(rng, -scale, scale);
      return PaymentFunction::tabulated(std::move(v));
    }
  }
}

// Monotone non-decreasing table: cumulative non-negative increments, some
// of them zero.
inline std::vector<double> random_monotone_table(Rng& rng, std::size_t n, double start = 0.0) {
  std::vector<double> v(n);
  double level = start;
  for (std::size_t k = 0; k < n; ++k) {
    if (rng() % 3 != 0) level += uniform(rng, 0.0, 1.0);
    v[k] = level;
  }
  return v;
}

// Random PMF on {0, ..., n-1}: either flat-Dirichlet or binomial.
inline std::vector<double> random_pmf(Rng& rng, std::size_t n) {
  std::vector<double> pmf(n);
  if (rng() % 2 == 0) {
    std::exponential_distribution<double> ex(1.0);
    double total = 0.0;
    for (double& v : pmf) total += (v = ex(rng));
    for (double& v : pmf) v /= total;
  } else {
    pmf = binomial_by_recurrence(n - 1, uniform(rng, 0.05, 0.95));
    double total = 0.0;
    for (double v : pmf) total += v;
    for (double& v : pmf) v /= total;
  }
  return pmf;
}

}  // namespace juror::oracle

#endif  // JUROR_TESTS_ORACLES_HPP_
