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

#ifndef JUROR_DISTRIBUTION_HPP_
#define JUROR_DISTRIBUTION_HPP_

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace juror {

inline constexpr double kPmfTolerance = 1e-9;

// Law of m_i, the number of T-votes among the other n-1 agents:
// pmf()[t] = Pr[m_i = t] for t in {0, ..., n-1}. Its size therefore equals the
// jury size n.
class CountDistribution {
 public:
  explicit CountDistribution(std::vector<double> pmf) : pmf_(std::move(pmf)) {
    if (pmf_.empty()) {
      throw std::invalid_argument("count distribution must have support");
    }
    double total = 0.0;
    for (double v : pmf_) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("count distribution entries must be finite and >= 0");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > kPmfTolerance) {
      throw std::invalid_argument("count distribution does not sum to 1");
    }
  }

  static CountDistribution point_mass(std::size_t t, std::size_t n) {
    if (t >= n) throw std::out_of_range("point mass outside {0, ..., n-1}");
    std::vector<double> pmf(n, 0.0);
    pmf[t] = 1.0;
    return CountDistribution(std::move(pmf));
  }

  std::size_t jury_size() const { return pmf_.size(); }
  std::span<const double> pmf() const { return pmf_; }
  double operator[](std::size_t t) const { return pmf_.at(t); }

  double mean() const {
    double m = 0.0;
    for (std::size_t t = 0; t < pmf_.size(); ++t) m += static_cast<double>(t) * pmf_[t];
    return m;
  }

 private:
  std::vector<double> pmf_;
};

// z(t) = C(trials, t) x^t (1-x)^(trials-t), t = 0..trials, evaluated in log
// space.
inline std::vector<double> binomial_pmf(std::size_t trials, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binomial success probability must lie in [0, 1]");
  }
  std::vector<double> z(trials + 1, 0.0);
  if (x == 0.0 || x == 1.0) {
    z[x == 0.0 ? 0 : trials] = 1.0;
    return z;
  }
  const double log_x = std::log(x);
  const double log_1mx = std::log1p(-x);
  const double log_n_fact = std::lgamma(static_cast<double>(trials) + 1.0);
  for (std::size_t t = 0; t <= trials; ++t) {
    const double td = static_cast<double>(t);
    const double log_choose = log_n_fact - std::lgamma(td + 1.0) -
                              std::lgamma(static_cast<double>(trials - t) + 1.0);
    z[t] = std::exp(log_choose + td * log_x + static_cast<double>(trials - t) * log_1mx);
  }
  return z;
}

// Weights z(t) = Pr[m_i = t] under Bin(n-1, x): the vote-count law faced by
// each of n agents who vote T independently with probability x.
inline std::vector<double> binomial_weights(std::size_t n, double x) {
  if (n < 2) throw std::invalid_argument("binomial weights need n >= 2");
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("binomial weights need x in (0, 1)");
  }
  return binomial_pmf(n - 1, x);
}

// Exact law of a sum of independent Bernoulli(p_j) variables, by iterative
// convolution. O(k^2) for k variables.
inline std::vector<double> poisson_binomial_pmf(std::span<const double> probabilities) {
  std::vector<double> pmf(probabilities.size() + 1, 0.0);
  pmf[0] = 1.0;
  std::size_t support = 0;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::domain_error("Bernoulli probability must lie in [0, 1]");
    }
    ++support;
    for (std::size_t t = support; t > 0; --t) {
      pmf[t] = pmf[t] * (1.0 - p) + pmf[t - 1] * p;
    }
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

}  // namespace juror

#endif  // JUROR_DISTRIBUTION_HPP_
