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

#ifndef JUROR_PAYMENT_DESIGN_HPP_
#define JUROR_PAYMENT_DESIGN_HPP_

// Minimum-cost payment tables that make "every agent plays
// (f^-1(x), 1)" an equilibrium of a homogeneous well-informed jury.
//
// Variables v_k = p(k/n), k = 1..n (index k-1). With z = Bin(n-1, x):
//   objective    sum_t z(t) (x v_{1+t} + (1-x) v_{n-t})
//   equality     sum_t z(t) (v_{1+t} - v_{n-t}) = 1 / f'(f^-1(x))
//   inequalities v_{2+m} - v_{1+m} + v_{n-m} - v_{n-m-1} >= 0, m = 0..n-2
//   bounds       v_k >= lower_bound

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "juror/distribution.hpp"
#include "juror/equilibrium.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"
#include "juror/simplex.hpp"
#include "juror/utility.hpp"

namespace juror {

struct DesignOptions {
  // -inf removes the bounds altogether (the LP is then unbounded).
  double lower_bound = 0.0;
  bool require_monotone = false;
  // Expected payment at the target equilibrium covers the effort spent.
  bool individual_rationality = false;
};

// Q the payment must induce so that f^-1(x) is a best response.
inline double target_q(const EffortProfile& e, double x) {
  return 1.0 / e.derivative(e.inverse(x));
}

inline LPInstance build_lp(std::size_t n, double x, const EffortProfile& e,
                           const DesignOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("payment design needs n >= 2");
  if (!(x > 0.5 && x < 1.0)) throw std::invalid_argument("target fraction must lie in (1/2, 1)");
  if (!e.is_well_informed()) {
    throw std::invalid_argument("payment design requires a well-informed effort profile");
  }
  if (std::isnan(opts.lower_bound) || opts.lower_bound == std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("lower bound must be finite or -inf");
  }

  const std::vector<double> z = binomial_weights(n, x);
  LPInstance lp;
  lp.num_vars = n;
  lp.objective.assign(n, 0.0);
  lp.lower_bounds.assign(n, opts.lower_bound);

  LinearConstraint equality{std::vector<double>(n, 0.0), target_q(e, x)};
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t t_idx = t;          // v_{1+t}
    const std::size_t f_idx = n - 1 - t;  // v_{n-t}
    lp.objective[t_idx] += x * z[t];
    lp.objective[f_idx] += (1.0 - x) * z[t];
    equality.coefficients[t_idx] += z[t];
    equality.coefficients[f_idx] -= z[t];
  }
  lp.equalities.push_back(std::move(equality));

  for (std::size_t m = 0; m + 2 <= n; ++m) {
    LinearConstraint row{std::vector<double>(n, 0.0), 0.0};
    row.coefficients[m + 1] += 1.0;  // v_{2+m}
    row.coefficients[m] -= 1.0;      // v_{1+m}
    row.coefficients[n - m - 1] += 1.0;  // v_{n-m}
    row.coefficients[n - m - 2] -= 1.0;  // v_{n-m-1}
    lp.inequalities.push_back(std::move(row));
  }
  if (opts.require_monotone) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      LinearConstraint row{std::vector<double>(n, 0.0), 0.0};
      row.coefficients[k + 1] = 1.0;
      row.coefficients[k] = -1.0;
      lp.inequalities.push_back(std::move(row));
    }
  }
  if (opts.individual_rationality) {
    lp.inequalities.push_back(LinearConstraint{lp.objective, e.inverse(x)});
  }
  return lp;
}

struct DesignResult {
  PaymentFunction payment;
  LPSolution solution;
  double q_target = 0.0;
  double effort = 0.0;         // f^-1(x)
  double expected_cost = 0.0;  // objective value per agent
  double q_achieved = 0.0;     // Q recomputed under Bin(n-1, x)
  bool simple_condition = false;
};

class DesignFailure : public std::runtime_error {
 public:
  explicit DesignFailure(LPStatus status)
      : std::runtime_error("payment LP not solved: " + std::string(to_string(status))),
        status_(status) {}
  LPStatus status() const { return status_; }

 private:
  LPStatus status_;
};

inline DesignResult design_payments(std::size_t n, double x, const EffortProfile& e,
                                    const DesignOptions& opts = {}) {
  const LPInstance lp = build_lp(n, x, e, opts);
  LPSolution solution = solve_lp(lp);
  if (solution.status != LPStatus::Optimal) throw DesignFailure(solution.status);

  DesignResult out;
  out.payment = PaymentFunction::tabulated(solution.values);
  out.q_target = target_q(e, x);
  out.effort = e.inverse(x);
  out.expected_cost = solution.objective_value;
  out.q_achieved = q_expected(out.payment, CountDistribution(binomial_weights(n, x)), n);
  out.simple_condition = check_simple_condition(out.payment, n);
  out.solution = std::move(solution);
  return out;
}

}  // namespace juror

#endif  // JUROR_PAYMENT_DESIGN_HPP_
