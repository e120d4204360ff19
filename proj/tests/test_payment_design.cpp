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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "juror/equilibrium.hpp"
#include "juror/payment_design.hpp"
#include "oracles.hpp"

namespace juror {
namespace {

const EffortProfile kWell = EffortProfile::well_informed();

// Q and per-agent cost of a table under Bin(n-1, x), from the recurrence
// binomial and pointwise payment lookups.
double oracle_q(const std::vector<double>& table, double x) {
  const std::size_t n = table.size();
  const auto z = oracle::binomial_by_recurrence(n - 1, x);
  double q = 0;
  for (std::size_t t = 0; t < n; ++t) q += z[t] * (table[t] - table[n - 1 - t]);
  return q;
}

double oracle_cost(const std::vector<double>& table, double x) {
  const std::size_t n = table.size();
  const auto z = oracle::binomial_by_recurrence(n - 1, x);
  const auto p = PaymentFunction::tabulated(table);
  return x * oracle::expected_t_payment(p, z, n) + (1 - x) * oracle::expected_f_payment(p, z, n);
}

TEST(BuildLpTest, SmallInstanceShape) {
  const LPInstance lp = build_lp(3, 0.75, kWell);
  ASSERT_EQ(lp.num_vars, 3u);
  ASSERT_EQ(lp.equalities.size(), 1u);
  EXPECT_NEAR(lp.equalities[0].rhs, 4.0, 1e-12);
  EXPECT_EQ(lp.inequalities.size(), 2u);
  // Bin(2, 0.75) = (1/16, 6/16, 9/16).
  EXPECT_NEAR(lp.equalities[0].coefficients[0], 1.0 / 16 - 9.0 / 16, 1e-15);
  EXPECT_EQ(lp.equalities[0].coefficients[1], 0.0);
  EXPECT_NEAR(lp.equalities[0].coefficients[2], 9.0 / 16 - 1.0 / 16, 1e-15);
  EXPECT_NEAR(lp.objective[1], 6.0 / 16, 1e-15);
  for (double l : lp.lower_bounds) EXPECT_EQ(l, 0.0);

  DesignOptions opts;
  opts.require_monotone = true;
  opts.individual_rationality = true;
  EXPECT_EQ(build_lp(3, 0.75, kWell, opts).inequalities.size(), 2u + 2u + 1u);
}

TEST(BuildLpTest, RejectsBadArguments) {
  EXPECT_THROW(build_lp(5, 0.5, kWell), std::invalid_argument);
  EXPECT_THROW(build_lp(5, 1.0, kWell), std::invalid_argument);
  EXPECT_THROW(build_lp(1, 0.75, kWell), std::invalid_argument);
  EXPECT_THROW(build_lp(5, 0.75, EffortProfile::misinformed()), std::invalid_argument);
  DesignOptions opts;
  opts.lower_bound = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(build_lp(5, 0.75, kWell, opts), std::invalid_argument);
}

TEST(TargetQTest, UnitRate) {
  for (double x = 0.51; x < 0.995; x += 0.01) {
    EXPECT_NEAR(target_q(kWell, x), 1.0 / (1.0 - x), 1e-10 * (1.0 / (1.0 - x))) << x;
  }
  EXPECT_NEAR(target_q(EffortProfile::well_informed(2.0), 0.75), 2.0, 1e-12);
}

TEST(DesignPaymentsTest, ElevenJurors) {
  const auto design = design_payments(11, 0.75, kWell);
  ASSERT_EQ(design.solution.status, LPStatus::Optimal);
  EXPECT_NEAR(design.q_target, 4.0, 1e-12);
  EXPECT_NEAR(design.q_achieved, 4.0, 1e-8);
  EXPECT_NEAR(oracle_q(design.solution.values, 0.75), 4.0, 1e-8);
  EXPECT_TRUE(design.simple_condition);
  EXPECT_NEAR(design.effort, std::log(2.0), 1e-12);
  for (double v : design.solution.values) EXPECT_GE(v, -1e-9);
  EXPECT_NEAR(design.expected_cost, oracle_cost(design.solution.values, 0.75), 1e-9);

  const auto profile = StrategyProfile::uniform(11, kWell, Strategy(design.effort, 1.0));
  EXPECT_TRUE(verify_equilibrium(profile, design.payment, 1e-6).is_equilibrium);
}

TEST(DesignPaymentsTest, ExtraConstraintsCostMore) {
  for (std::size_t n : {5u, 11u, 20u}) {
    const auto base = design_payments(n, 0.75, kWell);
    DesignOptions mono;
    mono.require_monotone = true;
    const auto m = design_payments(n, 0.75, kWell, mono);
    EXPECT_GE(m.expected_cost, base.expected_cost - 1e-9);
    EXPECT_TRUE(is_monotone_nondecreasing(m.payment, n));

    DesignOptions ir;
    ir.individual_rationality = true;
    const auto r = design_payments(n, 0.75, kWell, ir);
    EXPECT_GE(r.expected_cost, std::log(2.0) - 1e-9);
    EXPECT_GE(r.expected_cost, base.expected_cost - 1e-9);
  }
}

TEST(DesignPaymentsTest, UnboundedWithoutLowerBound) {
  DesignOptions opts;
  opts.lower_bound = -std::numeric_limits<double>::infinity();
  try {
    design_payments(7, 0.75, kWell, opts);
    FAIL() << "expected DesignFailure";
  } catch (const DesignFailure& e) {
    EXPECT_EQ(e.status(), LPStatus::Unbounded);
  }
}

TEST(DesignPaymentsTest, ShiftedLowerBound) {
  DesignOptions opts;
  opts.lower_bound = -2.0;
  const auto shifted = design_payments(9, 0.8, kWell, opts);
  const auto base = design_payments(9, 0.8, kWell);
  EXPECT_NEAR(shifted.expected_cost, base.expected_cost - 2.0, 1e-8);
}

TEST(DesignProperty, ShiftInvariance) {
  for (std::size_t n : {5u, 12u, 31u}) {
    const auto design = design_payments(n, 0.7, kWell);
    std::vector<double> shifted = design.solution.values;
    for (double& v : shifted) v += 5.0;
    EXPECT_NEAR(oracle_q(shifted, 0.7), design.q_achieved, 1e-10);
    EXPECT_NEAR(oracle_cost(shifted, 0.7), design.expected_cost + 5.0, 1e-9);
    EXPECT_TRUE(check_simple_condition(PaymentFunction::tabulated(shifted), n));
  }
}

TEST(DesignProperty, OptimalAgainstRandomFeasibleCandidates) {
  oracle::Rng rng(41);
  for (std::size_t n : {5u, 11u, 24u}) {
    for (double x : {0.6, 0.75, 0.9}) {
      const auto design = design_payments(n, x, kWell);
      const double target = 1.0 / (1.0 - x);
      int tried = 0;
      while (tried < 100) {
        // Monotone tables satisfy the simple condition; scale to hit the
        // target Q and shift down to the zero floor.
        auto table = oracle::random_monotone_table(rng, n, 0.0);
        const double q = oracle_q(table, x);
        if (!(q > 1e-6)) continue;
        ++tried;
        const double lo = *std::min_element(table.begin(), table.end());
        for (double& v : table) v = (v - lo) * target / q;
        ASSERT_NEAR(oracle_q(table, x), target, 1e-8);
        ASSERT_TRUE(check_simple_condition(PaymentFunction::tabulated(table), n));
        EXPECT_GE(oracle_cost(table, x), design.expected_cost - 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace juror
