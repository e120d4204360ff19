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

#ifndef JUROR_SIMPLEX_HPP_
#define JUROR_SIMPLEX_HPP_

// Dense two-phase primal simplex with Bland's pivoting rule.
//
//   minimize    c . v
//   subject to  a_r . v >= b_r   (inequalities)
//               a_e . v  = b_e   (equalities)
//               v_k >= l_k       (l_k may be -inf: free variable)
//
// The problem is rewritten in standard form (shift by finite bounds, split
// free variables, surplus columns, non-negative right-hand sides) and solved
// on a dense tableau. After an optimal basis is found the basic solution is
// recomputed from the original data by Gaussian elimination, which removes
// the error accumulated across pivots.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace juror {

struct LinearConstraint {
  std::vector<double> coefficients;
  double rhs = 0.0;
};

struct LPInstance {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> inequalities;  // coefficients . v >= rhs
  std::vector<LinearConstraint> equalities;    // coefficients . v == rhs
  std::vector<double> lower_bounds;            // -inf for a free variable

  void validate() const {
    if (num_vars == 0) throw std::invalid_argument("LP needs at least one variable");
    if (objective.size() != num_vars || lower_bounds.size() != num_vars) {
      throw std::invalid_argument("LP objective/bounds size mismatch");
    }
    const auto check_row = [&](const LinearConstraint& row) {
      if (row.coefficients.size() != num_vars) {
        throw std::invalid_argument("LP constraint row size mismatch");
      }
      for (double a : row.coefficients) {
        if (!std::isfinite(a)) throw std::invalid_argument("LP coefficient not finite");
      }
      if (!std::isfinite(row.rhs)) throw std::invalid_argument("LP right-hand side not finite");
    };
    for (const auto& row : inequalities) check_row(row);
    for (const auto& row : equalities) check_row(row);
    for (double c : objective) {
      if (!std::isfinite(c)) throw std::invalid_argument("LP objective not finite");
    }
    for (double l : lower_bounds) {
      if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("LP lower bound must be finite or -inf");
      }
    }
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit, NumericalFailure };

inline std::string_view to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::IterationLimit: return "iteration limit";
    case LPStatus::NumericalFailure: return "numerical failure";
  }
  return "unknown";
}

struct LPSolution {
  LPStatus status = LPStatus::NumericalFailure;
  std::vector<double> values;  // filled when Optimal
  double objective_value = 0.0;
  std::size_t pivots = 0;
  double max_violation = 0.0;
};

struct SimplexOptions {
  std::size_t max_pivots = 1'000'000;
  double feasibility_tolerance = 1e-9;
  double pivot_tolerance = 1e-11;
  double optimality_tolerance = 1e-12;
};

// Largest violation of any constraint or bound by `values` (0 when feasible).
inline double max_constraint_violation(const LPInstance& lp, std::span<const double> values) {
  if (values.size() != lp.num_vars) throw std::invalid_argument("value vector size mismatch");
  double worst = 0.0;
  const auto dot = [&](const LinearConstraint& row) {
    double s = 0.0;
    for (std::size_t k = 0; k < lp.num_vars; ++k) s += row.coefficients[k] * values[k];
    return s;
  };
  for (const auto& row : lp.inequalities) worst = std::max(worst, row.rhs - dot(row));
  for (const auto& row : lp.equalities) worst = std::max(worst, std::abs(dot(row) - row.rhs));
  for (std::size_t k = 0; k < lp.num_vars; ++k) {
    worst = std::max(worst, lp.lower_bounds[k] - values[k]);
  }
  return worst;
}

namespace detail {

// Solves the square system `a x = b` (row-major) by Gaussian elimination
// with partial pivoting. Returns nullopt when singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<double> a, std::vector<double> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    }
    if (std::abs(a[piv * m + col]) < 1e-14) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[piv * m + c], a[col * m + c]);
      std::swap(b[piv], b[col]);
    }
    const double inv = 1.0 / a[col * m + col];
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(m, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < m; ++c) s -= a[i * m + c] * x[c];
    x[i] = s / a[i * m + i];
  }
  return x;
}

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    // Zero the row so that it never limits a ratio test again.
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) = 0.0;
    dropped_.resize(rows_, false);
    dropped_[r] = true;
  }
  bool dropped(std::size_t r) const { return !dropped_.empty() && dropped_[r]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<bool> dropped_;
};

enum class PhaseResult { Optimal, Unbounded, IterationLimit };

// Bland's rule: lowest-index improving column, lowest-index basic variable
// among tied ratios. Guarantees termination.
inline PhaseResult run_phase(Tableau& t, std::size_t allowed_cols, const SimplexOptions& opts,
                             std::size_t& pivots) {
  while (true) {
    std::size_t entering = allowed_cols;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (t.cost(j) < -opts.optimality_tolerance) {
        entering = j;
        break;
      }
    }
    if (entering == allowed_cols) return PhaseResult::Optimal;

    std::size_t leaving = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.dropped(i)) continue;
      const double a = t.at(i, entering);
      if (a <= opts.pivot_tolerance) continue;
      const double ratio = std::max(0.0, t.rhs(i)) / a;
      const double tie = 1e-15 * std::max(1.0, best_ratio);
      if (leaving == t.rows() || ratio < best_ratio - tie ||
          (ratio <= best_ratio + tie && t.basis()[i] < t.basis()[leaving])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving == t.rows()) return PhaseResult::Unbounded;
    if (pivots >= opts.max_pivots) return PhaseResult::IterationLimit;
    t.pivot(leaving, entering);
    ++pivots;
  }
}

}  // namespace detail

inline LPSolution solve_lp(const LPInstance& lp, const SimplexOptions& opts = {}) {
  lp.validate();
  const std::size_t n = lp.num_vars;

  // Column layout: one column per bounded variable, two per free variable,
  // then one surplus column per inequality.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t num_struct = 0;
  for (std::size_t k = 0; k < n; ++k) {
    plus_col[k] = num_struct++;
    if (std::isinf(lp.lower_bounds[k])) minus_col[k] = num_struct++;
  }
  const std::size_t num_ineq = lp.inequalities.size();
  const std::size_t num_rows = num_ineq + lp.equalities.size();
  const std::size_t num_real = num_struct + num_ineq;
  const std::size_t num_cols = num_real + num_rows;  // artificials last

  // Standard-form rows (before artificials), kept for the final
  // recomputation of the basic solution.
  std::vector<double> a_std(num_rows * num_real, 0.0);
  std::vector<double> b_std(num_rows, 0.0);
  const auto fill_row = [&](std::size_t r, const LinearConstraint& row, bool surplus) {
    double rhs = row.rhs;
    for (std::size_t k = 0; k < n; ++k) {
      const double a = row.coefficients[k];
      if (a == 0.0) continue;
      a_std[r * num_real + plus_col[k]] = a;
      if (minus_col[k] != SIZE_MAX) {
        a_std[r * num_real + minus_col[k]] = -a;
      } else {
        rhs -= a * lp.lower_bounds[k];
      }
    }
    if (surplus) a_std[r * num_real + num_struct + r] = -1.0;
    b_std[r] = rhs;
    if (rhs < 0.0) {
      for (std::size_t c = 0; c < num_real; ++c) a_std[r * num_real + c] *= -1.0;
      b_std[r] = -rhs;
    }
  };
  for (std::size_t r = 0; r < num_ineq; ++r) fill_row(r, lp.inequalities[r], true);
  for (std::size_t e = 0; e < lp.equalities.size(); ++e) {
    fill_row(num_ineq + e, lp.equalities[e], false);
  }

  std::vector<double> cost(num_real, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cost[plus_col[k]] = lp.objective[k];
    if (minus_col[k] != SIZE_MAX) cost[minus_col[k]] = -lp.objective[k];
  }

  detail::Tableau t(num_rows, num_cols);
  for (std::size_t r = 0; r < num_rows; ++r) {
    for (std::size_t c = 0; c < num_real; ++c) t.at(r, c) = a_std[r * num_real + c];
    t.at(r, num_real + r) = 1.0;
    t.rhs(r) = b_std[r];
    t.basis()[r] = num_real + r;
  }

  LPSolution result;
  std::size_t pivots = 0;

  // Phase 1: minimize the sum of artificials.
  for (std::size_t c = 0; c <= num_cols; ++c) {
    if (c >= num_real && c < num_cols) continue;
    double s = 0.0;
    for (std::size_t r = 0; r < num_rows; ++r) s += t.at(r, c);
    t.cost(c) = -s;
  }
  auto phase = detail::run_phase(t, num_cols, opts, pivots);
  result.pivots = pivots;
  if (phase == detail::PhaseResult::IterationLimit) {
    result.status = LPStatus::IterationLimit;
    return result;
  }
  double b_scale = 1.0;
  for (double b : b_std) b_scale = std::max(b_scale, std::abs(b));
  if (-t.cost(num_cols) > opts.feasibility_tolerance * b_scale) {
    result.status = LPStatus::Infeasible;
    return result;
  }

  // Move remaining (zero-valued) artificials out of the basis; rows where
  // that is impossible are linearly dependent and are dropped.
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (t.basis()[r] < num_real) continue;
    std::size_t col = num_real;
    for (std::size_t c = 0; c < num_real; ++c) {
      if (std::abs(t.at(r, c)) > 1e-9) {
        col = c;
        break;
      }
    }
    if (col == num_real) {
      t.drop_row(r);
    } else {
      t.pivot(r, col);
      ++pivots;
    }
  }

  // Phase 2 on the real columns only.
  for (std::size_t c = 0; c <= num_cols; ++c) t.cost(c) = 0.0;
  for (std::size_t c = 0; c < num_real; ++c) t.cost(c) = cost[c];
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (t.dropped(r)) continue;
    const double cb = cost[t.basis()[r]];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= num_cols; ++c) t.cost(c) -= cb * t.at(r, c);
  }
  phase = detail::run_phase(t, num_real, opts, pivots);
  result.pivots = pivots;
  if (phase == detail::PhaseResult::IterationLimit) {
    result.status = LPStatus::IterationLimit;
    return result;
  }
  if (phase == detail::PhaseResult::Unbounded) {
    result.status = LPStatus::Unbounded;
    return result;
  }

  // Basic solution from the tableau, then recomputed from the original
  // standard-form data on the final basis.
  std::vector<double> y(num_real, 0.0);
  std::vector<std::size_t> live_rows, basic_cols;
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (t.dropped(r)) continue;
    live_rows.push_back(r);
    basic_cols.push_back(t.basis()[r]);
    y[t.basis()[r]] = t.rhs(r);
  }
  {
    const std::size_t m = live_rows.size();
    std::vector<double> basis_matrix(m * m), rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      rhs[i] = b_std[live_rows[i]];
      for (std::size_t j = 0; j < m; ++j) {
        basis_matrix[i * m + j] = a_std[live_rows[i] * num_real + basic_cols[j]];
      }
    }
    if (auto refined = detail::solve_dense(std::move(basis_matrix), std::move(rhs))) {
      for (std::size_t j = 0; j < m; ++j) y[basic_cols[j]] = (*refined)[j];
    }
  }

  result.values.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (minus_col[k] != SIZE_MAX) {
      result.values[k] = y[plus_col[k]] - y[minus_col[k]];
    } else {
      result.values[k] = lp.lower_bounds[k] + y[plus_col[k]];
    }
  }
  result.objective_value = 0.0;
  for (std::size_t k = 0; k < n; ++k) result.objective_value += lp.objective[k] * result.values[k];
  result.max_violation = max_constraint_violation(lp, result.values);
  result.status = result.max_violation <= opts.feasibility_tolerance ? LPStatus::Optimal
                                                                     : LPStatus::NumericalFailure;
  return result;
}

}  // namespace juror

#endif  // JUROR_SIMPLEX_HPP_
