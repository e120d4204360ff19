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

#ifndef JUROR_PAYMENT_HPP_
#define JUROR_PAYMENT_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace juror {

// Fixed reward to every voter in the (weak) majority, nothing otherwise.
struct ThresholdPayment {
  double reward = 0.0;
  friend bool operator==(const ThresholdPayment&, const ThresholdPayment&) = default;
};

// Majority voters share a total award; minority voters share an equal loss.
struct AwardLossPayment {
  double award = 0.0;
  friend bool operator==(const AwardLossPayment&, const AwardLossPayment&) = default;
};

// Majority voters share `award`, minority voters share `loss`.
struct KlerosPayment {
  double award = 0.0;
  double loss = 0.0;
  friend bool operator==(const KlerosPayment&, const KlerosPayment&) = default;
};

// values[k-1] = p(k/n) for k = 1..n.
struct TabulatedPayment {
  std::vector<double> values;
  friend bool operator==(const TabulatedPayment&, const TabulatedPayment&) = default;
};

// Payment p(x) received by an agent when a fraction x of the jury (herself
// included) voted as she did. Only grid fractions x = k/n, k >= 1, are ever
// evaluated; x = 1/2 belongs to the majority branch.
class PaymentFunction {
 public:
  using Variant =
      std::variant<ThresholdPayment, AwardLossPayment, KlerosPayment, TabulatedPayment>;

  PaymentFunction() = default;
  explicit PaymentFunction(Variant v) : variant_(std::move(v)) {
    if (const auto* t = std::get_if<TabulatedPayment>(&variant_)) {
      if (t->values.empty()) {
        throw std::invalid_argument("tabulated payment needs at least one value");
      }
      for (double v : t->values) {
        if (!std::isfinite(v)) {
          throw std::invalid_argument("tabulated payment values must be finite");
        }
      }
    }
  }

  static PaymentFunction threshold(double reward) {
    return PaymentFunction(ThresholdPayment{reward});
  }
  static PaymentFunction award_loss(double award) {
    return PaymentFunction(AwardLossPayment{award});
  }
  static PaymentFunction kleros(double award, double loss) {
    return PaymentFunction(KlerosPayment{award, loss});
  }
  static PaymentFunction tabulated(std::vector<double> values) {
    return PaymentFunction(TabulatedPayment{std::move(values)});
  }

  const Variant& variant() const { return variant_; }
  bool is_tabulated() const { return std::holds_alternative<TabulatedPayment>(variant_); }
  const TabulatedPayment* table() const { return std::get_if<TabulatedPayment>(&variant_); }

  // p(k/n) for k in [1, n].
  double at(std::size_t k, std::size_t n) const {
    if (n == 0 || k == 0 || k > n) {
      throw std::domain_error("payment evaluated outside the grid k/n, 1 <= k <= n");
    }
    const bool majority = 2 * k >= n;
    return std::visit(
        [&](const auto& p) -> double {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, ThresholdPayment>) {
            return majority ? p.reward : 0.0;
          } else if constexpr (std::is_same_v<T, AwardLossPayment>) {
            return (majority ? p.award : -p.award) / static_cast<double>(k);
          } else if constexpr (std::is_same_v<T, KlerosPayment>) {
            return (majority ? p.award : -p.loss) / static_cast<double>(k);
          } else {
            if (p.values.size() != n) {
              throw std::invalid_argument(
                  "tabulated payment has " + std::to_string(p.values.size()) +
                  " entries but the jury has " + std::to_string(n) + " members");
            }
            return p.values[k - 1];
          }
        },
        variant_);
  }

  friend bool operator==(const PaymentFunction&, const PaymentFunction&) = default;

 private:
  Variant variant_ = ThresholdPayment{};
};

inline constexpr double kGridTolerance = 1e-12;

// p(x) for a same-vote fraction x in (0, 1]. Closed-form variants accept any
// such x; tabulated payments accept only grid points k/n.
inline double payment_value(const PaymentFunction& p, double x, std::size_t n) {
  if (!(x > 0.0 && x <= 1.0) || n == 0) {
    throw std::domain_error("payment fraction must lie in (0, 1]");
  }
  const double nd = static_cast<double>(n);
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ThresholdPayment>) {
          return x >= 0.5 ? v.reward : 0.0;
        } else if constexpr (std::is_same_v<T, AwardLossPayment>) {
          return (x >= 0.5 ? v.award : -v.award) / (x * nd);
        } else if constexpr (std::is_same_v<T, KlerosPayment>) {
          return (x >= 0.5 ? v.award : -v.loss) / (x * nd);
        } else {
          const double k = std::round(x * nd);
          if (k < 1.0 || std::abs(x - k / nd) > kGridTolerance) {
            throw std::domain_error("tabulated payment queried off the k/n grid");
          }
          return p.at(static_cast<std::size_t>(k), n);
        }
      },
      p.variant());
}

// Payment advantage of a T-vote over an F-vote when exactly m of the other
// agents vote T: p((1+m)/n) - p((n-m)/n).
inline double q_point(const PaymentFunction& p, std::size_t m, std::size_t n) {
  if (n == 0 || m >= n) {
    throw std::out_of_range("vote count m must lie in [0, n-1]");
  }
  return p.at(1 + m, n) - p.at(n - m, n);
}

}  // namespace juror

#endif  // JUROR_PAYMENT_HPP_
