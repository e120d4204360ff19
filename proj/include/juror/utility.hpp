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

#ifndef JUROR_UTILITY_HPP_
#define JUROR_UTILITY_HPP_

// Expected-utility arithmetic of a single juror facing a known law of the
// other jurors' T-vote count.

#include <cstddef>
#include <stdexcept>

#include "juror/distribution.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"

namespace juror {

namespace detail {

inline void check_jury(const CountDistribution& dist, std::size_t n) {
  if (dist.jury_size() != n) {
    throw std::invalid_argument("count distribution support does not match the jury size");
  }
}

}  // namespace detail

// E[p((1+m)/n)]: expected payment for a T-vote.
inline double expected_payment_for_t(const PaymentFunction& p, const CountDistribution& dist,
                                     std::size_t n) {
  detail::check_jury(dist, n);
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) total += dist[t] * p.at(1 + t, n);
  return total;
}

// E[p((n-m)/n)]: expected payment for an F-vote.
inline double expected_payment_for_f(const PaymentFunction& p, const CountDistribution& dist,
                                     std::size_t n) {
  detail::check_jury(dist, n);
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) total += dist[t] * p.at(n - t, n);
  return total;
}

// Q: expected extra payment of a T-vote over an F-vote.
inline double q_expected(const PaymentFunction& p, const CountDistribution& dist,
                         std::size_t n) {
  detail::check_jury(dist, n);
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) total += dist[t] * q_point(p, t, n);
  return total;
}

// -effort + E[p((1+m)/n)] + (beta (2 f - 1) - f) Q.
inline double expected_utility(const EffortProfile& e, const Strategy& s,
                               const PaymentFunction& p, const CountDistribution& dist,
                               std::size_t n) {
  const double quality = e.value(s.effort());
  const double q = q_expected(p, dist, n);
  return -s.effort() + expected_payment_for_t(p, dist, n) +
         (s.fidelity() * (2.0 * quality - 1.0) - quality) * q;
}

}  // namespace juror

#endif  // JUROR_UTILITY_HPP_
