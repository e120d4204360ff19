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

#ifndef JUROR_DYNAMICS_HPP_
#define JUROR_DYNAMICS_HPP_

// Round-based best-response dynamics.
//
// Round 0: every agent spends effort epsilon and votes her signal.
// Rounds 1..R: every agent observes m_i, the number of T-votes cast by the
// others in the previous round, and best-responds to the point payment
// advantage q_point(p, m_i, n). All agents update synchronously.
//
// Each agent consumes exactly one uniform draw per round, in agent order, so
// a trajectory is a pure function of (config, seed).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "juror/equilibrium.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"
#include "juror/rng.hpp"

namespace juror {

struct SimulationConfig {
  std::size_t n = 100;
  double rho = 1.0;  // fraction of well-informed agents
  PaymentFunction payment = PaymentFunction::threshold(3.0);
  double epsilon = 1.0;  // round-0 effort
  std::size_t rounds = 50;
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("jury size must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
      throw std::invalid_argument("epsilon must be finite and >= 0");
    }
    if (rounds < 1) throw std::invalid_argument("at least one round is required");
    if (const auto* t = payment.table(); t != nullptr && t->values.size() != n) {
      throw std::invalid_argument("tabulated payment size does not match the jury size");
    }
  }
};

struct RoundState {
  std::vector<std::uint8_t> votes;  // 1 = T-vote
  std::size_t t_count = 0;
  std::vector<double> efforts;  // effort each agent spent in this round

  bool majority_for_truth() const { return 2 * t_count > votes.size(); }
};

struct Trajectory {
  std::vector<RoundState> rounds;  // rounds[0] is round 0
  bool final_correct = false;
};

// The first round(rho n) agents are well-informed, the rest misinformed.
inline std::vector<EffortProfile> assign_population(std::size_t n, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
  const auto well = static_cast<std::size_t>(std::lround(rho * static_cast<double>(n)));
  std::vector<EffortProfile> population;
  population.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    population.push_back(i < well ? EffortProfile::well_informed()
                                  : EffortProfile::misinformed());
  }
  return population;
}

inline RoundState round_zero(std::span<const EffortProfile> population, double epsilon,
                             SplitMix64& rng) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  RoundState state;
  state.votes.resize(population.size());
  state.efforts.assign(population.size(), epsilon);
  for (std::size_t i = 0; i < population.size(); ++i) {
    const bool t_vote = rng.uniform() < population[i].value(epsilon);
    state.votes[i] = t_vote ? 1 : 0;
    state.t_count += t_vote ? 1 : 0;
  }
  return state;
}

// Best-response dynamics for a fixed population and payment. Responses to
// every possible feedback value are tabulated once per distinct effort
// profile; the object is immutable afterwards and may be shared between
// threads.
class JuryDynamics {
 public:
  JuryDynamics(std::vector<EffortProfile> population, PaymentFunction payment)
      : population_(std::move(population)), payment_(std::move(payment)) {
    const std::size_t n = population_.size();
    if (n == 0) throw std::invalid_argument("population must not be empty");
    if (const auto* t = payment_.table(); t != nullptr && t->values.size() != n) {
      throw std::invalid_argument("tabulated payment size does not match the jury size");
    }
    std::vector<double> q(n);
    for (std::size_t m = 0; m < n; ++m) q[m] = q_point(payment_, m, n);

    profile_index_.reserve(n);
    for (const EffortProfile& e : population_) {
      std::size_t idx = 0;
      while (idx < distinct_.size() && !(distinct_[idx] == e)) ++idx;
      if (idx == distinct_.size()) {
        distinct_.push_back(e);
        std::vector<Response> row(n);
        for (std::size_t m = 0; m < n; ++m) {
          const BestResponse br = best_response_point(e, q[m]);
          row[m] = {br.effort, br.effort > 0.0 ? e.value(br.effort) : 0.5, br.fidelity};
        }
        responses_.push_back(std::move(row));
      }
      profile_index_.push_back(idx);
    }
  }

  std::size_t size() const { return population_.size(); }
  std::span<const EffortProfile> population() const { return population_; }
  const PaymentFunction& payment() const { return payment_; }

  RoundState step(const RoundState& prev, SplitMix64& rng) const {
    check_state(prev);
    RoundState next;
    next.votes.resize(size());
    next.efforts.resize(size());
    next.t_count = advance(prev.votes, prev.t_count, next.votes, next.efforts.data(), rng);
    return next;
  }

  Trajectory simulate(double epsilon, std::size_t rounds, std::uint64_t seed) const {
    SplitMix64 rng(seed);
    Trajectory traj;
    traj.rounds.reserve(rounds + 1);
    traj.rounds.push_back(round_zero(population_, epsilon, rng));
    for (std::size_t r = 0; r < rounds; ++r) traj.rounds.push_back(step(traj.rounds.back(), rng));
    traj.final_correct = traj.rounds.back().majority_for_truth();
    return traj;
  }

  // Final-round outcome only; avoids materializing the trajectory.
  bool final_correct(double epsilon, std::size_t rounds, std::uint64_t seed) const {
    SplitMix64 rng(seed);
    RoundState start = round_zero(population_, epsilon, rng);
    std::vector<std::uint8_t> prev = std::move(start.votes), next(size());
    std::size_t t_count = start.t_count;
    for (std::size_t r = 0; r < rounds; ++r) {
      t_count = advance(prev, t_count, next, nullptr, rng);
      prev.swap(next);
    }
    return 2 * t_count > size();
  }

 private:
  struct Response {
    double effort = 0.0;
    double signal_probability = 0.5;
    FidelityChoice fidelity = FidelityChoice::Any;
  };

  void check_state(const RoundState& s) const {
    if (s.votes.size() != size()) throw std::invalid_argument("round state size mismatch");
    std::size_t count = 0;
    for (auto v : s.votes) count += v != 0 ? 1 : 0;
    if (count != s.t_count) throw std::invalid_argument("round state t_count inconsistent");
  }

  std::size_t advance(std::span<const std::uint8_t> prev, std::size_t t_count,
                      std::span<std::uint8_t> next, double* efforts, SplitMix64& rng) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const std::size_t m = t_count - (prev[i] != 0 ? 1 : 0);
      const Response& r = responses_[profile_index_[i]][m];
      const double u = rng.uniform();
      bool t_vote;
      if (r.effort == 0.0) {
        t_vote = u < 0.5;
      } else {
        const bool signal = u < r.signal_probability;
        t_vote = r.fidelity == FidelityChoice::One ? signal : !signal;
      }
      next[i] = t_vote ? 1 : 0;
      count += t_vote ? 1 : 0;
      if (efforts != nullptr) efforts[i] = r.effort;
    }
    return count;
  }

  std::vector<EffortProfile> population_;
  PaymentFunction payment_;
  std::vector<EffortProfile> distinct_;
  std::vector<std::vector<Response>> responses_;
  std::vector<std::size_t> profile_index_;
};

inline RoundState step(const RoundState& prev, std::span<const EffortProfile> population,
                       const PaymentFunction& payment, std::size_t n, SplitMix64& rng) {
  if (n != population.size()) throw std::invalid_argument("jury size mismatch");
  const JuryDynamics dyn({population.begin(), population.end()}, payment);
  return dyn.step(prev, rng);
}

inline Trajectory simulate(const SimulationConfig& config) {
  config.validate();
  const JuryDynamics dyn(assign_population(config.n, config.rho), config.payment);
  return dyn.simulate(config.epsilon, config.rounds, config.seed);
}

// Fraction of `samples` independent runs (sample s seeded with
// derive_seed(config.seed, s)) whose final round has a strict T majority.
inline double correctness_estimate(const SimulationConfig& config, std::size_t samples) {
  config.validate();
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const JuryDynamics dyn(assign_population(config.n, config.rho), config.payment);
  std::size_t correct = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    correct += dyn.final_correct(config.epsilon, config.rounds, derive_seed(config.seed, s)) ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(samples);
}

// One line per round: "<round>,<t_count>", after a "round,t_count" header.
inline void write_trajectory(std::ostream& out, const Trajectory& traj) {
  out << "round,t_count\n";
  for (std::size_t r = 0; r < traj.rounds.size(); ++r) {
    out << r << ',' << traj.rounds[r].t_count << '\n';
  }
}

}  // namespace juror

#endif  // JUROR_DYNAMICS_HPP_
