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

#ifndef JUROR_MODEL_HPP_
#define JUROR_MODEL_HPP_

// Primitive types of the juror game: effort curves, strategies and
// strategy profiles.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace juror {

enum class EffortKind { WellInformed, Misinformed };

inline std::string_view to_string(EffortKind kind) {
  return kind == EffortKind::WellInformed ? "well-informed" : "misinformed";
}

inline EffortKind parse_effort_kind(std::string_view text) {
  if (text == "well-informed" || text == "well" || text == "w") {
    return EffortKind::WellInformed;
  }
  if (text == "misinformed" || text == "mis" || text == "m") {
    return EffortKind::Misinformed;
  }
  throw std::invalid_argument("unknown effort kind '" + std::string(text) +
                              "' (expected well-informed or misinformed)");
}

// Signal-quality curve of an agent: the probability of receiving the ground
// truth as signal after exerting a given effort.
//
//   well-informed:  f(x) = 1 - exp(-rate * x) / 2   (increasing, concave)
//   misinformed:    f(x) = exp(-rate * x) / 2       (decreasing, convex)
//
// Both satisfy f(0) = 1/2.
class EffortProfile {
 public:
  explicit EffortProfile(EffortKind kind = EffortKind::WellInformed,
                         double rate = 1.0)
      : kind_(kind), rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
      throw std::invalid_argument("effort rate must be positive and finite");
    }
  }

  static EffortProfile well_informed(double rate = 1.0) {
    return EffortProfile(EffortKind::WellInformed, rate);
  }
  static EffortProfile misinformed(double rate = 1.0) {
    return EffortProfile(EffortKind::Misinformed, rate);
  }

  EffortKind kind() const { return kind_; }
  double rate() const { return rate_; }
  bool is_well_informed() const { return kind_ == EffortKind::WellInformed; }

  double value(double effort) const {
    check_effort(effort);
    const double tail = 0.5 * std::exp(-rate_ * effort);
    return is_well_informed() ? 1.0 - tail : tail;
  }

  double derivative(double effort) const {
    check_effort(effort);
    const double slope = 0.5 * rate_ * std::exp(-rate_ * effort);
    return is_well_informed() ? slope : -slope;
  }

  // Effort achieving signal quality `probability`. The admissible range is
  // [1/2, 1) for well-informed agents and (0, 1/2] for misinformed ones;
  // 1/2 maps to zero effort.
  double inverse(double probability) const {
    if (is_well_informed()) {
      if (!(probability >= 0.5 && probability < 1.0)) {
        throw std::domain_error(
            "well-informed signal quality must lie in [1/2, 1)");
      }
      return -std::log1p(1.0 - 2.0 * probability) / rate_;
    }
    if (!(probability > 0.0 && probability <= 0.5)) {
      throw std::domain_error("misinformed signal quality must lie in (0, 1/2]");
    }
    // 2p - 1 is exact only for 2p >= 1/2; below that log(2p) keeps precision.
    const double twice = 2.0 * probability;
    return -(twice >= 0.5 ? std::log1p(twice - 1.0) : std::log(twice)) / rate_;
  }

  friend bool operator==(const EffortProfile&, const EffortProfile&) = default;

 private:
  static void check_effort(double effort) {
    if (!(effort >= 0.0)) {
      throw std::domain_error("effort must be non-negative");
    }
  }

  EffortKind kind_;
  double rate_;
};

// (effort, fidelity): the effort spent and the probability of casting the
// received signal as vote.
class Strategy {
 public:
  Strategy() = default;
  Strategy(double effort, double fidelity) : effort_(effort), fidelity_(fidelity) {
    if (!(effort >= 0.0) || !std::isfinite(effort)) {
      throw std::invalid_argument("strategy effort must be finite and >= 0");
    }
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
      throw std::invalid_argument("strategy fidelity must lie in [0, 1]");
    }
  }

  double effort() const { return effort_; }
  double fidelity() const { return fidelity_; }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  double effort_ = 0.0;
  double fidelity_ = 0.5;
};

struct Agent {
  EffortProfile effort_profile;
  Strategy strategy;

  friend bool operator==(const Agent&, const Agent&) = default;
};

class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<Agent> agents) : agents_(std::move(agents)) {
    if (agents_.empty()) {
      throw std::invalid_argument("a strategy profile needs at least one agent");
    }
  }

  // Every agent shares the same effort curve and strategy.
  static StrategyProfile uniform(std::size_t n, const EffortProfile& effort,
                                 const Strategy& strategy) {
    return StrategyProfile(std::vector<Agent>(n, Agent{effort, strategy}));
  }

  std::size_t size() const { return agents_.size(); }
  const Agent& operator[](std::size_t i) const { return agents_.at(i); }
  std::span<const Agent> agents() const { return agents_; }

  StrategyProfile with_strategy(std::size_t i, const Strategy& strategy) const {
    StrategyProfile copy = *this;
    copy.agents_.at(i).strategy = strategy;
    return copy;
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<Agent> agents_;
};

// Probability that an agent playing `s` casts a T-vote.
inline double vote_probability(const EffortProfile& e, const Strategy& s) {
  const double quality = e.value(s.effort());
  return s.fidelity() * quality + (1.0 - s.fidelity()) * (1.0 - quality);
}

}  // namespace juror

#endif  // JUROR_MODEL_HPP_
