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

#ifndef JUROR_SWEEP_HPP_
#define JUROR_SWEEP_HPP_

// Correctness heatmaps over (rho, x) grids, where x is the threshold reward,
// the award/loss total, or the round-0 effort.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "juror/dynamics.hpp"
#include "juror/payment.hpp"
#include "juror/rng.hpp"

namespace juror {

enum class SweepAxis { RewardThreshold, RewardAwardLoss, InitialEffort };

inline std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::RewardThreshold: return "reward-threshold";
    case SweepAxis::RewardAwardLoss: return "reward-award-loss";
    case SweepAxis::InitialEffort: return "initial-effort";
  }
  return "unknown";
}

inline SweepAxis parse_sweep_axis(std::string_view text) {
  for (SweepAxis a : {SweepAxis::RewardThreshold, SweepAxis::RewardAwardLoss,
                      SweepAxis::InitialEffort}) {
    if (text == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown sweep axis '" + std::string(text) + "'");
}

struct SweepConfig {
  SweepAxis axis = SweepAxis::RewardThreshold;
  double x_min = 0.0;
  double x_max = 5.0;
  std::size_t x_steps = 100;
  std::size_t rho_steps = 100;  // spans [0, 1]
  std::size_t n = 100;
  std::size_t rounds = 50;
  std::size_t samples = 20;
  double epsilon = 1.0;  // off-axis effort for the reward axes
  double omega = 3.0;    // off-axis threshold reward for the effort axis
  std::uint64_t seed = 1;
  // Replaces Threshold(omega) on the effort axis when set.
  std::optional<std::vector<double>> payment_table;

  void validate() const {
    if (!(x_min < x_max)) throw std::invalid_argument("sweep needs x_min < x_max");
    if (x_steps < 2 || rho_steps < 2) throw std::invalid_argument("sweep needs >= 2 steps per axis");
    if (n < 1 || rounds < 1 || samples < 1) {
      throw std::invalid_argument("sweep needs n, rounds and samples >= 1");
    }
    if (axis == SweepAxis::InitialEffort && x_min < 0.0) {
      throw std::invalid_argument("initial effort axis must be non-negative");
    }
    if (axis != SweepAxis::InitialEffort && !(epsilon >= 0.0)) {
      throw std::invalid_argument("epsilon must be >= 0");
    }
    if (payment_table) {
      if (axis != SweepAxis::InitialEffort) {
        throw std::invalid_argument("a payment table can only be swept over the initial-effort axis");
      }
      if (payment_table->size() != n) {
        throw std::invalid_argument("payment table size does not match the jury size");
      }
    }
  }

  // Grid points interpolate the range inclusive of both endpoints.
  double x_at(std::size_t j) const {
    return x_min + (x_max - x_min) * static_cast<double>(j) / static_cast<double>(x_steps - 1);
  }
  double rho_at(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(rho_steps - 1);
  }

  SimulationConfig cell(std::size_t i, std::size_t j) const {
    SimulationConfig sim;
    sim.n = n;
    sim.rho = rho_at(i);
    sim.rounds = rounds;
    sim.seed = derive_seed(seed, i * x_steps + j);
    const double x = x_at(j);
    switch (axis) {
      case SweepAxis::RewardThreshold:
        sim.payment = PaymentFunction::threshold(x);
        sim.epsilon = epsilon;
        break;
      case SweepAxis::RewardAwardLoss:
        sim.payment = PaymentFunction::award_loss(x);
        sim.epsilon = epsilon;
        break;
      case SweepAxis::InitialEffort:
        sim.payment = payment_table ? PaymentFunction::tabulated(*payment_table)
                                    : PaymentFunction::threshold(omega);
        sim.epsilon = x;
        break;
    }
    return sim;
  }

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

inline std::optional<SweepConfig> sweep_preset(std::string_view name) {
  SweepConfig c;
  std::string_view base = name;
  bool small = false;
  if (name.ends_with("-small")) {
    base = name.substr(0, name.size() - 6);
    small = true;
  }
  if (base == "fig1a") {
    c.axis = SweepAxis::RewardThreshold;
    c.x_min = 0.0;
    c.x_max = 5.0;
    c.epsilon = 1.0;
  } else if (base == "fig1b") {
    c.axis = SweepAxis::RewardAwardLoss;
    c.x_min = 0.0;
    c.x_max = 2500.0;
    c.epsilon = 1.0;
  } else if (base == "fig1c") {
    c.axis = SweepAxis::InitialEffort;
    c.x_min = 0.0;
    c.x_max = 5.0;
    c.omega = 3.0;
  } else {
    return std::nullopt;
  }
  if (small) {
    c.x_steps = 20;
    c.rho_steps = 20;
    c.samples = 10;
  }
  return c;
}

struct SweepResult {
  SweepConfig config;
  std::vector<double> grid;  // rho-major: grid[i * x_steps + j]
  double elapsed_seconds = 0.0;
  std::size_t threads = 1;

  double at(std::size_t i, std::size_t j) const { return grid.at(i * config.x_steps + j); }
};

// Cells are distributed over `threads` workers through a shared counter;
// each cell owns its seed, so the grid does not depend on the thread count.
inline SweepResult run_sweep(const SweepConfig& config, std::size_t threads = 1) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SweepResult result;
  result.config = config;
  const std::size_t cells = config.rho_steps * config.x_steps;
  result.grid.assign(cells, 0.0);
  threads = std::clamp<std::size_t>(threads, 1, cells);
  result.threads = threads;

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t c = next++; c < cells; c = next++) {
      const std::size_t i = c / config.x_steps;
      const std::size_t j = c % config.x_steps;
      result.grid[c] = correctness_estimate(config.cell(i, j), config.samples);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace juror

#endif  // JUROR_SWEEP_HPP_
