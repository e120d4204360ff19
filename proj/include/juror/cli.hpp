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

#ifndef JUROR_CLI_HPP_
#define JUROR_CLI_HPP_

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 runtime or
// solver failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "juror/dynamics.hpp"
#include "juror/equilibrium.hpp"
#include "juror/io.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"
#include "juror/payment_design.hpp"
#include "juror/sweep.hpp"

namespace juror {

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PaymentOptions {
  std::optional<double> threshold;
  std::optional<double> award_loss;
  std::optional<double> kleros;
  std::optional<double> loss;
  std::optional<std::string> file;

  void attach(CLI::App* app) {
    app->add_option("--threshold", threshold, "threshold payment with reward omega");
    app->add_option("--award-loss", award_loss, "award/loss sharing payment with total omega");
    app->add_option("--kleros", kleros, "Kleros-style payment with award omega (needs --loss)");
    app->add_option("--loss", loss, "total loss shared by the minority (Kleros-style)");
    app->add_option("--payment-file", file, "payment table CSV (header k,p)");
  }

  bool any() const { return threshold || award_loss || kleros || file; }

  PaymentFunction build(std::optional<PaymentFunction> fallback = std::nullopt) const {
    const int chosen = (threshold ? 1 : 0) + (award_loss ? 1 : 0) + (kleros ? 1 : 0) + (file ? 1 : 0);
    if (chosen > 1) throw UsageError("choose exactly one payment function");
    if (loss && !kleros) throw UsageError("--loss only applies to --kleros");
    if (threshold) return PaymentFunction::threshold(*threshold);
    if (award_loss) return PaymentFunction::award_loss(*award_loss);
    if (kleros) {
      if (!loss) throw UsageError("--kleros needs --loss");
      return PaymentFunction::kleros(*kleros, *loss);
    }
    if (file) return PaymentFunction::tabulated(read_payment_table(std::filesystem::path(*file)));
    if (fallback) return *fallback;
    throw UsageError("a payment function is required (--threshold, --award-loss, --kleros or --payment-file)");
  }
};

inline std::string fixed6(double v) { return detail::format("%.6f", v); }

inline std::string describe(const BestResponse& br) {
  std::string beta = br.fidelity == FidelityChoice::Any ? "any"
                     : br.fidelity == FidelityChoice::One ? "1"
                                                          : "0";
  return "λ=" + fixed6(br.effort) + ", β=" + beta;
}

}  // namespace cli

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Strategic jury adjudication: equilibria, payment design and dynamics", "juror"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_file;
  std::string out_dir = ".";
  bool out_given = false;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", seed, "master RNG seed");
  app.add_option("--config", config_file, "sweep configuration file (JSON)");
  app.add_option_function<std::string>(
      "--out",
      [&](const std::string& dir) {
        out_dir = dir;
        out_given = true;
      },
      "output directory");
  app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);

  // best-response
  auto* br_cmd = app.add_subcommand("best-response", "best response to a payment advantage Q");
  std::string br_kind;
  double br_q = 0.0, br_rate = 1.0;
  br_cmd->add_option("--kind", br_kind, "well-informed | misinformed")->required();
  br_cmd->add_option("--q", br_q, "payment advantage Q of a T-vote")->required();
  br_cmd->add_option("--rate", br_rate, "effort curve rate")->check(CLI::PositiveNumber);

  // check-payment
  auto* check_cmd = app.add_subcommand("check-payment", "simple-equilibrium condition and monotonicity");
  PaymentOptions check_pay;
  std::size_t check_n = 100;
  check_pay.attach(check_cmd);
  check_cmd->add_option("--n", check_n, "jury size")->check(CLI::Range(2, 1 << 20));

  // design
  auto* design_cmd = app.add_subcommand("design", "minimum-cost payment table for a target fraction");
  std::size_t design_n = 0;
  double design_x = 0.0, design_rate = 1.0, design_lb = 0.0;
  bool design_free = false, design_monotone = false, design_ir = false;
  std::string design_file = "payment.csv";
  design_cmd->add_option("--n", design_n, "jury size")->required()->check(CLI::Range(2, 1 << 16));
  design_cmd->add_option("--x", design_x, "target expected T-vote fraction in (1/2, 1)")->required();
  design_cmd->add_option("--rate", design_rate, "effort curve rate")->check(CLI::PositiveNumber);
  design_cmd->add_option("--lower-bound", design_lb, "lower bound on every payment (default 0)");
  design_cmd->add_flag("--no-lower-bound", design_free, "drop the payment lower bounds");
  design_cmd->add_flag("--monotone", design_monotone, "require non-decreasing payments");
  design_cmd->add_flag("--individual-rationality", design_ir,
                       "expected payment must cover the target effort");
  design_cmd->add_option("--output", design_file, "payment table file name inside --out");

  // find-eq
  auto* eq_cmd = app.add_subcommand("find-eq", "symmetric equilibria of a well-informed jury");
  PaymentOptions eq_pay;
  std::size_t eq_n = 100;
  double eq_rate = 1.0;
  eq_pay.attach(eq_cmd);
  eq_cmd->add_option("--n", eq_n, "jury size")->check(CLI::Range(2, 1 << 16));
  eq_cmd->add_option("--rate", eq_rate, "effort curve rate")->check(CLI::PositiveNumber);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "single best-response trajectory");
  PaymentOptions sim_pay;
  SimulationConfig sim;
  sim_pay.attach(sim_cmd);
  sim_cmd->add_option("--n", sim.n, "jury size")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--rho", sim.rho, "fraction of well-informed jurors")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--epsilon", sim.epsilon, "round-0 effort")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--rounds", sim.rounds, "best-response rounds")->check(CLI::PositiveNumber);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "correctness heatmap over (rho, x)");
  std::optional<std::string> preset, axis, name, payment_file, save_config;
  std::optional<double> x_min, x_max, epsilon, omega;
  std::optional<std::size_t> x_steps, rho_steps, n, rounds, samples;
  bool no_svg = false;
  sweep_cmd->add_option("--preset", preset, "fig1a | fig1b | fig1c, with optional -small suffix");
  sweep_cmd->add_option("--axis", axis, "reward-threshold | reward-award-loss | initial-effort");
  sweep_cmd->add_option("--x-min", x_min);
  sweep_cmd->add_option("--x-max", x_max);
  sweep_cmd->add_option("--x-steps", x_steps);
  sweep_cmd->add_option("--rho-steps", rho_steps);
  sweep_cmd->add_option("--n", n);
  sweep_cmd->add_option("--rounds", rounds);
  sweep_cmd->add_option("--samples", samples);
  sweep_cmd->add_option("--epsilon", epsilon, "round-0 effort on the reward axes");
  sweep_cmd->add_option("--omega", omega, "threshold reward on the effort axis");
  sweep_cmd->add_option("--payment-file", payment_file, "payment table used on the effort axis");
  sweep_cmd->add_option("--name", name, "output base name (default: preset name or 'sweep')");
  sweep_cmd->add_option("--save-config", save_config, "write the effective config as JSON");
  sweep_cmd->add_flag("--no-svg", no_svg, "skip the SVG heatmap");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::filesystem::path out_path(out_dir);
  try {
    if (*br_cmd) {
      const EffortProfile e(parse_effort_kind(br_kind), br_rate);
      out << describe(best_response_point(e, br_q)) << '\n';
    } else if (*check_cmd) {
      const PaymentFunction p = check_pay.build();
      const bool simple = check_simple_condition(p, check_n);
      const bool monotone = is_monotone_nondecreasing(p, check_n);
      out << "simple condition: " << (simple ? "satisfied" : "violated") << '\n';
      out << "monotone non-decreasing: " << (monotone ? "yes" : "no") << '\n';
    } else if (*design_cmd) {
      DesignOptions opts;
      opts.lower_bound = design_free ? -std::numeric_limits<double>::infinity() : design_lb;
      opts.require_monotone = design_monotone;
      opts.individual_rationality = design_ir;
      const DesignResult r =
          design_payments(design_n, design_x, EffortProfile::well_informed(design_rate), opts);
      const auto file = out_path / design_file;
      write_payment_table(r.payment.table()->values, file);
      out << "status: " << to_string(r.solution.status) << '\n'
          << "target Q: " << detail::format("%.10g", r.q_target) << '\n'
          << "equilibrium effort: " << fixed6(r.effort) << '\n'
          << "expected payment per agent: " << detail::format("%.10g", r.expected_cost) << '\n'
          << "simple condition: " << (r.simple_condition ? "satisfied" : "violated") << '\n'
          << "payment table: " << file.string() << '\n';
    } else if (*eq_cmd) {
      const PaymentFunction p = eq_pay.build();
      const auto roots = find_symmetric_equilibrium(EffortProfile::well_informed(eq_rate), p, eq_n);
      if (roots.empty()) {
        out << "none found\n";
      } else {
        for (double r : roots) out << "λ*=" << fixed6(r) << '\n';
      }
    } else if (*sim_cmd) {
      sim.payment = sim_pay.build(PaymentFunction::threshold(3.0));
      sim.seed = seed.value_or(0);
      const Trajectory traj = simulate(sim);
      if (out_given) {
        const auto file = out_path / "trajectory.csv";
        auto f = detail::open_for_write(file);
        write_trajectory(f, traj);
        detail::finish(f, file);
        out << "trajectory: " << file.string() << '\n';
      } else {
        write_trajectory(out, traj);
      }
      out << "final: " << (traj.final_correct ? "correct" : "incorrect") << '\n';
    } else if (*sweep_cmd) {
      SweepConfig c;
      std::string base = "sweep";
      if (preset) {
        auto p = sweep_preset(*preset);
        if (!p) throw UsageError("unknown preset '" + *preset + "'");
        c = *p;
        base = *preset;
      }
      if (config_file) {
        if (preset) throw UsageError("use either --preset or --config");
        c = load_sweep_config(*config_file);
      }
      if (axis) c.axis = parse_sweep_axis(*axis);
      if (x_min) c.x_min = *x_min;
      if (x_max) c.x_max = *x_max;
      if (x_steps) c.x_steps = *x_steps;
      if (rho_steps) c.rho_steps = *rho_steps;
      if (n) c.n = *n;
      if (rounds) c.rounds = *rounds;
      if (samples) c.samples = *samples;
      if (epsilon) c.epsilon = *epsilon;
      if (omega) c.omega = *omega;
      if (seed) c.seed = *seed;
      if (payment_file) c.payment_table = read_payment_table(std::filesystem::path(*payment_file));
      if (name) base = *name;
      c.validate();
      if (save_config) save_sweep_config(c, *save_config);

      const SweepResult result = run_sweep(c, threads);
      const auto csv = out_path / (base + ".csv");
      write_csv(result, csv);
      out << "csv: " << csv.string() << '\n';
      if (!no_svg) {
        const auto svg = out_path / (base + ".svg");
        render_heatmap(result, svg);
        out << "svg: " << svg.string() << '\n';
      }
      out << "cells: " << result.grid.size() << ", threads: " << result.threads
          << ", elapsed: " << detail::format("%.2f", result.elapsed_seconds) << " s\n";
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("juror");
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace juror

#endif  // JUROR_CLI_HPP_
