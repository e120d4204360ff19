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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "juror/io.hpp"
#include "juror/sweep.hpp"

namespace juror {
namespace {

namespace fs = std::filesystem;

SweepConfig tiny_config() {
  SweepConfig c;
  c.x_steps = 4;
  c.rho_steps = 3;
  c.n = 21;
  c.rounds = 10;
  c.samples = 4;
  return c;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("juror_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

TEST(SweepConfigTest, GridEndpointsAndCells) {
  const SweepConfig c = tiny_config();
  EXPECT_DOUBLE_EQ(c.x_at(0), 0.0);
  EXPECT_DOUBLE_EQ(c.x_at(3), 5.0);
  EXPECT_DOUBLE_EQ(c.rho_at(0), 0.0);
  EXPECT_DOUBLE_EQ(c.rho_at(2), 1.0);
  const auto cell = c.cell(1, 2);
  EXPECT_DOUBLE_EQ(cell.rho, 0.5);
  EXPECT_EQ(cell.payment, PaymentFunction::threshold(c.x_at(2)));
  EXPECT_EQ(cell.seed, derive_seed(c.seed, 1 * 4 + 2));

  SweepConfig e = c;
  e.axis = SweepAxis::InitialEffort;
  EXPECT_DOUBLE_EQ(e.cell(0, 3).epsilon, 5.0);
  EXPECT_EQ(e.cell(0, 3).payment, PaymentFunction::threshold(3.0));
  e.axis = SweepAxis::RewardAwardLoss;
  EXPECT_EQ(e.cell(0, 1).payment, PaymentFunction::award_loss(e.x_at(1)));
}

TEST(SweepConfigTest, Validation) {
  SweepConfig c = tiny_config();
  c.x_steps = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = tiny_config();
  c.x_max = c.x_min;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = tiny_config();
  c.payment_table = std::vector<double>(21, 1.0);
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.axis = SweepAxis::InitialEffort;
  EXPECT_NO_THROW(c.validate());
  c.payment_table = std::vector<double>(20, 1.0);
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(SweepPresetTest, Definitions) {
  const auto a = sweep_preset("fig1a");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->axis, SweepAxis::RewardThreshold);
  EXPECT_EQ(a->x_min, 0.0);
  EXPECT_EQ(a->x_max, 5.0);
  EXPECT_EQ(a->x_steps, 100u);
  EXPECT_EQ(a->rho_steps, 100u);
  EXPECT_EQ(a->n, 100u);
  EXPECT_EQ(a->rounds, 50u);
  EXPECT_EQ(a->samples, 20u);
  EXPECT_EQ(a->epsilon, 1.0);

  const auto b = sweep_preset("fig1b");
  ASSERT_TRUE(b);
  EXPECT_EQ(b->axis, SweepAxis::RewardAwardLoss);
  EXPECT_EQ(b->x_max, 2500.0);

  const auto c = sweep_preset("fig1c");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->axis, SweepAxis::InitialEffort);
  EXPECT_EQ(c->omega, 3.0);
  EXPECT_EQ(c->x_max, 5.0);

  const auto s = sweep_preset("fig1a-small");
  ASSERT_TRUE(s);
  EXPECT_EQ(s->x_steps, 20u);
  EXPECT_EQ(s->rho_steps, 20u);
  EXPECT_EQ(s->samples, 10u);
  EXPECT_FALSE(sweep_preset("fig2"));
  EXPECT_EQ(parse_sweep_axis(to_string(SweepAxis::RewardAwardLoss)), SweepAxis::RewardAwardLoss);
  EXPECT_THROW(parse_sweep_axis("bogus"), std::invalid_argument);
}

TEST(RunSweepTest, IndependentOfThreadCount) {
  const SweepConfig c = tiny_config();
  const auto one = run_sweep(c, 1);
  const auto four = run_sweep(c, 4);
  EXPECT_EQ(one.grid, four.grid);
  EXPECT_EQ(csv_string(one), csv_string(four));
  EXPECT_EQ(four.threads, 4u);
  for (double v : one.grid) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  // Each cell equals a direct estimate with its own seed.
  for (std::size_t i = 0; i < c.rho_steps; ++i) {
    for (std::size_t j = 0; j < c.x_steps; ++j) {
      EXPECT_EQ(one.at(i, j), correctness_estimate(c.cell(i, j), c.samples));
    }
  }
}

TEST(CsvTest, OrderAndRoundTrip) {
  const auto result = run_sweep(tiny_config());
  const std::string text = csv_string(result);
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "rho,x,correctness");
  std::istringstream again(text);
  const auto cells = read_csv(again);
  ASSERT_EQ(cells.size(), 12u);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j, ++k) {
      EXPECT_NEAR(cells[k].rho, result.config.rho_at(i), 5e-7);
      EXPECT_NEAR(cells[k].x, result.config.x_at(j), 5e-7);
      EXPECT_NEAR(cells[k].correctness, result.at(i, j), 5e-5);
    }
  }
  EXPECT_NE(text.find("\n0.500000,1.666667,"), std::string::npos);
}

TEST(CsvTest, RejectsMalformedInput) {
  std::istringstream no_header("a,b,c\n");
  EXPECT_THROW(read_csv(no_header), IoError);
  std::istringstream bad_row("rho,x,correctness\n1,2\n");
  EXPECT_THROW(read_csv(bad_row), IoError);
}

TEST(HeatmapTest, ColorScale) {
  EXPECT_EQ(to_hex(heatmap_color(0.0)), "#FF0000");
  EXPECT_EQ(to_hex(heatmap_color(0.25)), "#FF7F7F");
  EXPECT_EQ(to_hex(heatmap_color(0.5)), "#FFFFFF");
  EXPECT_EQ(to_hex(heatmap_color(0.75)), "#7FFF7F");
  EXPECT_EQ(to_hex(heatmap_color(1.0)), "#00FF00");
  EXPECT_EQ(heatmap_color(-1.0), heatmap_color(0.0));
  EXPECT_EQ(heatmap_color(2.0), heatmap_color(1.0));
}

TEST(HeatmapTest, OneRectPerCell) {
  const auto result = run_sweep(tiny_config());
  std::ostringstream out;
  render_heatmap(result, out);
  const std::string svg = out.str();
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto begin = svg.find("<g id=\"cells\"");
  const auto end = svg.find("</g>", begin);
  ASSERT_NE(begin, std::string::npos);
  EXPECT_EQ(count_occurrences(svg.substr(begin, end - begin), "<rect"), 12u);
  EXPECT_NE(svg.find("threshold reward"), std::string::npos);
  EXPECT_NE(svg.find("correctness"), std::string::npos);
}

TEST(PaymentTableTest, RoundTripsExactly) {
  const std::vector<double> values{0.0, 1.0 / 3.0, 2.5e-17, 123456.789, -4.0};
  std::ostringstream out;
  write_payment_table(values, out);
  EXPECT_EQ(out.str().rfind("k,p\n1,0\n", 0), 0u);
  std::istringstream in(out.str());
  EXPECT_EQ(read_payment_table(in), values);

  const fs::path dir = scratch_dir("table");
  write_payment_table(values, dir / "nested" / "p.csv");
  EXPECT_EQ(read_payment_table(dir / "nested" / "p.csv"), values);
  fs::remove_all(dir);
}

TEST(PaymentTableTest, RejectsMalformedInput) {
  std::istringstream skipped("k,p\n1,0.5\n3,0.7\n");
  EXPECT_THROW(read_payment_table(skipped), IoError);
  std::istringstream empty("k,p\n");
  EXPECT_THROW(read_payment_table(empty), IoError);
  std::istringstream junk("k,p\n1,abc\n");
  EXPECT_THROW(read_payment_table(junk), IoError);
}

TEST(ConfigTest, JsonRoundTrip) {
  SweepConfig c = tiny_config();
  c.axis = SweepAxis::InitialEffort;
  c.payment_table = std::vector<double>(21, 0.25);
  c.seed = 0xFFFFFFFFFFFFFFFFULL;
  EXPECT_EQ(sweep_config_from_json(sweep_config_to_json(c)), c);

  const fs::path dir = scratch_dir("config");
  save_sweep_config(c, dir / "c.json");
  EXPECT_EQ(load_sweep_config(dir / "c.json"), c);
  fs::remove_all(dir);
}

TEST(ConfigTest, PartialAndInvalid) {
  const auto partial = sweep_config_from_json(nlohmann::json{{"samples", 3}});
  SweepConfig expected;
  expected.samples = 3;
  EXPECT_EQ(partial, expected);
  EXPECT_THROW(sweep_config_from_json(nlohmann::json{{"sample", 3}}), std::invalid_argument);
  EXPECT_THROW(sweep_config_from_json(nlohmann::json{{"n", "many"}}), std::invalid_argument);
  EXPECT_THROW(sweep_config_from_json(nlohmann::json::array()), std::invalid_argument);
  EXPECT_THROW(sweep_config_from_json(nlohmann::json{{"x_steps", 1}}), std::invalid_argument);
}

TEST(IoErrorTest, MessagesNamePath) {
  const fs::path missing = scratch_dir("missing") / "nope.csv";
  try {
    read_payment_table(missing);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("nope.csv"), std::string::npos);
  }
  const fs::path dir = scratch_dir("bad");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "t.csv");
    f << "k,p\n2,1\n";
  }
  try {
    read_payment_table(dir / "t.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("t.csv"), std::string::npos);
  }
  EXPECT_THROW(load_sweep_config(dir / "absent.json"), IoError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace juror
