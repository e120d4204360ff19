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

#ifndef JUROR_IO_HPP_
#define JUROR_IO_HPP_

// File formats:
//
//   sweep CSV       header "rho,x,correctness"; one row per cell, rho-major
//                   ascending; rho and x with 6 decimals, correctness with 4.
//   payment table   header "k,p"; row k gives p(k/n), k = 1..n, printed with
//                   17 significant digits so that values round-trip exactly.
//   sweep config    JSON object; see sweep_config_to_json for the keys.
//                   Unknown keys are rejected.
//   heatmap SVG     one rect per cell, red (0) -> white (1/2) -> green (1).

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "juror/sweep.hpp"

namespace juror {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
  }
  return out;
}

inline std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading: " + std::strerror(errno));
  }
  return in;
}

inline void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

// ---------------------------------------------------------------- sweep CSV

inline void write_csv(const SweepResult& result, std::ostream& out) {
  const SweepConfig& c = result.config;
  out << "rho,x,correctness\n";
  for (std::size_t i = 0; i < c.rho_steps; ++i) {
    for (std::size_t j = 0; j < c.x_steps; ++j) {
      out << detail::format("%.6f", c.rho_at(i)) << ',' << detail::format("%.6f", c.x_at(j)) << ','
          << detail::format("%.4f", result.at(i, j)) << '\n';
    }
  }
}

inline std::string csv_string(const SweepResult& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

inline void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  auto out = detail::open_for_write(path);
  write_csv(result, out);
  detail::finish(out, path);
}

struct CsvCell {
  double rho = 0.0;
  double x = 0.0;
  double correctness = 0.0;
};

inline std::vector<CsvCell> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::strip_cr(line) != "rho,x,correctness") {
    throw IoError("sweep CSV: missing 'rho,x,correctness' header");
  }
  std::vector<CsvCell> cells;
  while (std::getline(in, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 3) throw IoError("sweep CSV: malformed row '" + line + "'");
    cells.push_back({std::stod(f[0]), std::stod(f[1]), std::stod(f[2])});
  }
  return cells;
}

inline std::vector<CsvCell> read_csv(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  return read_csv(in);
}

// ------------------------------------------------------------- heatmap SVG

struct Rgb {
  int r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Linear red -> white -> green scale. Channels round half down, so 0.25 maps
// to 510 * 0.25 = 127.5 -> 127 (#FF7F7F).
inline Rgb heatmap_color(double c) {
  c = std::clamp(c, 0.0, 1.0);
  const auto channel = [](double v) { return static_cast<int>(std::ceil(v - 0.5)); };
  if (c <= 0.5) {
    const int v = channel(510.0 * c);
    return {255, v, v};
  }
  const int v = channel(510.0 * (1.0 - c));
  return {v, 255, v};
}

inline std::string to_hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", c.r, c.g, c.b);
  return buf;
}

inline std::string axis_label(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::RewardThreshold: return "threshold reward per majority juror (omega)";
    case SweepAxis::RewardAwardLoss: return "total award/loss (omega)";
    case SweepAxis::InitialEffort: return "initial effort (epsilon)";
  }
  return "x";
}

inline void render_heatmap(const SweepResult& result, std::ostream& out) {
  const SweepConfig& c = result.config;
  constexpr double left = 90, top = 30, width = 500, height = 500;
  constexpr double legend_x = left + width + 40, legend_w = 24;
  constexpr double total_w = legend_x + legend_w + 70, total_h = top + height + 70;
  const double cw = width / static_cast<double>(c.x_steps);
  const double ch = height / static_cast<double>(c.rho_steps);

  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\""
      << total_h << "\" viewBox=\"0 0 " << total_w << ' ' << total_h << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << total_w << "\" height=\"" << total_h
      << "\" fill=\"#FFFFFF\"/>\n";
  out << "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < c.rho_steps; ++i) {
    // rho grows upwards.
    const double y = top + height - static_cast<double>(i + 1) * ch;
    for (std::size_t j = 0; j < c.x_steps; ++j) {
      const double x = left + static_cast<double>(j) * cw;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << ch
          << "\" fill=\"" << to_hex(heatmap_color(result.at(i, j))) << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width << "\" height=\""
      << height << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  // Axis ticks at the ends and the middle of each range.
  out << "<g id=\"axes\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double f : {0.0, 0.5, 1.0}) {
    const double x = left + f * width;
    const double xv = c.x_min + f * (c.x_max - c.x_min);
    out << "<line x1=\"" << x << "\" y1=\"" << top + height << "\" x2=\"" << x << "\" y2=\""
        << top + height + 5 << "\" stroke=\"#000000\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << top + height + 20 << "\" text-anchor=\"middle\">"
        << detail::format("%g", xv) << "</text>\n";
    const double y = top + height - f * height;
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
        << "\" stroke=\"#000000\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
        << detail::format("%g", f) << "</text>\n";
  }
  out << "<text id=\"x-label\" x=\"" << left + width / 2 << "\" y=\"" << top + height + 45
      << "\" text-anchor=\"middle\">" << axis_label(c.axis) << "</text>\n";
  out << "<text id=\"y-label\" x=\"" << 30 << "\" y=\"" << top + height / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 30 " << top + height / 2
      << ")\">fraction of well-informed jurors (rho)</text>\n";
  out << "</g>\n";

  // Legend: 0 at the bottom, 1 at the top.
  constexpr int kLegendSteps = 50;
  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lh = height / kLegendSteps;
  for (int s = 0; s < kLegendSteps; ++s) {
    const double v = (s + 0.5) / kLegendSteps;
    const double y = top + height - (s + 1) * lh;
    out << "<rect x=\"" << legend_x << "\" y=\"" << y << "\" width=\"" << legend_w
        << "\" height=\"" << lh << "\" fill=\"" << to_hex(heatmap_color(v)) << "\"/>\n";
  }
  out << "<rect x=\"" << legend_x << "\" y=\"" << top << "\" width=\"" << legend_w
      << "\" height=\"" << height << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (double f : {0.0, 0.5, 1.0}) {
    out << "<text x=\"" << legend_x + legend_w + 6 << "\" y=\"" << top + height - f * height + 4
        << "\">" << detail::format("%g", f) << "</text>\n";
  }
  out << "<text x=\"" << legend_x + legend_w / 2 << "\" y=\"" << top - 10
      << "\" text-anchor=\"middle\">correctness</text>\n";
  out << "</g>\n</svg>\n";
}

inline void render_heatmap(const SweepResult& result, const std::filesystem::path& path) {
  auto out = detail::open_for_write(path);
  render_heatmap(result, out);
  detail::finish(out, path);
}

// ----------------------------------------------------------- payment table

inline void write_payment_table(std::span<const double> values, std::ostream& out) {
  out << "k,p\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << k + 1 << ',' << detail::format("%.17g", values[k]) << '\n';
  }
}

inline void write_payment_table(std::span<const double> values,
                                const std::filesystem::path& path) {
  auto out = detail::open_for_write(path);
  write_payment_table(values, out);
  detail::finish(out, path);
}

inline std::vector<double> read_payment_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::strip_cr(line) != "k,p") {
    throw IoError("payment table: missing 'k,p' header");
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 2) throw IoError("payment table: malformed row '" + line + "'");
    std::size_t k = 0;
    double p = 0.0;
    try {
      k = std::stoul(f[0]);
      p = std::stod(f[1]);
    } catch (const std::exception&) {
      throw IoError("payment table: malformed row '" + line + "'");
    }
    if (k != values.size() + 1) {
      throw IoError("payment table: expected k = " + std::to_string(values.size() + 1) +
                    ", got " + f[0]);
    }
    values.push_back(p);
  }
  if (values.empty()) throw IoError("payment table: no rows");
  return values;
}

inline std::vector<double> read_payment_table(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  try {
    return read_payment_table(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

// ------------------------------------------------------------ sweep config

inline nlohmann::json sweep_config_to_json(const SweepConfig& c) {
  nlohmann::json j = {
      {"axis", std::string(to_string(c.axis))},
      {"x_min", c.x_min},
      {"x_max", c.x_max},
      {"x_steps", c.x_steps},
      {"rho_steps", c.rho_steps},
      {"n", c.n},
      {"rounds", c.rounds},
      {"samples", c.samples},
      {"epsilon", c.epsilon},
      {"omega", c.omega},
      {"seed", c.seed},
  };
  if (c.payment_table) j["payment_table"] = *c.payment_table;
  return j;
}

// Missing keys keep their defaults; unknown keys are errors.
inline SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
  SweepConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "axis") c.axis = parse_sweep_axis(value.get<std::string>());
      else if (key == "x_min") c.x_min = value.get<double>();
      else if (key == "x_max") c.x_max = value.get<double>();
      else if (key == "x_steps") c.x_steps = value.get<std::size_t>();
      else if (key == "rho_steps") c.rho_steps = value.get<std::size_t>();
      else if (key == "n") c.n = value.get<std::size_t>();
      else if (key == "rounds") c.rounds = value.get<std::size_t>();
      else if (key == "samples") c.samples = value.get<std::size_t>();
      else if (key == "epsilon") c.epsilon = value.get<double>();
      else if (key == "omega") c.omega = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "payment_table") c.payment_table = value.get<std::vector<double>>();
      else throw std::invalid_argument("unknown sweep config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("sweep config key '" + key + "': " + e.what());
    }
  }
  c.validate();
  return c;
}

inline SweepConfig load_sweep_config(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return sweep_config_from_json(j);
}

inline void save_sweep_config(const SweepConfig& c, const std::filesystem::path& path) {
  auto out = detail::open_for_write(path);
  out << sweep_config_to_json(c).dump(2) << '\n';
  detail::finish(out, path);
}

}  // namespace juror

#endif  // JUROR_IO_HPP_
