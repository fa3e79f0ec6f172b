// Copyright 2026 The covertgame Authors.
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

#include "covert/model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "covert/rate.h"

namespace covert {
namespace {

constexpr double kGridQuantum = 1e12;

double RoundToQuantum(double v) {
  return std::round(v * kGridQuantum) / kGridQuantum;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseReal(std::string_view text, std::string_view key, int line) {
  text = Trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(v)) {
    throw ScenarioError("key '" + std::string(key) + "': cannot parse '" +
                            std::string(text) + "' as a real number",
                        line);
  }
  return v;
}

int ParseInt(std::string_view text, std::string_view key, int line) {
  text = Trim(text);
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ScenarioError("key '" + std::string(key) + "': cannot parse '" +
                            std::string(text) + "' as an integer",
                        line);
  }
  return v;
}

std::vector<double> ParseGrid(std::string_view text, std::string_view key,
                              int line) {
  text = Trim(text);
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
      const auto next = text.find(':', pos);
      parts.push_back(text.substr(pos, next - pos));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) {
      throw ScenarioError("key '" + std::string(key) +
                              "': range must be start:step:stop",
                          line);
    }
    const double start = ParseReal(parts[0], key, line);
    const double step = ParseReal(parts[1], key, line);
    const double stop = ParseReal(parts[2], key, line);
    try {
      return MakeGrid(start, step, stop);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("key '" + std::string(key) + "': " + e.what(), line);
    }
  }
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    values.push_back(ParseReal(text.substr(pos, next - pos), key, line));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return values;
}

std::string FormatReal(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void CheckGrid(const std::vector<double>& grid, const char* name,
               bool allow_zero) {
  if (grid.empty()) throw ScenarioError(std::string(name) + " is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double v = grid[k];
    if (!std::isfinite(v) || v < 0.0 || (!allow_zero && v == 0.0)) {
      throw ScenarioError(std::string(name) + " entry " + FormatReal(v) +
                          (allow_zero ? " must be >= 0" : " must be > 0"));
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw ScenarioError(std::string(name) +
                          " must be strictly increasing without duplicates");
    }
  }
}

}  // namespace

MixedStrategy MixedStrategy::Uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Uniform: empty action set");
  return {std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

MixedStrategy MixedStrategy::PointMass(std::size_t n, std::size_t index) {
  if (index >= n) throw std::invalid_argument("PointMass: index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return {std::move(p)};
}

void MixedStrategy::Validate(double tol) const {
  if (probs.empty()) throw std::invalid_argument("strategy is empty");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= -tol) || !std::isfinite(p)) {
      throw std::invalid_argument("strategy has a negative or non-finite "
                                  "probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("strategy sums to " + FormatReal(total) +
                                ", not 1");
  }
}

bool Scenario::HasJammer() const {
  return !(jam_grid.size() == 1 && jam_grid.front() == 0.0);
}

double Scenario::SnrAtBob(double power_mw, double jam_mw) const {
  return power_mw / (sigma_b_sq_mw + alpha * alpha * jam_mw);
}

std::vector<double> MakeGrid(double start, double step, double stop) {
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) ||
      !std::isfinite(stop)) {
    throw std::invalid_argument("grid needs step > 0 and stop >= start");
  }
  const double span = (stop - start) / step;
  const auto count = static_cast<long long>(std::llround(span)) + 1;
  if (std::abs(span - static_cast<double>(count - 1)) > 1e-9 * (1.0 + span)) {
    throw std::invalid_argument("grid stop is not reachable in whole steps");
  }
  if (count > 10'000'000) throw std::invalid_argument("grid too large");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    grid.push_back(RoundToQuantum(start + static_cast<double>(k) * step));
  }
  return grid;
}

std::vector<JointAction> AllJointActions(const Scenario& s) {
  std::vector<JointAction> actions;
  actions.reserve(s.power_grid.size() * s.jam_grid.size());
  for (std::size_t l = 0; l < s.jam_grid.size(); ++l) {
    for (std::size_t i = 0; i < s.power_grid.size(); ++i) {
      actions.push_back({s.power_grid[i], s.jam_grid[l],
                         static_cast<int>(i + 1), static_cast<int>(l + 1)});
    }
  }
  return actions;
}

std::vector<JointAction> JointActions(const Scenario& s) {
  return s.joint_actions.empty() ? AllJointActions(s) : s.joint_actions;
}

void Validate(const Scenario& s) {
  if (s.blocklength_n < 1) throw ScenarioError("blocklength_n must be >= 1");
  if (!(s.sigma_b_sq_mw > 0.0) || !std::isfinite(s.sigma_b_sq_mw)) {
    throw ScenarioError("sigma_b_sq_mw must be positive");
  }
  if (!(s.sigma_w_sq_mw > 0.0) || !std::isfinite(s.sigma_w_sq_mw)) {
    throw ScenarioError("sigma_w_sq_mw must be positive");
  }
  if (!(s.delta > 0.0 && s.delta < 1.0)) {
    throw ScenarioError("delta must lie in (0, 1)");
  }
  if (!(s.alpha >= 0.0) || !std::isfinite(s.alpha)) {
    throw ScenarioError("alpha must be >= 0");
  }
  if (!(s.beta > 0.0) || !std::isfinite(s.beta)) {
    throw ScenarioError("beta must be > 0");
  }
  CheckGrid(s.power_grid, "power_grid", /*allow_zero=*/false);
  CheckGrid(s.jam_grid, "jam_grid", /*allow_zero=*/true);
  CheckGrid(s.threshold_grid, "threshold_grid", /*allow_zero=*/true);
  for (const auto& a : s.joint_actions) {
    if (a.power_index < 1 ||
        a.power_index > static_cast<int>(s.power_grid.size()) ||
        a.jam_index < 1 || a.jam_index > static_cast<int>(s.jam_grid.size()) ||
        s.power_grid[a.power_index - 1] != a.power_mw ||
        s.jam_grid[a.jam_index - 1] != a.jam_mw) {
      throw ScenarioError("joint action does not match the grids");
    }
  }
}

Scenario DefaultScenario(bool with_jammer) {
  Scenario s;
  s.blocklength_n = 200;
  s.sigma_b_sq_mw = DbToLinear(0.0);
  s.sigma_w_sq_mw = DbToLinear(0.0);
  s.delta = 0.1;
  s.alpha = 1.0;
  s.power_grid = MakeGrid(0.01, 0.01, 1.0);
  s.threshold_grid = MakeGrid(0.0, 0.01, 3.0);
  if (with_jammer) {
    s.beta = 1.5;
    s.jam_grid = MakeGrid(0.0, 0.01, 1.0);
  } else {
    s.beta = 1.6;
    s.jam_grid = {0.0};
  }
  return s;
}

Scenario DeskJammerScenario() {
  Scenario s = DefaultScenario(/*with_jammer=*/true);
  s.power_grid = MakeGrid(0.05, 0.05, 1.0);
  s.jam_grid = MakeGrid(0.0, 0.05, 1.0);
  return s;
}

Scenario PruneNegativeRate(const Scenario& s) {
  Scenario out = s;
  out.joint_actions.clear();
  for (const auto& a : JointActions(s)) {
    if (ActionRate(s, a) >= 0.0) out.joint_actions.push_back(a);
  }
  if (out.joint_actions.empty()) {
    throw ScenarioError("every joint action has a negative rate");
  }
  return out;
}

double LinearToDb(double linear) { return 10.0 * std::log10(linear); }
double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

void ApplySetting(Scenario& s, std::string_view key, std::string_view value,
                  int line) {
  key = Trim(key);
  if (key == "blocklength_n") {
    s.blocklength_n = ParseInt(value, key, line);
  } else if (key == "sigma_b_sq_mw") {
    s.sigma_b_sq_mw = ParseReal(value, key, line);
  } else if (key == "sigma_w_sq_mw") {
    s.sigma_w_sq_mw = ParseReal(value, key, line);
  } else if (key == "delta") {
    s.delta = ParseReal(value, key, line);
  } else if (key == "alpha") {
    s.alpha = ParseReal(value, key, line);
  } else if (key == "beta") {
    s.beta = ParseReal(value, key, line);
  } else if (key == "power_grid") {
    s.power_grid = ParseGrid(value, key, line);
    s.joint_actions.clear();
  } else if (key == "jam_grid") {
    s.jam_grid = ParseGrid(value, key, line);
    s.joint_actions.clear();
  } else if (key == "threshold_grid") {
    s.threshold_grid = ParseGrid(value, key, line);
  } else {
    throw ScenarioError("unknown key '" + std::string(key) + "'", line);
  }
}

Scenario ParseScenario(std::string_view text, const Scenario& base) {
  Scenario s = base;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ScenarioError("expected 'key = value', got '" + std::string(line) +
                              "'",
                          line_no);
    }
    ApplySetting(s, line.substr(0, eq), line.substr(eq + 1), line_no);
  }
  try {
    Validate(s);
  } catch (const ScenarioError& e) {
    throw ScenarioError(e.what(), e.line());
  }
  return s;
}

Scenario ReadScenarioFile(const std::filesystem::path& path,
                          const Scenario& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str(), base);
}

std::string FormatScenario(const Scenario& s) {
  auto list = [](const std::vector<double>& grid) {
    std::string out;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (k > 0) out += ", ";
      out += FormatReal(grid[k]);
    }
    return out;
  };
  std::string out;
  out += "blocklength_n = " + std::to_string(s.blocklength_n) + "\n";
  out += "sigma_b_sq_mw = " + FormatReal(s.sigma_b_sq_mw) + "\n";
  out += "sigma_w_sq_mw = " + FormatReal(s.sigma_w_sq_mw) + "\n";
  out += "delta = " + FormatReal(s.delta) + "\n";
  out += "alpha = " + FormatReal(s.alpha) + "\n";
  out += "beta = " + FormatReal(s.beta) + "\n";
  out += "power_grid = " + list(s.power_grid) + "\n";
  out += "jam_grid = " + list(s.jam_grid) + "\n";
  out += "threshold_grid = " + list(s.threshold_grid) + "\n";
  return out;
}

}  // namespace covert
