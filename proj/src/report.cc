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

#include "covert/report.h"

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace covert {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    auto line = text.substr(pos, next - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = next + 1;
  }
  return lines;
}

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(',', pos);
    fields.emplace_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return fields;
}

double ToDouble(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw StrategyFileError("line " + std::to_string(line) + ": bad number '" +
                            s + "'");
  }
  return v;
}

bool Close(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)); }

}  // namespace

std::string FormatNumber(double v) {
  if (v == 0.0) return "0";  // no negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string RowStrategyCsv(const std::vector<JointAction>& actions,
                           const MixedStrategy& strategy, double floor) {
  std::string out = "power_index,jam_index,power_mw,jam_mw,probability\n";
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (!(strategy[k] > floor)) continue;
    const auto& a = actions[k];
    out += std::to_string(a.power_index) + "," + std::to_string(a.jam_index) +
           "," + FormatNumber(a.power_mw) + "," + FormatNumber(a.jam_mw) + "," +
           FormatNumber(strategy[k]) + "\n";
  }
  return out;
}

std::string ColStrategyCsv(const std::vector<double>& thresholds,
                           const MixedStrategy& strategy, double floor) {
  std::string out = "threshold_index,threshold_mw,probability\n";
  for (std::size_t m = 0; m < thresholds.size(); ++m) {
    if (!(strategy[m] > floor)) continue;
    out += std::to_string(m + 1) + "," + FormatNumber(thresholds[m]) + "," +
           FormatNumber(strategy[m]) + "\n";
  }
  return out;
}

MixedStrategy ParseRowStrategyCsv(std::string_view text, const Scenario& s) {
  const auto actions = JointActions(s);
  const auto lines = SplitLines(text);
  if (lines.empty() || lines.front().rfind("power_index,", 0) != 0) {
    throw StrategyFileError("row strategy: missing header");
  }
  std::vector<double> p(actions.size(), 0.0);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const int line = static_cast<int>(n + 1);
    const auto f = SplitFields(lines[n]);
    if (f.size() != 5) {
      throw StrategyFileError("row strategy line " + std::to_string(line) +
                              ": expected 5 fields");
    }
    const double power = ToDouble(f[2], line);
    const double jam = ToDouble(f[3], line);
    const double prob = ToDouble(f[4], line);
    std::size_t k = 0;
    for (; k < actions.size(); ++k) {
      if (Close(actions[k].power_mw, power) && Close(actions[k].jam_mw, jam)) break;
    }
    if (k == actions.size()) {
      throw StrategyFileError("row strategy line " + std::to_string(line) +
                              ": (" + f[2] + " mW, " + f[3] +
                              " mW) is not an action of the scenario");
    }
    p[k] += prob;
  }
  MixedStrategy out{std::move(p)};
  try {
    out.Validate(1e-6);
  } catch (const std::invalid_argument& e) {
    throw StrategyFileError(std::string("row strategy: ") + e.what());
  }
  return out;
}

MixedStrategy ParseColStrategyCsv(std::string_view text, const Scenario& s) {
  const auto lines = SplitLines(text);
  if (lines.empty() || lines.front().rfind("threshold_index,", 0) != 0) {
    throw StrategyFileError("threshold strategy: missing header");
  }
  std::vector<double> p(s.threshold_grid.size(), 0.0);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const int line = static_cast<int>(n + 1);
    const auto f = SplitFields(lines[n]);
    if (f.size() != 3) {
      throw StrategyFileError("threshold strategy line " + std::to_string(line) +
                              ": expected 3 fields");
    }
    const double t = ToDouble(f[1], line);
    const double prob = ToDouble(f[2], line);
    std::size_t m = 0;
    for (; m < s.threshold_grid.size(); ++m) {
      if (Close(s.threshold_grid[m], t)) break;
    }
    if (m == s.threshold_grid.size()) {
      throw StrategyFileError("threshold strategy line " + std::to_string(line) +
                              ": " + f[1] + " is not on the threshold grid");
    }
    p[m] += prob;
  }
  MixedStrategy out{std::move(p)};
  try {
    out.Validate(1e-6);
  } catch (const std::invalid_argument& e) {
    throw StrategyFileError(std::string("threshold strategy: ") + e.what());
  }
  return out;
}

std::string TradeoffCsv(const std::vector<TradeoffPoint>& points) {
  std::string out = "beta,expected_rate,pfa,pm,dep,game_value\n";
  for (const auto& p : points) {
    out += FormatNumber(p.beta) + "," + FormatNumber(p.expected_rate) + "," +
           FormatNumber(p.pfa) + "," + FormatNumber(p.pm) + "," +
           FormatNumber(p.dep) + "," + FormatNumber(p.game_value) + "\n";
  }
  return out;
}

std::string BaselineCsv(const std::vector<BaselineResult>& results) {
  std::string out = "label,parameter,best_threshold,expected_rate,pfa,pm,dep\n";
  for (const auto& r : results) {
    out += r.label + "," + FormatNumber(r.parameter) + "," +
           FormatNumber(r.best_threshold) + "," + FormatNumber(r.expected_rate) +
           "," + FormatNumber(r.pfa) + "," + FormatNumber(r.pm) + "," +
           FormatNumber(r.dep) + "\n";
  }
  return out;
}

std::string DominanceCsv(const DominanceReport& report) {
  std::string out = "label,parameter,dep,baseline_rate,game_rate,advantage\n";
  for (const auto& r : report.rows) {
    out += r.label + "," + FormatNumber(r.parameter) + "," + FormatNumber(r.dep) +
           "," + FormatNumber(r.baseline_rate) + "," +
           (r.game_rate ? FormatNumber(*r.game_rate) : std::string("NA")) + "," +
           (r.game_rate ? FormatNumber(r.advantage()) : std::string("NA")) + "\n";
  }
  return out;
}

std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string Hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
  return buf;
}

std::string ManifestBody(const RunManifest& m) {
  std::string out;
  out += "tool_version = " + std::string(kToolVersion) + "\n";
  out += "subcommand = " + m.subcommand + "\n";
  out += "scenario = " + m.scenario + "\n";
  for (const auto& o : m.overrides) out += "override = " + o + "\n";
  for (const auto& [k, v] : m.parameters) out += k + " = " + v + "\n";
  out += "output_dir = " + m.output_dir + "\n";
  for (const auto& [file, hash] : m.outputs) {
    out += "output = " + file + " fnv1a64:" + Hex(hash) + "\n";
  }
  return out;
}

}  // namespace

std::uint64_t RunManifest::ContentHash() const {
  return Fnv1a64(ManifestBody(*this));
}

std::string RunManifest::Format() const {
  return ManifestBody(*this) + "content_hash = fnv1a64:" + Hex(ContentHash()) +
         "\n" + "timestamp = " + timestamp + "\n";
}

}  // namespace covert
