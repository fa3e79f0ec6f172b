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


// covertgame: equilibrium strategies, tradeoff sweeps, baselines and Monte
// Carlo checks for the covert communication games.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covert/detection.h"
#include "covert/experiments.h"
#include "covert/matrixgame.h"
#include "covert/model.h"
#include "covert/rate.h"
#include "covert/report.h"
#include "covert/simkit.h"

namespace fs = std::filesystem;

namespace covert {
namespace {

constexpr int kInputError = 2;
constexpr int kSolverError = 3;

// Bad user input: scenario, overrides, flags or strategy files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonFlags {
  std::string scenario_path;
  std::vector<std::string> overrides;
  std::string out_dir = ".";
  bool jammer = false;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--scenario", f.scenario_path, "scenario file (key = value lines)");
  cmd->add_option("--set", f.overrides, "override KEY=VALUE, repeatable")
      ->take_all();
  cmd->add_option("--out", f.out_dir, "output directory")->capture_default_str();
  cmd->add_flag("--jammer", f.jammer, "start from the jammer preset");
}

Scenario LoadScenario(const CommonFlags& f) {
  Scenario s = DefaultScenario(f.jammer);
  if (!f.scenario_path.empty()) {
    if (!fs::exists(f.scenario_path)) {
      throw InputError("cannot read scenario file '" + f.scenario_path + "'");
    }
    s = ReadScenarioFile(f.scenario_path, s);
  }
  for (const auto& o : f.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("override '" + o + "' is not KEY=VALUE");
    }
    ApplySetting(s, o.substr(0, eq), o.substr(eq + 1));
  }
  Validate(s);
  return s;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class OutputSet {
 public:
  OutputSet(const CommonFlags& f, std::string subcommand) : dir_(f.out_dir) {
    manifest_.subcommand = std::move(subcommand);
    manifest_.scenario = f.scenario_path.empty()
                             ? (f.jammer ? "preset:jammer" : "preset:no-jammer")
                             : f.scenario_path;
    manifest_.overrides = f.overrides;
    manifest_.output_dir = f.out_dir;
  }

  void Param(std::string key, std::string value) {
    manifest_.parameters.emplace_back(std::move(key), std::move(value));
  }

  void Write(const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    std::ofstream out(dir_ / name, std::ios::binary);
    out << content;
    if (!out) throw InputError("cannot write " + (dir_ / name).string());
    manifest_.outputs.emplace_back(name, Fnv1a64(content));
  }

  void Finish() {
    manifest_.timestamp = UtcTimestamp();
    const std::string text = manifest_.Format();
    std::ofstream out(dir_ / "manifest.txt", std::ios::binary);
    out << text;
    if (!out) throw InputError("cannot write " + (dir_ / "manifest.txt").string());
  }

 private:
  fs::path dir_;
  RunManifest manifest_;
};

const char* OrientationName(LpOrientation o) {
  switch (o) {
    case LpOrientation::kRowPlayer:
      return "row_player";
    case LpOrientation::kColumnPlayer:
      return "column_player";
    default:
      return "auto";
  }
}

std::string Line(const std::string& key, double v) {
  return key + " = " + FormatNumber(v) + "\n";
}

int RunSolve(const CommonFlags& f) {
  const Scenario s = LoadScenario(f);
  const auto sol = SolveScenario(s);
  const auto& eq = sol.equilibrium;
  OutputSet out(f, "solve");
  out.Write("scenario.txt", FormatScenario(s));
  out.Write("row_strategy.csv", RowStrategyCsv(sol.pruned.joint_actions, eq.row_strategy));
  out.Write("col_strategy.csv", ColStrategyCsv(sol.pruned.threshold_grid, eq.col_strategy));
  std::string summary;
  summary += "rows = " + std::to_string(sol.payoff.rows()) + "\n";
  summary += "cols = " + std::to_string(sol.payoff.cols()) + "\n";
  summary += "lp_orientation = " + std::string(OrientationName(eq.solved_as)) + "\n";
  summary += Line("game_value", eq.value);
  summary += Line("row_gap", eq.row_gap);
  summary += Line("col_gap", eq.col_gap);
  summary += Line("expected_rate", sol.expected_rate);
  summary += Line("pfa", sol.detection.pfa);
  summary += Line("pm", sol.detection.pm);
  summary += Line("dep", sol.detection.dep());
  out.Write("summary.txt", summary);
  out.Finish();
  std::cout << summary;
  return 0;
}

std::vector<double> ParseNumberList(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::exception();
    } catch (...) {
      throw InputError(what + ": '" + item + "' is not a number");
    }
  }
  return out;
}

int RunSweep(const CommonFlags& f, const std::string& betas_text) {
  const Scenario s = LoadScenario(f);
  std::vector<double> betas = ParseNumberList(betas_text, "--betas");
  OutputSet out(f, "sweep");
  if (betas.empty()) {
    betas = DefaultBetaGrid();
    out.Param("betas", "default");
  } else {
    out.Param("betas", betas_text);
  }
  for (double b : betas) {
    if (!(b > 0.0)) throw InputError("--betas: values must be positive");
  }
  const auto points = BetaSweep(s, betas);
  out.Write("scenario.txt", FormatScenario(s));
  out.Write("tradeoff.csv", TradeoffCsv(points));
  out.Finish();
  std::cout << "tradeoff.csv: " << points.size() << " points\n";
  return 0;
}

int RunBaseline(const CommonFlags& f, const std::string& mode, const std::string& range) {
  const Scenario s = LoadScenario(f);
  OutputSet out(f, "baseline");
  out.Param("mode", mode);
  std::vector<BaselineResult> results;
  if (mode == "uniform") {
    int lo = 2, hi = static_cast<int>(s.power_grid.size());
    if (!range.empty()) {
      const auto v = ParseNumberList(range, "--range");
      if (v.size() != 2 || v[0] != static_cast<int>(v[0]) || v[1] != static_cast<int>(v[1]) ||
          v[0] < 1 || v[1] < v[0] || v[1] > static_cast<double>(s.power_grid.size())) {
        throw InputError("--range for uniform mode is K_MIN,K_MAX within the power grid");
      }
      lo = static_cast<int>(v[0]);
      hi = static_cast<int>(v[1]);
    }
    out.Param("range", std::to_string(lo) + "," + std::to_string(hi));
    for (int k = lo; k <= hi; ++k) results.push_back(UniformBaseline(s, k));
  } else if (mode == "constant") {
    std::vector<double> powers = s.power_grid;
    if (!range.empty()) powers = ParseNumberList(range, "--range");
    out.Param("range", range.empty() ? "power_grid" : range);
    for (double p : powers) {
      // Powers with negative rate are not offered to the transmitter.
      if (Rbar({p / s.sigma_b_sq_mw, s.blocklength_n, s.delta}) < 0.0) continue;
      results.push_back(ConstantBaseline(s, p));
    }
  } else {
    throw InputError("--mode must be 'uniform' or 'constant'");
  }
  out.Write("scenario.txt", FormatScenario(s));
  out.Write("baseline.csv", BaselineCsv(results));
  out.Finish();
  std::cout << "baseline.csv: " << results.size() << " rows\n";
  return 0;
}

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int RunSimulate(const CommonFlags& f, const std::string& strategies, long blocks,
                std::uint64_t seed) {
  if (blocks <= 0) throw InputError("--blocks must be positive");
  const Scenario s = LoadScenario(f);
  const Scenario pruned = PruneNegativeRate(s);
  MixedStrategy joint, thresholds;
  if (strategies.empty()) {
    const auto sol = SolveScenario(s);
    joint = Sparsify(sol.equilibrium.row_strategy);
    thresholds = Sparsify(sol.equilibrium.col_strategy);
  } else {
    joint = ParseRowStrategyCsv(ReadText(fs::path(strategies) / "row_strategy.csv"), pruned);
    thresholds =
        ParseColStrategyCsv(ReadText(fs::path(strategies) / "col_strategy.csv"), pruned);
  }
  const auto analytic = Detection(pruned, joint, thresholds);
  const auto e = EstimateDetection(pruned, joint, thresholds, blocks, seed);
  auto row = [](const std::string& name, double emp, double ana, double se) {
    const double z = se > 0.0 ? (emp - ana) / se : (emp == ana ? 0.0 : kInfinity);
    return name + "," + FormatNumber(emp) + "," + FormatNumber(ana) + "," + FormatNumber(se) +
           "," + FormatNumber(z) + "\n";
  };
  std::string csv = "quantity,empirical,analytic,stderr,z\n";
  csv += row("pfa", e.pfa_hat, analytic.pfa, e.pfa_stderr());
  csv += row("pm", e.pm_hat, analytic.pm, e.pm_stderr());
  const double dep_se = std::hypot(e.pfa_stderr(), e.pm_stderr());
  csv += row("dep", e.pfa_hat + e.pm_hat, analytic.dep(), dep_se);
  OutputSet out(f, "simulate");
  out.Param("strategies", strategies.empty() ? "equilibrium" : strategies);
  out.Param("blocks", std::to_string(blocks));
  out.Param("seed", std::to_string(seed));
  out.Write("scenario.txt", FormatScenario(s));
  out.Write("simulation.csv", csv);
  out.Finish();
  std::cout << csv;
  return 0;
}

}  // namespace
}  // namespace covert

int main(int argc, char** argv) {
  using namespace covert;
  CLI::App app{"Equilibrium strategies for covert communication games"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string betas, mode = "uniform", range, strategies;
  long blocks = 100000;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "equilibrium of one scenario");
  AddCommonFlags(solve, flags);
  auto* sweep = app.add_subcommand("sweep", "rate/detection tradeoff over beta");
  AddCommonFlags(sweep, flags);
  sweep->add_option("--betas", betas, "comma separated beta values (default grid if empty)");
  auto* baseline = app.add_subcommand("baseline", "uniform or constant power baselines");
  AddCommonFlags(baseline, flags);
  baseline->add_option("--mode", mode, "uniform | constant")->capture_default_str();
  baseline->add_option("--range", range,
                       "uniform: K_MIN,K_MAX; constant: comma separated powers in mW");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of detection errors");
  AddCommonFlags(simulate, flags);
  simulate->add_option("--strategies", strategies,
                       "directory with row_strategy.csv and col_strategy.csv "
                       "(default: solve the scenario)");
  simulate->add_option("--blocks", blocks, "number of simulated blocks")->capture_default_str();
  simulate->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve) return RunSolve(flags);
    if (*sweep) return RunSweep(flags, betas);
    if (*baseline) return RunBaseline(flags, mode, range);
    return RunSimulate(flags, strategies, blocks, seed);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: ";
    if (e.line() > 0) std::cerr << flags.scenario_path << ": line " << e.line() << ": ";
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kSolverError;
  }
}
