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

#ifndef COVERT_EXPERIMENTS_H_
#define COVERT_EXPERIMENTS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covert/detection.h"
#include "covert/matrixgame.h"
#include "covert/model.h"

namespace covert {

// Equilibrium of one scenario together with the quantities reported for it.
struct ScenarioSolution {
  Scenario pruned;
  PayoffMatrix payoff;
  EquilibriumSolution equilibrium;
  double expected_rate = 0.0;
  DetectionErrors detection;
};

// Prunes negative-rate actions, builds the payoff and solves the game.
ScenarioSolution SolveScenario(const Scenario& s,
                               const GameSolveOptions& options = {});

struct TradeoffPoint {
  double beta = 0.0;
  double expected_rate = 0.0;
  double pfa = 0.0;
  double pm = 0.0;
  double dep = 0.0;
  double game_value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
};

class SweepError : public std::runtime_error {
 public:
  SweepError(double beta, const std::string& what)
      : std::runtime_error("beta = " + std::to_string(beta) + ": " + what),
        beta_(beta) {}
  double beta() const { return beta_; }

 private:
  double beta_;
};

// 25 log-spaced values from 0.1 to 20.
std::vector<double> DefaultBetaGrid();

// Equilibrium rate and detection errors for each beta, in input order. The
// scenario is pruned once; its own beta is ignored.
std::vector<TradeoffPoint> BetaSweep(const Scenario& s,
                                     const std::vector<double>& betas,
                                     const GameSolveOptions& options = {});

struct BaselineResult {
  std::string label;  // "uniform" or "constant"
  double parameter = 0.0;
  double best_threshold = 0.0;
  double expected_rate = 0.0;
  double pfa = 0.0;
  double pm = 0.0;
  double dep = 0.0;
};

// Alice spreads uniformly over the first k power grid entries that have a
// nonnegative rate (no jammer); Willie uses the grid threshold minimizing
// P_FA + P_M. Requires 2 <= k <= |power grid|.
BaselineResult UniformBaseline(const Scenario& s, int k);

// Alice always uses `power_mw`, which must be a grid power with a
// nonnegative rate; Willie's threshold is chosen as above.
BaselineResult ConstantBaseline(const Scenario& s, double power_mw);

struct CurvePoint {
  double dep = 0.0;
  double rate = 0.0;
};

std::vector<CurvePoint> ToCurve(const std::vector<TradeoffPoint>& points);
std::vector<CurvePoint> ToCurve(const std::vector<BaselineResult>& points);

// Rate of the piecewise-linear curve through `curve` (any order) at `dep`.
// Below the curve's smallest dep the least covert point is used, since it
// is at least as covert as requested; above its largest dep there is no
// match.
std::optional<double> RateAtDep(const std::vector<CurvePoint>& curve,
                                double dep);

struct DominanceRow {
  std::string label;
  double parameter = 0.0;
  double dep = 0.0;
  double baseline_rate = 0.0;
  std::optional<double> game_rate;
  double advantage() const { return game_rate ? *game_rate - baseline_rate : 0.0; }
};

struct DominanceReport {
  std::vector<DominanceRow> rows;
  // True when every matched row has game rate >= baseline rate - tol.
  bool GameDominates(double tol = 1e-9) const;
  double MaxAdvantage() const;
};

DominanceReport DominanceCheck(const std::vector<CurvePoint>& game_curve,
                               const std::vector<BaselineResult>& baselines);

}  // namespace covert

#endif  // COVERT_EXPERIMENTS_H_
