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

#include "covert/experiments.h"

#include <algorithm>
#include <cmath>

#include "covert/rate.h"

namespace covert {
namespace {

constexpr double kGridMatch = 1e-12;

// Exhaustive threshold search for a no-jammer power mix.
BaselineResult BestThresholdFor(const Scenario& s,
                                const std::vector<double>& powers,
                                const std::vector<double>& weights) {
  BaselineResult best;
  best.dep = kInfinity;
  for (double t : s.threshold_grid) {
    const double pfa = PfaCell(0.0, t, s.blocklength_n, s.sigma_w_sq_mw);
    double pm = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k) {
      pm += weights[k] * PmCell(powers[k], 0.0, t, s.blocklength_n,
                                s.sigma_w_sq_mw);
    }
    if (pfa + pm < best.dep) {
      best.dep = pfa + pm;
      best.pfa = pfa;
      best.pm = pm;
      best.best_threshold = t;
    }
  }
  double rate = 0.0;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    rate += weights[k] * Rbar({powers[k] / s.sigma_b_sq_mw, s.blocklength_n,
                               s.delta});
  }
  best.expected_rate = rate;
  return best;
}

double NoJammerRate(const Scenario& s, double power_mw) {
  return Rbar({power_mw / s.sigma_b_sq_mw, s.blocklength_n, s.delta});
}

}  // namespace

ScenarioSolution SolveScenario(const Scenario& s,
                               const GameSolveOptions& options) {
  ScenarioSolution out;
  out.pruned = PruneNegativeRate(s);
  out.payoff = BuildPayoff(out.pruned);
  out.equilibrium = SolveGame(out.payoff, options);
  out.expected_rate = ExpectedRate(out.pruned, out.equilibrium.row_strategy);
  out.detection = Detection(out.pruned, out.equilibrium.row_strategy,
                            out.equilibrium.col_strategy);
  return out;
}

std::vector<double> DefaultBetaGrid() {
  constexpr int kCount = 25;
  const double lo = std::log(0.1);
  const double hi = std::log(20.0);
  std::vector<double> betas;
  for (int k = 0; k < kCount; ++k) {
    betas.push_back(std::exp(lo + (hi - lo) * k / (kCount - 1)));
  }
  betas.front() = 0.1;
  betas.back() = 20.0;
  return betas;
}

std::vector<TradeoffPoint> BetaSweep(const Scenario& s,
                                     const std::vector<double>& betas,
                                     const GameSolveOptions& options) {
  if (betas.empty()) throw std::invalid_argument("BetaSweep: no beta values");
  const Scenario pruned = PruneNegativeRate(s);
  const GameComponents components = BuildComponents(pruned);
  std::vector<TradeoffPoint> points;
  points.reserve(betas.size());
  for (double beta : betas) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw SweepError(beta, "beta must be positive");
    }
    EquilibriumSolution eq;
    try {
      eq = SolveGame(components.Payoff(beta), options);
    } catch (const GameSolveError& e) {
      throw SweepError(beta, e.what());
    }
    TradeoffPoint p;
    p.beta = beta;
    p.expected_rate = ExpectedRate(pruned, eq.row_strategy);
    const DetectionErrors d = Detection(pruned, eq.row_strategy, eq.col_strategy);
    p.pfa = d.pfa;
    p.pm = d.pm;
    p.dep = d.dep();
    p.game_value = eq.value;
    p.row_strategy = std::move(eq.row_strategy);
    p.col_strategy = std::move(eq.col_strategy);
    points.push_back(std::move(p));
  }
  return points;
}

BaselineResult UniformBaseline(const Scenario& s, int k) {
  Validate(s);
  if (k < 2 || k > static_cast<int>(s.power_grid.size())) {
    throw std::invalid_argument("UniformBaseline: k = " + std::to_string(k) +
                                " outside 2.." +
                                std::to_string(s.power_grid.size()));
  }
  std::vector<double> powers;
  for (int i = 0; i < k; ++i) {
    if (NoJammerRate(s, s.power_grid[i]) >= 0.0) {
      powers.push_back(s.power_grid[i]);
    }
  }
  if (powers.empty()) {
    throw std::invalid_argument("UniformBaseline: every power among the first " +
                                std::to_string(k) + " has a negative rate");
  }
  const std::vector<double> weights(powers.size(), 1.0 / powers.size());
  BaselineResult r = BestThresholdFor(s, powers, weights);
  r.label = "uniform";
  r.parameter = k;
  return r;
}

BaselineResult ConstantBaseline(const Scenario& s, double power_mw) {
  Validate(s);
  const auto it = std::find_if(
      s.power_grid.begin(), s.power_grid.end(),
      [&](double p) { return std::abs(p - power_mw) <= kGridMatch; });
  if (it == s.power_grid.end()) {
    throw std::invalid_argument("ConstantBaseline: power " +
                                std::to_string(power_mw) +
                                " mW is not on the power grid");
  }
  if (NoJammerRate(s, *it) < 0.0) {
    throw std::invalid_argument("ConstantBaseline: power " +
                                std::to_string(power_mw) +
                                " mW has a negative rate");
  }
  BaselineResult r = BestThresholdFor(s, {*it}, {1.0});
  r.label = "constant";
  r.parameter = *it;
  return r;
}

std::vector<CurvePoint> ToCurve(const std::vector<TradeoffPoint>& points) {
  std::vector<CurvePoint> curve;
  for (const auto& p : points) curve.push_back({p.dep, p.expected_rate});
  return curve;
}

std::vector<CurvePoint> ToCurve(const std::vector<BaselineResult>& points) {
  std::vector<CurvePoint> curve;
  for (const auto& p : points) curve.push_back({p.dep, p.expected_rate});
  return curve;
}

std::optional<double> RateAtDep(const std::vector<CurvePoint>& curve,
                                double dep) {
  if (curve.empty()) return std::nullopt;
  std::vector<CurvePoint> sorted = curve;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.dep != b.dep ? a.dep < b.dep : a.rate > b.rate;
  });
  if (dep > sorted.back().dep) return std::nullopt;
  if (dep <= sorted.front().dep) return sorted.front().rate;
  const auto hi = std::lower_bound(
      sorted.begin(), sorted.end(), dep,
      [](const CurvePoint& p, double d) { return p.dep < d; });
  if (hi->dep == dep) return hi->rate;
  const auto lo = std::prev(hi);
  const double w = (dep - lo->dep) / (hi->dep - lo->dep);
  return lo->rate + w * (hi->rate - lo->rate);
}

bool DominanceReport::GameDominates(double tol) const {
  for (const auto& r : rows) {
    if (r.game_rate && *r.game_rate < r.baseline_rate - tol) return false;
  }
  return true;
}

double DominanceReport::MaxAdvantage() const {
  double best = -kInfinity;
  for (const auto& r : rows) {
    if (r.game_rate) best = std::max(best, r.advantage());
  }
  return best;
}

DominanceReport DominanceCheck(const std::vector<CurvePoint>& game_curve,
                               const std::vector<BaselineResult>& baselines) {
  if (game_curve.empty()) throw std::invalid_argument("DominanceCheck: empty game curve");
  DominanceReport report;
  for (const auto& b : baselines) {
    DominanceRow row;
    row.label = b.label;
    row.parameter = b.parameter;
    row.dep = b.dep;
    row.baseline_rate = b.expected_rate;
    row.game_rate = RateAtDep(game_curve, b.dep);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace covert
