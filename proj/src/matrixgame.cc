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

#include "covert/matrixgame.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "covert/detection.h"
#include "covert/rate.h"

namespace covert {
namespace {

void CheckStrategySize(const MixedStrategy& s, std::size_t expected,
                       const char* what) {
  if (s.size() != expected) {
    throw std::invalid_argument(std::string(what) + " strategy has " +
                                std::to_string(s.size()) + " entries, expected " +
                                std::to_string(expected));
  }
}

std::vector<int> ArgExtremes(const std::vector<double>& values, bool minimize,
                             double tie_tol) {
  const double best = minimize
                          ? *std::min_element(values.begin(), values.end())
                          : *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::abs(values[k] - best) <= tie_tol) out.push_back(static_cast<int>(k));
  }
  return out;
}

// Clamps LP round-off and renormalizes to a probability vector.
MixedStrategy CleanStrategy(std::vector<double> p) {
  double total = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (!(total > 0.0)) throw GameSolveError("LP returned an empty strategy");
  for (double& v : p) v /= total;
  return {std::move(p)};
}

}  // namespace

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0 || entries_.size() != rows * cols) {
    throw std::invalid_argument("PayoffMatrix: bad dimensions");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw std::invalid_argument("PayoffMatrix: non-finite entry");
  }
}

PayoffMatrix PayoffMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("PayoffMatrix: no rows");
  std::vector<double> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw std::invalid_argument("PayoffMatrix: ragged rows");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PayoffMatrix(rows.size(), rows.front().size(), std::move(flat));
}

std::vector<double> PayoffMatrix::RowGuarantees(const MixedStrategy& row) const {
  CheckStrategySize(row, rows_, "row");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double p = row[r];
    if (p == 0.0) continue;
    const double* a = &entries_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c) out[c] += p * a[c];
  }
  return out;
}

std::vector<double> PayoffMatrix::ColumnResponses(const MixedStrategy& col) const {
  CheckStrategySize(col, cols_, "column");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* a = &entries_[r * cols_];
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += a[c] * col[c];
    out[r] = acc;
  }
  return out;
}

double PayoffMatrix::Evaluate(const MixedStrategy& row,
                              const MixedStrategy& col) const {
  const auto g = RowGuarantees(row);
  CheckStrategySize(col, cols_, "column");
  double v = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) v += g[c] * col[c];
  return v;
}

PayoffMatrix GameComponents::Payoff(double beta) const {
  const std::size_t rows = row_actions.size();
  const std::size_t cols = thresholds.size();
  std::vector<double> entries(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      entries[r * cols + c] = rates[r] + beta * dep[r * cols + c];
    }
  }
  PayoffMatrix a(rows, cols, std::move(entries));
  a.row_actions = row_actions;
  a.col_actions = thresholds;
  return a;
}

GameComponents BuildComponents(const Scenario& s) {
  Validate(s);
  GameComponents g;
  g.row_actions = JointActions(s);
  g.thresholds = s.threshold_grid;
  const std::size_t cols = g.thresholds.size();
  const int n = s.blocklength_n;

  // The false-alarm term depends only on J and the miss term only on
  // P + sigma_w^2 + J, so cache both per threshold row.
  std::map<double, std::vector<double>> pfa_cache;
  std::map<double, std::vector<double>> pm_cache;
  g.rates.reserve(g.row_actions.size());
  g.dep.resize(g.row_actions.size() * cols);
  for (std::size_t r = 0; r < g.row_actions.size(); ++r) {
    const JointAction& a = g.row_actions[r];
    g.rates.push_back(ActionRate(s, a));
    auto& pfa = pfa_cache[a.jam_mw];
    if (pfa.empty()) {
      pfa.resize(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        pfa[c] = PfaCell(a.jam_mw, g.thresholds[c], n, s.sigma_w_sq_mw);
      }
    }
    const double h1_scale = a.power_mw + s.sigma_w_sq_mw + a.jam_mw;
    auto& pm = pm_cache[h1_scale];
    if (pm.empty()) {
      pm.resize(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        pm[c] = PmCell(a.power_mw, a.jam_mw, g.thresholds[c], n,
                       s.sigma_w_sq_mw);
      }
    }
    for (std::size_t c = 0; c < cols; ++c) g.dep[r * cols + c] = pfa[c] + pm[c];
  }
  return g;
}

PayoffMatrix BuildPayoff(const Scenario& s) {
  return BuildComponents(s).Payoff(s.beta);
}

std::pair<int, int> VecIndex(int y, int power_count, int jam_count) {
  if (power_count < 1 || jam_count < 1 || y < 1 || y > power_count * jam_count) {
    throw std::out_of_range("VecIndex: y = " + std::to_string(y) +
                            " outside 1.." +
                            std::to_string(power_count * jam_count));
  }
  const int i = y % power_count == 0 ? power_count : y % power_count;
  const int l = (y + power_count - 1) / power_count;
  return {i, l};
}

int VecPosition(int power_index, int jam_index, int power_count) {
  return (jam_index - 1) * power_count + power_index;
}

EquilibriumSolution SolveGame(const PayoffMatrix& a,
                              const GameSolveOptions& options) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (rows == 0 || cols == 0) throw std::invalid_argument("SolveGame: empty matrix");

  LpOrientation orientation = options.orientation;
  if (orientation == LpOrientation::kAuto) {
    orientation = cols <= rows ? LpOrientation::kRowPlayer
                               : LpOrientation::kColumnPlayer;
  }
  const bool row_lp = orientation == LpOrientation::kRowPlayer;
  const std::size_t strat = row_lp ? rows : cols;
  const std::size_t covers = row_lp ? cols : rows;
  const std::size_t u = strat;  // index of the free value variable

  LinearProgram lp(strat + 1, row_lp ? Sense::kMaximize : Sense::kMinimize);
  lp.objective[u] = 1.0;
  for (std::size_t k = 0; k < strat; ++k) lp.upper[k] = 1.0;
  lp.lower[u] = -kInfinity;
  std::vector<double> coeffs(strat + 1);
  for (std::size_t k = 0; k < covers; ++k) {
    for (std::size_t j = 0; j < strat; ++j) {
      coeffs[j] = row_lp ? a(j, k) : a(k, j);
    }
    coeffs[u] = -1.0;
    lp.AddRow(coeffs, row_lp ? RowType::kGreaterEqual : RowType::kLessEqual,
              0.0);
  }
  std::fill(coeffs.begin(), coeffs.end(), 1.0);
  coeffs[u] = 0.0;
  lp.AddRow(coeffs, RowType::kEqual, 1.0);

  const LpSolution sol = SolveLp(lp, options.simplex);
  if (!sol.ok()) {
    throw GameSolveError("matrix game LP failed (" +
                         std::string(ToString(sol.status)) +
                         "): " + sol.diagnostics);
  }

  std::vector<double> own(sol.x.begin(), sol.x.begin() + strat);
  std::vector<double> other(covers);
  for (std::size_t k = 0; k < covers; ++k) other[k] = -sol.duals[k];

  EquilibriumSolution out;
  out.row_strategy = CleanStrategy(row_lp ? own : other);
  out.col_strategy = CleanStrategy(row_lp ? other : own);
  out.value = sol.x[u];
  out.solved_as = orientation;
  out.lp_iterations = sol.iterations;
  const auto gaps = VerifyEquilibrium(a, out);
  out.row_gap = gaps.row_gap;
  out.col_gap = gaps.col_gap;
  return out;
}

EquilibriumGaps VerifyEquilibrium(const PayoffMatrix& a,
                                  const MixedStrategy& row,
                                  const MixedStrategy& col, double value) {
  const auto guarantees = a.RowGuarantees(row);
  const auto responses = a.ColumnResponses(col);
  EquilibriumGaps g;
  g.row_gap = value - *std::min_element(guarantees.begin(), guarantees.end());
  g.col_gap = *std::max_element(responses.begin(), responses.end()) - value;
  return g;
}

EquilibriumGaps VerifyEquilibrium(const PayoffMatrix& a,
                                  const EquilibriumSolution& sol) {
  return VerifyEquilibrium(a, sol.row_strategy, sol.col_strategy, sol.value);
}

bool IsEquilibrium(const PayoffMatrix& a, const EquilibriumSolution& sol,
                   double tol) {
  const auto g = VerifyEquilibrium(a, sol);
  return g.row_gap <= tol && g.col_gap <= tol;
}

std::vector<int> WillieBestResponses(const Scenario& s,
                                     const MixedStrategy& joint,
                                     double tie_tol) {
  const auto actions = JointActions(s);
  CheckStrategySize(joint, actions.size(), "joint");
  std::vector<double> dep(s.threshold_grid.size(), 0.0);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (joint[k] == 0.0) continue;
    for (std::size_t m = 0; m < dep.size(); ++m) {
      dep[m] += joint[k] * DepCell(actions[k].power_mw, actions[k].jam_mw,
                                   s.threshold_grid[m], s.blocklength_n,
                                   s.sigma_w_sq_mw);
    }
  }
  return ArgExtremes(dep, /*minimize=*/true, tie_tol);
}

std::vector<int> ColumnBestResponses(const PayoffMatrix& a,
                                     const MixedStrategy& row, double tie_tol) {
  return ArgExtremes(a.RowGuarantees(row), /*minimize=*/true, tie_tol);
}

std::vector<int> RowBestResponses(const PayoffMatrix& a,
                                  const MixedStrategy& col, double tie_tol) {
  return ArgExtremes(a.ColumnResponses(col), /*minimize=*/false, tie_tol);
}

MixedStrategy Sparsify(const MixedStrategy& s, double floor) {
  std::vector<double> p = s.probs;
  for (double& v : p) {
    if (v < floor) v = 0.0;
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("Sparsify: nothing left");
  for (double& v : p) v /= total;
  return {std::move(p)};
}

}  // namespace covert
