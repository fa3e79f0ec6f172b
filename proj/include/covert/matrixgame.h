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

#ifndef COVERT_MATRIXGAME_H_
#define COVERT_MATRIXGAME_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covert/lpsolve.h"
#include "covert/model.h"

namespace covert {

// Dense zero-sum payoff matrix; rows belong to the maximizer.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static PayoffMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<double>& entries() const { return entries_; }

  // Row player's expected payoff against every pure column, p'A.
  std::vector<double> RowGuarantees(const MixedStrategy& row) const;
  // Expected payoff of every pure row against the column mix, Aq.
  std::vector<double> ColumnResponses(const MixedStrategy& col) const;
  double Evaluate(const MixedStrategy& row, const MixedStrategy& col) const;

  // Actions behind the rows/columns when built from a scenario.
  std::vector<JointAction> row_actions;
  std::vector<double> col_actions;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Rate and detection-error components of a scenario's game; the payoff for
// tradeoff weight beta is rate[r] + beta * dep(r, c).
struct GameComponents {
  std::vector<JointAction> row_actions;
  std::vector<double> thresholds;
  std::vector<double> rates;
  std::vector<double> dep;  // row-major rows x thresholds

  PayoffMatrix Payoff(double beta) const;
};

// Evaluates rates and detection errors over JointActions(s) x thresholds.
GameComponents BuildComponents(const Scenario& s);

// BuildComponents(s).Payoff(s.beta).
PayoffMatrix BuildPayoff(const Scenario& s);

// Vectorized joint index y (1-based, power index fastest) to (i, l):
// i = I if y mod I == 0 else y mod I, l = ceil(y / I). Throws
// std::out_of_range unless 1 <= y <= I * L for the given `jam_count`.
std::pair<int, int> VecIndex(int y, int power_count, int jam_count);
int VecPosition(int power_index, int jam_index, int power_count);

enum class LpOrientation {
  kAuto,          // the LP with fewer constraint rows
  kRowPlayer,     // max U s.t. p'A >= U, duals give the column strategy
  kColumnPlayer,  // min U s.t. Aq <= U, duals give the row strategy
};

struct GameSolveOptions {
  LpOrientation orientation = LpOrientation::kAuto;
  SimplexOptions simplex;
};

struct EquilibriumSolution {
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  double value = 0.0;
  double row_gap = 0.0;
  double col_gap = 0.0;
  LpOrientation solved_as = LpOrientation::kAuto;
  long lp_iterations = 0;
};

class GameSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nash equilibrium of the zero-sum game with matrix `a` from one LP solve;
// the opponent's strategy comes from the LP duals. Throws GameSolveError if
// the LP does not reach optimality.
EquilibriumSolution SolveGame(const PayoffMatrix& a,
                              const GameSolveOptions& options = {});

struct EquilibriumGaps {
  double row_gap = 0.0;  // value - min_c (p'A)_c
  double col_gap = 0.0;  // max_r (Aq)_r - value
};

EquilibriumGaps VerifyEquilibrium(const PayoffMatrix& a,
                                  const MixedStrategy& row,
                                  const MixedStrategy& col, double value);
EquilibriumGaps VerifyEquilibrium(const PayoffMatrix& a,
                                  const EquilibriumSolution& sol);
bool IsEquilibrium(const PayoffMatrix& a, const EquilibriumSolution& sol,
                   double tol = 1e-8);

// Willie's pure best responses (0-based threshold indices) when his payoff
// is -(P_FA + P_M) and Alice plays `joint` over JointActions(s).
std::vector<int> WillieBestResponses(const Scenario& s,
                                     const MixedStrategy& joint,
                                     double tie_tol = 1e-12);

// Column player's pure best responses in the zero-sum game: the columns
// minimizing p'A within `tie_tol`.
std::vector<int> ColumnBestResponses(const PayoffMatrix& a,
                                     const MixedStrategy& row,
                                     double tie_tol = 1e-12);

// Row player's pure best responses: rows maximizing Aq within `tie_tol`.
std::vector<int> RowBestResponses(const PayoffMatrix& a,
                                  const MixedStrategy& col,
                                  double tie_tol = 1e-12);

// Entries below `floor` become zero; the rest are renormalized.
MixedStrategy Sparsify(const MixedStrategy& s, double floor = 1e-9);

}  // namespace covert

#endif  // COVERT_MATRIXGAME_H_
