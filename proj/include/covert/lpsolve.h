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

#ifndef COVERT_LPSOLVE_H_
#define COVERT_LPSOLVE_H_

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covert {

enum class Sense { kMaximize, kMinimize };
enum class RowType { kLessEqual, kGreaterEqual, kEqual };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Dense linear program
//   max/min  c'x   s.t.  a_r'x (<=|>=|=) b_r,   lower <= x <= upper.
// Bounds may be infinite; a variable with both bounds infinite is free.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> coefficients;  // row-major, num_rows() x num_vars()
  std::vector<double> rhs;
  std::vector<RowType> row_types;

  LinearProgram() = default;
  // `num_vars` variables with zero cost and bounds [0, +inf).
  LinearProgram(std::size_t num_vars, Sense s);

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rhs.size(); }
  double coefficient(std::size_t row, std::size_t col) const {
    return coefficients[row * num_vars() + col];
  }
  void AddRow(std::span<const double> coeffs, RowType type, double b);
};

enum class LpStatus {
  kOptimal,
  kIterationCap,
  kNumericalFailure,
  kInfeasible,
  kUnbounded,
};

std::string_view ToString(LpStatus status);

struct SimplexOptions {
  // 0 selects 50 * (rows + variables).
  long max_iterations = 0;
  // Pivot candidates smaller than this in magnitude are never chosen.
  double pivot_tolerance = 1e-11;
  // Reduced-cost threshold for optimality.
  double optimality_tolerance = 1e-9;
  // Relative residual accepted on exit.
  double feasibility_tolerance = 1e-9;
  // Power-of-two row/column equilibration before solving.
  bool scale = true;
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  // d(optimal objective) / d(rhs_r) for every row, in the original units.
  std::vector<double> duals;
  long iterations = 0;
  std::string diagnostics;

  bool ok() const { return status == LpStatus::kOptimal; }
};

// Two-phase bounded-variable primal simplex on a dense tableau. Dantzig
// pricing; after 10 * rows consecutive degenerate pivots the rule switches to
// Bland's until the objective moves again. Fully deterministic.
LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& options = {});

// Largest relative violation of rows and bounds at `x`.
double PrimalResidual(const LinearProgram& lp, std::span<const double> x);

}  // namespace covert

#endif  // COVERT_LPSOLVE_H_
