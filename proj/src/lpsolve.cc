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

#include "covert/lpsolve.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace covert {
namespace {

// Nearest power of two to 1 / v, so scaling never perturbs the data.
double PowerOfTwoReciprocal(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return 1.0;
  return std::exp2(-std::round(std::log2(v)));
}

// How an original variable maps onto nonnegative tableau columns:
//   x = offset + sign * z[col] - (col2 >= 0 ? z[col2] : 0).
struct ColumnMap {
  int col = -1;
  int col2 = -1;
  double offset = 0.0;
  double sign = 1.0;
};

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        stride_(cols + 1),
        data_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0),
        upper_(cols, kInfinity),
        complemented_(cols, false),
        is_basic_(cols, false),
        basis_(rows, -1) {}

  double& at(int r, int c) { return data_[Index(r, c)]; }
  double at(int r, int c) const { return data_[Index(r, c)]; }
  double& rhs(int r) { return data_[Index(r, cols_)]; }
  double rhs(int r) const { return data_[Index(r, cols_)]; }
  // Row `rows_` holds reduced costs and -(objective) in its rhs slot.
  double& cost(int c) { return data_[Index(rows_, c)]; }
  double cost(int c) const { return data_[Index(rows_, c)]; }
  double& neg_objective() { return data_[Index(rows_, cols_)]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& upper(int c) { return upper_[c]; }
  double upper(int c) const { return upper_[c]; }
  bool complemented(int c) const { return complemented_[c]; }
  bool is_basic(int c) const { return is_basic_[c]; }
  int basis(int r) const { return basis_[r]; }

  void SetBasic(int r, int c) {
    if (basis_[r] >= 0) is_basic_[basis_[r]] = false;
    basis_[r] = c;
    is_basic_[c] = true;
  }

  void Pivot(int pr, int pc) {
    double* prow = &data_[Index(pr, 0)];
    const double inv = 1.0 / prow[pc];
    for (int c = 0; c <= cols_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[Index(r, 0)];
      const double factor = row[pc];
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) row[c] -= factor * prow[c];
      row[pc] = 0.0;
    }
    SetBasic(pr, pc);
  }

  // Substitutes z_c -> upper_c - z_c for a nonbasic column.
  void Complement(int c) {
    const double u = upper_[c];
    for (int r = 0; r <= rows_; ++r) {
      double& a = data_[Index(r, c)];
      if (a == 0.0) continue;
      data_[Index(r, cols_)] -= a * u;
      a = -a;
    }
    complemented_[c] = !complemented_[c];
  }

  // Value of column c in the untransformed (uncomplemented) space.
  double Value(int c) const {
    double z = 0.0;
    if (is_basic_[c]) {
      for (int r = 0; r < rows_; ++r) {
        if (basis_[r] == c) {
          z = rhs(r);
          break;
        }
      }
    }
    return complemented_[c] ? upper_[c] - z : z;
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * stride_ + c;
  }

  int rows_;
  int cols_;
  int stride_;
  std::vector<double> data_;
  std::vector<double> upper_;
  std::vector<bool> complemented_;
  std::vector<bool> is_basic_;
  std::vector<int> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded, kIterationCap };

class SimplexEngine {
 public:
  SimplexEngine(Tableau& t, int first_artificial, const SimplexOptions& opt,
                long max_iterations)
      : t_(t),
        first_artificial_(first_artificial),
        opt_(opt),
        max_iterations_(max_iterations) {}

  PhaseResult Run() {
    long degenerate_run = 0;
    const long bland_trigger = 10L * t_.rows();
    while (true) {
      const bool bland = degenerate_run > bland_trigger;
      const int enter = ChooseEntering(bland);
      if (enter < 0) return PhaseResult::kOptimal;
      if (iterations_ >= max_iterations_) return PhaseResult::kIterationCap;
      ++iterations_;

      int leave_row = -1;
      bool leave_at_upper = false;
      double theta = kInfinity;
      ChooseLeaving(enter, bland, leave_row, leave_at_upper, theta);

      const double own_bound = t_.upper(enter);
      if (own_bound <= theta) {
        if (!std::isfinite(own_bound)) return PhaseResult::kUnbounded;
        t_.Complement(enter);
        theta = own_bound;
      } else {
        const int leaving = t_.basis(leave_row);
        t_.Pivot(leave_row, enter);
        if (leave_at_upper) t_.Complement(leaving);
      }
      degenerate_run = theta <= 1e-12 ? degenerate_run + 1 : 0;
    }
  }

  long iterations() const { return iterations_; }

 private:
  int ChooseEntering(bool bland) const {
    int best = -1;
    double best_cost = opt_.optimality_tolerance;
    for (int c = 0; c < first_artificial_; ++c) {
      if (t_.is_basic(c) || t_.upper(c) == 0.0) continue;
      const double d = t_.cost(c);
      if (d > best_cost) {
        best = c;
        if (bland) break;
        best_cost = d;
      }
    }
    return best;
  }

  void ChooseLeaving(int enter, bool bland, int& leave_row,
                     bool& leave_at_upper, double& theta) const {
    double best_pivot = 0.0;
    for (int r = 0; r < t_.rows(); ++r) {
      const double a = t_.at(r, enter);
      double ratio;
      bool at_upper;
      if (a > opt_.pivot_tolerance) {
        ratio = t_.rhs(r) / a;
        at_upper = false;
      } else if (a < -opt_.pivot_tolerance &&
                 std::isfinite(t_.upper(t_.basis(r)))) {
        ratio = (t_.upper(t_.basis(r)) - t_.rhs(r)) / -a;
        at_upper = true;
      } else {
        continue;
      }
      ratio = std::max(ratio, 0.0);
      const double slack = 1e-12 * (1.0 + std::abs(theta));
      bool take = false;
      if (leave_row < 0 || ratio < theta - slack) {
        take = true;
      } else if (ratio <= theta + slack) {
        // Tie: Bland keeps the smallest basic index, otherwise prefer the
        // larger pivot for stability.
        if (bland) {
          take = t_.basis(r) < t_.basis(leave_row);
        } else {
          take = std::abs(a) > best_pivot;
        }
      }
      if (take) {
        theta = leave_row < 0 ? ratio : std::min(theta, ratio);
        leave_row = r;
        leave_at_upper = at_upper;
        best_pivot = std::abs(a);
      }
    }
  }

  Tableau& t_;
  int first_artificial_;
  const SimplexOptions& opt_;
  long max_iterations_;
  long iterations_ = 0;
};

// Recomputes the objective row for costs `c` (indexed by tableau column,
// expressed for uncomplemented columns) plus constant `k`.
void PriceOut(Tableau& t, const std::vector<double>& c, double k) {
  std::vector<double> cc(c.size());
  double constant = k;
  for (int j = 0; j < t.cols(); ++j) {
    if (t.complemented(j)) {
      cc[j] = -c[j];
      constant += c[j] * t.upper(j);
    } else {
      cc[j] = c[j];
    }
  }
  for (int j = 0; j < t.cols(); ++j) t.cost(j) = cc[j];
  double z = constant;
  for (int r = 0; r < t.rows(); ++r) {
    const double cb = cc[t.basis(r)];
    if (cb == 0.0) continue;
    for (int j = 0; j < t.cols(); ++j) t.cost(j) -= cb * t.at(r, j);
    z += cb * t.rhs(r);
  }
  for (int r = 0; r < t.rows(); ++r) t.cost(t.basis(r)) = 0.0;
  t.neg_objective() = -z;
}

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars, Sense s)
    : sense(s),
      objective(num_vars, 0.0),
      lower(num_vars, 0.0),
      upper(num_vars, kInfinity) {}

void LinearProgram::AddRow(std::span<const double> coeffs, RowType type,
                           double b) {
  if (coeffs.size() != num_vars()) {
    throw std::invalid_argument("AddRow: coefficient count mismatch");
  }
  coefficients.insert(coefficients.end(), coeffs.begin(), coeffs.end());
  row_types.push_back(type);
  rhs.push_back(b);
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kIterationCap:
      return "iteration-cap";
    case LpStatus::kNumericalFailure:
      return "numerical-failure";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double PrimalResidual(const LinearProgram& lp, std::span<const double> x) {
  const std::size_t n = lp.num_vars();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double scale = 1.0 + std::abs(x[j]);
    if (x[j] < lp.lower[j]) worst = std::max(worst, (lp.lower[j] - x[j]) / scale);
    if (x[j] > lp.upper[j]) worst = std::max(worst, (x[j] - lp.upper[j]) / scale);
  }
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    double activity = 0.0;
    double magnitude = std::abs(lp.rhs[r]);
    for (std::size_t j = 0; j < n; ++j) {
      const double term = lp.coefficient(r, j) * x[j];
      activity += term;
      magnitude += std::abs(term);
    }
    double violation = 0.0;
    switch (lp.row_types[r]) {
      case RowType::kLessEqual:
        violation = activity - lp.rhs[r];
        break;
      case RowType::kGreaterEqual:
        violation = lp.rhs[r] - activity;
        break;
      case RowType::kEqual:
        violation = std::abs(activity - lp.rhs[r]);
        break;
    }
    worst = std::max(worst, violation / (1.0 + magnitude));
  }
  return worst;
}

LpSolution SolveLp(const LinearProgram& lp, const SimplexOptions& options) {
  const int m = static_cast<int>(lp.num_rows());
  const int n = static_cast<int>(lp.num_vars());
  if (lp.coefficients.size() != static_cast<std::size_t>(m) * n ||
      lp.row_types.size() != static_cast<std::size_t>(m) ||
      lp.lower.size() != static_cast<std::size_t>(n) ||
      lp.upper.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("SolveLp: inconsistent dimensions");
  }
  for (double v : lp.coefficients) {
    if (!std::isfinite(v)) throw std::invalid_argument("SolveLp: non-finite coefficient");
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(lp.objective[j])) {
      throw std::invalid_argument("SolveLp: non-finite objective");
    }
  }
  for (int r = 0; r < m; ++r) {
    if (!std::isfinite(lp.rhs[r])) throw std::invalid_argument("SolveLp: non-finite rhs");
  }

  LpSolution result;
  const long max_iterations = options.max_iterations > 0
                                  ? options.max_iterations
                                  : 50L * (m + n);

  // Equilibration: rows first, then columns, each to unit max-norm.
  std::vector<double> row_scale(m, 1.0), col_scale(n, 1.0);
  if (options.scale) {
    for (int r = 0; r < m; ++r) {
      double mx = 0.0;
      for (int j = 0; j < n; ++j) mx = std::max(mx, std::abs(lp.coefficient(r, j)));
      row_scale[r] = PowerOfTwoReciprocal(mx);
    }
    for (int j = 0; j < n; ++j) {
      double mx = 0.0;
      for (int r = 0; r < m; ++r) {
        mx = std::max(mx, std::abs(lp.coefficient(r, j) * row_scale[r]));
      }
      col_scale[j] = PowerOfTwoReciprocal(mx);
    }
  }
  const double sense_sign = lp.sense == Sense::kMaximize ? 1.0 : -1.0;

  // Map scaled variables onto nonnegative columns.
  std::vector<ColumnMap> maps(n);
  std::vector<double> struct_upper;
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower[j] / col_scale[j];
    const double hi = lp.upper[j] / col_scale[j];
    if (lo > hi) {
      result.status = LpStatus::kInfeasible;
      result.diagnostics = "variable " + std::to_string(j) + " has lower > upper";
      return result;
    }
    ColumnMap& cm = maps[j];
    cm.col = static_cast<int>(struct_upper.size());
    if (std::isfinite(lo)) {
      cm.offset = lo;
      struct_upper.push_back(hi - lo);
    } else if (std::isfinite(hi)) {
      cm.offset = hi;
      cm.sign = -1.0;
      struct_upper.push_back(kInfinity);
    } else {
      struct_upper.push_back(kInfinity);
      cm.col2 = static_cast<int>(struct_upper.size());
      struct_upper.push_back(kInfinity);
    }
  }
  const int num_struct = static_cast<int>(struct_upper.size());
  int num_slack = 0;
  for (int r = 0; r < m; ++r) {
    if (lp.row_types[r] != RowType::kEqual) ++num_slack;
  }
  const int first_art = num_struct + num_slack;
  const int cols = first_art + m;

  Tableau t(m, cols);
  std::vector<double> row_sign(m, 1.0);
  std::vector<int> slack_of_row(m, -1);
  int next_slack = num_struct;
  for (int r = 0; r < m; ++r) {
    double b = lp.rhs[r] * row_scale[r];
    for (int j = 0; j < n; ++j) {
      const double a = lp.coefficient(r, j) * row_scale[r] * col_scale[j];
      if (a == 0.0) continue;
      const ColumnMap& cm = maps[j];
      b -= a * cm.offset;
      t.at(r, cm.col) += a * cm.sign;
      if (cm.col2 >= 0) t.at(r, cm.col2) -= a;
    }
    double slack_coeff = 0.0;
    if (lp.row_types[r] != RowType::kEqual) {
      slack_of_row[r] = next_slack++;
      slack_coeff = lp.row_types[r] == RowType::kLessEqual ? 1.0 : -1.0;
      t.at(r, slack_of_row[r]) = slack_coeff;
    }
    if (b < 0.0 || (b == 0.0 && slack_coeff < 0.0)) {
      row_sign[r] = -1.0;
      b = -b;
      for (int c = 0; c < first_art; ++c) t.at(r, c) = -t.at(r, c);
      slack_coeff = -slack_coeff;
    }
    t.rhs(r) = b;
    t.at(r, first_art + r) = 1.0;
    if (slack_coeff > 0.0) {
      t.SetBasic(r, slack_of_row[r]);
      t.upper(first_art + r) = 0.0;
    } else {
      t.SetBasic(r, first_art + r);
    }
  }
  for (int c = 0; c < num_struct; ++c) t.upper(c) = struct_upper[c];

  SimplexEngine engine(t, first_art, options, max_iterations);

  // Phase 1: drive basic artificials to zero.
  bool need_phase1 = false;
  for (int r = 0; r < m; ++r) need_phase1 |= t.basis(r) >= first_art;
  if (need_phase1) {
    std::vector<double> c1(cols, 0.0);
    for (int c = first_art; c < cols; ++c) c1[c] = -1.0;
    PriceOut(t, c1, 0.0);
    const PhaseResult p1 = engine.Run();
    result.iterations = engine.iterations();
    if (p1 == PhaseResult::kIterationCap) {
      result.status = LpStatus::kIterationCap;
      result.diagnostics = "phase 1 hit the iteration cap of " +
                           std::to_string(max_iterations);
      return result;
    }
    double infeasibility = 0.0;
    double rhs_scale = 1.0;
    for (int r = 0; r < m; ++r) {
      rhs_scale = std::max(rhs_scale, std::abs(t.rhs(r)));
      if (t.basis(r) >= first_art) infeasibility += t.rhs(r);
    }
    if (infeasibility > options.feasibility_tolerance * rhs_scale * 10.0) {
      result.status = LpStatus::kInfeasible;
      result.diagnostics = "phase 1 ended with artificial mass " +
                           std::to_string(infeasibility);
      return result;
    }
    for (int c = first_art; c < cols; ++c) t.upper(c) = 0.0;
  }

  // Phase 2 on the real objective (always maximized internally).
  std::vector<double> c2(cols, 0.0);
  double constant = 0.0;
  for (int j = 0; j < n; ++j) {
    const double cj = sense_sign * lp.objective[j] * col_scale[j];
    const ColumnMap& cm = maps[j];
    constant += cj * cm.offset;
    c2[cm.col] += cj * cm.sign;
    if (cm.col2 >= 0) c2[cm.col2] -= cj;
  }
  PriceOut(t, c2, constant);
  const PhaseResult p2 = engine.Run();
  result.iterations = engine.iterations();
  if (p2 == PhaseResult::kIterationCap) {
    result.status = LpStatus::kIterationCap;
    result.diagnostics =
        "phase 2 hit the iteration cap of " + std::to_string(max_iterations);
    return result;
  }
  if (p2 == PhaseResult::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    result.diagnostics = "objective unbounded in phase 2";
    return result;
  }

  result.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const ColumnMap& cm = maps[j];
    double v = cm.offset + cm.sign * t.Value(cm.col);
    if (cm.col2 >= 0) v -= t.Value(cm.col2);
    result.x[j] = v * col_scale[j];
  }
  result.objective = 0.0;
  for (int j = 0; j < n; ++j) result.objective += lp.objective[j] * result.x[j];

  // Simplex multipliers from the artificial columns, which hold B^{-1}.
  result.duals.assign(m, 0.0);
  std::vector<double> basic_cost(m);
  for (int r = 0; r < m; ++r) {
    const int b = t.basis(r);
    basic_cost[r] = t.complemented(b) ? -c2[b] : c2[b];
  }
  for (int i = 0; i < m; ++i) {
    const int art = first_art + i;
    const double flip = t.complemented(art) ? -1.0 : 1.0;
    double pi = 0.0;
    for (int r = 0; r < m; ++r) pi += basic_cost[r] * flip * t.at(r, art);
    result.duals[i] = sense_sign * pi * row_sign[i] * row_scale[i];
  }

  const double residual = PrimalResidual(lp, result.x);
  if (residual > options.feasibility_tolerance) {
    result.status = LpStatus::kNumericalFailure;
    result.diagnostics = "primal residual " + std::to_string(residual) +
                         " exceeds tolerance after " +
                         std::to_string(result.iterations) + " iterations";
    return result;
  }
  result.status = LpStatus::kOptimal;
  return result;
}

}  // namespace covert
