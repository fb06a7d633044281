// Copyright 2026 The TPASS Toolkit Authors
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

#include "tpass/simplex.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tpass/errors.h"

namespace tpass::lp {
namespace {

enum class ColumnKind { kStructural, kSlack, kArtificial };

// The model rewritten as: maximize c^T x' s.t. T x' = b, x' >= 0, b >= 0,
// with one unit column per row available as a starting basis.
struct StandardForm {
  Eigen::MatrixXd coefficients;  // rows x columns
  Eigen::VectorXd rhs;
  Eigen::VectorXd costs;  // phase 2 costs, maximize sense
  std::vector<ColumnKind> kinds;
  // Column of x_j (or of x_j^+ for a free variable), and of x_j^- or -1.
  std::vector<int> positive_column;
  std::vector<int> negative_column;
  // Column holding e_i in the original data; it starts basic in row i.
  std::vector<int> unit_column;
  // -1 where the row was negated to make its rhs non-negative.
  std::vector<double> row_sign;
  // -1 for minimization, which is solved as maximization of -c^T x.
  double sense_sign = 1.0;
};

StandardForm ToStandardForm(const LpModel& model) {
  const int rows = model.num_constraints();
  StandardForm form;
  form.sense_sign = model.sense() == ObjectiveSense::kMaximize ? 1.0 : -1.0;

  int columns = 0;
  for (const Variable& var : model.variables()) {
    form.positive_column.push_back(columns++);
    form.negative_column.push_back(var.bound == VariableBound::kFree ? columns++
                                                                     : -1);
  }

  // Orient rows so rhs >= 0, then count slack/surplus and artificial columns.
  form.row_sign.assign(rows, 1.0);
  std::vector<Relation> relations(rows);
  for (int i = 0; i < rows; ++i) {
    const Constraint& row = model.constraints()[i];
    relations[i] = row.relation;
    if (row.rhs < 0.0) {
      form.row_sign[i] = -1.0;
      if (row.relation == Relation::kLessEqual) {
        relations[i] = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        relations[i] = Relation::kLessEqual;
      }
    }
  }
  std::vector<int> slack_column(rows, -1);
  std::vector<int> artificial_column(rows, -1);
  for (int i = 0; i < rows; ++i) {
    if (relations[i] != Relation::kEqual) slack_column[i] = columns++;
  }
  for (int i = 0; i < rows; ++i) {
    if (relations[i] != Relation::kLessEqual) artificial_column[i] = columns++;
  }

  form.coefficients = Eigen::MatrixXd::Zero(rows, columns);
  form.rhs = Eigen::VectorXd::Zero(rows);
  form.costs = Eigen::VectorXd::Zero(columns);
  form.kinds.assign(columns, ColumnKind::kStructural);
  form.unit_column.assign(rows, -1);

  for (int j = 0; j < model.num_variables(); ++j) {
    const double c = form.sense_sign * model.variables()[j].objective;
    form.costs[form.positive_column[j]] = c;
    if (form.negative_column[j] >= 0) form.costs[form.negative_column[j]] = -c;
  }
  for (int i = 0; i < rows; ++i) {
    const Constraint& row = model.constraints()[i];
    const double sign = form.row_sign[i];
    for (int j = 0; j < model.num_variables(); ++j) {
      const double a = sign * row.coefficients[j];
      form.coefficients(i, form.positive_column[j]) = a;
      if (form.negative_column[j] >= 0) {
        form.coefficients(i, form.negative_column[j]) = -a;
      }
    }
    form.rhs[i] = sign * row.rhs;
    if (slack_column[i] >= 0) {
      const bool is_slack = relations[i] == Relation::kLessEqual;
      form.coefficients(i, slack_column[i]) = is_slack ? 1.0 : -1.0;
      form.kinds[slack_column[i]] = ColumnKind::kSlack;
      if (is_slack) form.unit_column[i] = slack_column[i];
    }
    if (artificial_column[i] >= 0) {
      form.coefficients(i, artificial_column[i]) = 1.0;
      form.kinds[artificial_column[i]] = ColumnKind::kArtificial;
      form.unit_column[i] = artificial_column[i];
    }
  }
  return form;
}

// Dense tableau [T | b; z - c | value]; the last row holds reduced costs in
// the z_j - c_j convention (negative means the column improves a
// maximization).
class Tableau {
 public:
  Tableau(const StandardForm& form, const SimplexOptions& options)
      : options_(options),
        rows_(static_cast<int>(form.coefficients.rows())),
        columns_(static_cast<int>(form.coefficients.cols())),
        data_(rows_ + 1, columns_ + 1),
        basis_(form.unit_column),
        kinds_(form.kinds) {
    data_.setZero();
    data_.topLeftCorner(rows_, columns_) = form.coefficients;
    data_.topRightCorner(rows_, 1) = form.rhs;
    iteration_limit_ = 10000 + 200 * (rows_ + columns_);
  }

  int rows() const { return rows_; }
  int columns() const { return columns_; }
  int iterations() const { return iterations_; }
  bool used_bland() const { return used_bland_; }
  const std::vector<int>& basis() const { return basis_; }

  double Rhs(int r) const { return data_(r, columns_); }
  double Value() const { return data_(rows_, columns_); }
  double ReducedCost(int c) const { return data_(rows_, c); }

  // Prices out the objective row for the current basis.
  void SetCosts(const Eigen::VectorXd& costs) {
    Eigen::VectorXd basic_costs(rows_);
    for (int r = 0; r < rows_; ++r) basic_costs[r] = costs[basis_[r]];
    data_.row(rows_) = basic_costs.transpose() * data_.topRows(rows_);
    data_.row(rows_).head(columns_) -= costs.transpose();
  }

  void Pivot(int pivot_row, int pivot_column) {
    const double pivot = data_(pivot_row, pivot_column);
    data_.row(pivot_row) /= pivot;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pivot_row) continue;
      const double factor = data_(r, pivot_column);
      if (factor != 0.0) data_.row(r) -= factor * data_.row(pivot_row);
    }
    basis_[pivot_row] = pivot_column;
    if (++iterations_ > iteration_limit_) {
      throw SolverFailure("simplex iteration limit (" +
                          std::to_string(iteration_limit_) + ") exceeded");
    }
    if (!std::isfinite(Value())) {
      throw SolverFailure("non-finite objective after pivot " +
                          std::to_string(iterations_) + " on column " +
                          std::to_string(pivot_column));
    }
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Primal simplex over the columns with allowed[c] set.
  Outcome Run(const std::vector<bool>& allowed) {
    const double optimality_tol = options_.feasibility_tol * 0.1;
    const int stall_limit = std::max(1, options_.stall_factor * rows_);
    bool bland = false;
    int stalled = 0;
    double last_value = Value();
    while (true) {
      const int entering = ChooseEntering(allowed, bland, optimality_tol);
      if (entering < 0) return Outcome::kOptimal;
      const int leaving = ChooseLeaving(entering, bland);
      if (leaving < 0) return Outcome::kUnbounded;
      Pivot(leaving, entering);

      const double value = Value();
      if (value > last_value + 1e-12 * (1.0 + std::abs(last_value))) {
        stalled = 0;
        last_value = value;
      } else if (!bland && ++stalled >= stall_limit) {
        bland = true;
        used_bland_ = true;
      }
    }
  }

  // Pivots basic artificials at zero level out of the basis where the row
  // has a usable non-artificial entry; rows without one are redundant and
  // keep their artificial, which stays at zero.
  void DriveOutArtificials() {
    for (int r = 0; r < rows_; ++r) {
      if (kinds_[basis_[r]] != ColumnKind::kArtificial) continue;
      int best = -1;
      double best_magnitude = options_.pivot_eps;
      for (int c = 0; c < columns_; ++c) {
        if (kinds_[c] == ColumnKind::kArtificial) continue;
        const double magnitude = std::abs(data_(r, c));
        if (magnitude > best_magnitude) {
          best = c;
          best_magnitude = magnitude;
        }
      }
      if (best >= 0) Pivot(r, best);
    }
  }

  bool AllFinite() const { return data_.allFinite(); }

 private:
  int ChooseEntering(const std::vector<bool>& allowed, bool bland,
                     double tol) const {
    int entering = -1;
    double most_negative = -tol;
    for (int c = 0; c < columns_; ++c) {
      if (!allowed[c]) continue;
      const double d = ReducedCost(c);
      if (bland) {
        if (d < -tol) return c;
      } else if (d < most_negative) {
        most_negative = d;
        entering = c;
      }
    }
    return entering;
  }

  // Minimum ratio test. Ties go to the larger pivot under Dantzig's rule and
  // to the lowest-indexed basic variable under Bland's rule.
  int ChooseLeaving(int entering, bool bland) const {
    int leaving = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const double a = data_(r, entering);
      if (a <= options_.pivot_eps) continue;
      const double ratio = std::max(Rhs(r), 0.0) / a;
      if (leaving < 0) {
        leaving = r;
        best_ratio = ratio;
        continue;
      }
      const double tie_band = 1e-12 * (1.0 + best_ratio);
      if (ratio < best_ratio - tie_band) {
        leaving = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + tie_band) {
        const bool prefer =
            bland ? basis_[r] < basis_[leaving] : a > data_(leaving, entering);
        if (prefer) {
          leaving = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return leaving;
  }

  const SimplexOptions& options_;
  int rows_;
  int columns_;
  Eigen::MatrixXd data_;
  std::vector<int> basis_;
  std::vector<ColumnKind> kinds_;
  int iterations_ = 0;
  int iteration_limit_ = 0;
  bool used_bland_ = false;
};

double DataScale(const LpModel& model) {
  double scale = 1.0;
  for (const Variable& v : model.variables()) {
    scale = std::max(scale, std::abs(v.objective));
  }
  for (const Constraint& row : model.constraints()) {
    scale = std::max(scale, std::abs(row.rhs));
    for (double a : row.coefficients) scale = std::max(scale, std::abs(a));
  }
  return scale;
}

}  // namespace

LpSolution Solve(const LpModel& model, const SimplexOptions& options) {
  const StandardForm form = ToStandardForm(model);
  Tableau tableau(form, options);
  const int columns = tableau.columns();
  const double scale = DataScale(model);

  LpSolution solution;

  // Phase 1: maximize minus the sum of artificials.
  Eigen::VectorXd phase1_costs = Eigen::VectorXd::Zero(columns);
  bool has_artificials = false;
  for (int c = 0; c < columns; ++c) {
    if (form.kinds[c] == ColumnKind::kArtificial) {
      phase1_costs[c] = -1.0;
      has_artificials = true;
    }
  }
  if (has_artificials) {
    tableau.SetCosts(phase1_costs);
    tableau.Run(std::vector<bool>(columns, true));
    if (tableau.Value() < -options.feasibility_tol * scale) {
      solution.status = LpStatus::kInfeasible;
      solution.iterations = tableau.iterations();
      solution.used_bland = tableau.used_bland();
      return solution;
    }
    tableau.DriveOutArtificials();
  }

  // Phase 2.
  std::vector<bool> allowed(columns);
  for (int c = 0; c < columns; ++c) {
    allowed[c] = form.kinds[c] != ColumnKind::kArtificial;
  }
  tableau.SetCosts(form.costs);
  const Tableau::Outcome outcome = tableau.Run(allowed);
  solution.iterations = tableau.iterations();
  solution.used_bland = tableau.used_bland();
  if (outcome == Tableau::Outcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  if (!tableau.AllFinite()) {
    throw SolverFailure("non-finite entries in the final tableau");
  }

  std::vector<double> standard_x(columns, 0.0);
  for (int r = 0; r < tableau.rows(); ++r) {
    standard_x[tableau.basis()[r]] = tableau.Rhs(r);
  }
  solution.x.resize(model.num_variables());
  for (int j = 0; j < model.num_variables(); ++j) {
    double value = standard_x[form.positive_column[j]];
    if (form.negative_column[j] >= 0) {
      value -= standard_x[form.negative_column[j]];
    }
    solution.x[j] = value;
  }
  // The unit column of row i prices out to (c_B^T B^-1)_i since its phase 2
  // cost is zero.
  solution.duals.resize(model.num_constraints());
  for (int i = 0; i < model.num_constraints(); ++i) {
    solution.duals[i] = form.sense_sign * form.row_sign[i] *
                        tableau.ReducedCost(form.unit_column[i]);
  }
  solution.objective_value = ObjectiveValue(model, solution.x);
  solution.status = LpStatus::kOptimal;

  const double primal = PrimalViolation(model, solution.x);
  const double dual = DualViolation(model, solution.duals);
  const double gap = std::abs(solution.objective_value -
                              DualObjectiveValue(model, solution.duals));
  if (primal > options.feasibility_tol * scale ||
      dual > options.feasibility_tol * scale ||
      gap > options.gap_tol * (1.0 + std::abs(solution.objective_value))) {
    throw SolverFailure("optimal basis failed verification: primal violation " +
                        std::to_string(primal) + ", dual violation " +
                        std::to_string(dual) + ", objective gap " +
                        std::to_string(gap) + " after " +
                        std::to_string(solution.iterations) + " pivots");
  }
  return solution;
}

}  // namespace tpass::lp
