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

#include "tpass/lp_model.h"

#include <algorithm>
#include <cmath>

#include "tpass/errors.h"

namespace tpass::lp {
namespace {

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

void CheckPointSize(const LpModel& model, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != model.num_variables()) {
    throw InputError("point has " + std::to_string(x.size()) +
                     " coordinates, model has " +
                     std::to_string(model.num_variables()) + " variables");
  }
}

void CheckDualSize(const LpModel& model, const std::vector<double>& duals) {
  if (static_cast<int>(duals.size()) != model.num_constraints()) {
    throw InputError("dual vector has " + std::to_string(duals.size()) +
                     " entries, model has " +
                     std::to_string(model.num_constraints()) + " constraints");
  }
}

}  // namespace

int LpModel::AddVariable(std::string name, VariableBound bound,
                         double objective) {
  if (!constraints_.empty()) {
    throw InputError("variables must be added before constraints");
  }
  if (!std::isfinite(objective)) {
    throw InputError("objective coefficient of " + name + " is not finite");
  }
  variables_.push_back({std::move(name), bound, objective});
  return num_variables() - 1;
}

int LpModel::AddConstraint(std::vector<double> coefficients, Relation relation,
                           double rhs, std::string name) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw InputError("constraint " + name + " has " +
                     std::to_string(coefficients.size()) +
                     " coefficients, model has " +
                     std::to_string(num_variables()) + " variables");
  }
  if (!std::isfinite(rhs) ||
      !std::all_of(coefficients.begin(), coefficients.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw InputError("constraint " + name + " has non-finite data");
  }
  constraints_.push_back(
      {std::move(coefficients), relation, rhs, std::move(name)});
  return num_constraints() - 1;
}

std::vector<double> LpModel::ObjectiveCoefficients() const {
  std::vector<double> c;
  c.reserve(variables_.size());
  for (const Variable& v : variables_) c.push_back(v.objective);
  return c;
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kInfeasible:
      return "Infeasible";
    case LpStatus::kUnbounded:
      return "Unbounded";
  }
  return "Unknown";
}

double ObjectiveValue(const LpModel& model, const std::vector<double>& x) {
  CheckPointSize(model, x);
  return Dot(model.ObjectiveCoefficients(), x);
}

std::vector<double> ConstraintSlacks(const LpModel& model,
                                     const std::vector<double>& x) {
  CheckPointSize(model, x);
  std::vector<double> slacks;
  slacks.reserve(model.num_constraints());
  for (const Constraint& row : model.constraints()) {
    slacks.push_back(Dot(row.coefficients, x) - row.rhs);
  }
  return slacks;
}

double PrimalViolation(const LpModel& model, const std::vector<double>& x) {
  const std::vector<double> slacks = ConstraintSlacks(model, x);
  double violation = 0.0;
  for (int i = 0; i < model.num_constraints(); ++i) {
    switch (model.constraints()[i].relation) {
      case Relation::kLessEqual:
        violation = std::max(violation, slacks[i]);
        break;
      case Relation::kGreaterEqual:
        violation = std::max(violation, -slacks[i]);
        break;
      case Relation::kEqual:
        violation = std::max(violation, std::abs(slacks[i]));
        break;
    }
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.variables()[j].bound == VariableBound::kNonNegative) {
      violation = std::max(violation, -x[j]);
    }
  }
  return violation;
}

std::vector<double> ReducedCosts(const LpModel& model,
                                 const std::vector<double>& duals) {
  CheckDualSize(model, duals);
  std::vector<double> reduced = model.ObjectiveCoefficients();
  for (int i = 0; i < model.num_constraints(); ++i) {
    const std::vector<double>& a = model.constraints()[i].coefficients;
    for (int j = 0; j < model.num_variables(); ++j) {
      reduced[j] -= a[j] * duals[i];
    }
  }
  return reduced;
}

double DualViolation(const LpModel& model, const std::vector<double>& duals) {
  const bool maximize = model.sense() == ObjectiveSense::kMaximize;
  double violation = 0.0;
  for (int i = 0; i < model.num_constraints(); ++i) {
    const double y = duals[i];
    switch (model.constraints()[i].relation) {
      case Relation::kLessEqual:
        violation = std::max(violation, maximize ? -y : y);
        break;
      case Relation::kGreaterEqual:
        violation = std::max(violation, maximize ? y : -y);
        break;
      case Relation::kEqual:
        break;
    }
  }
  const std::vector<double> reduced = ReducedCosts(model, duals);
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.variables()[j].bound == VariableBound::kFree) {
      violation = std::max(violation, std::abs(reduced[j]));
    } else {
      violation = std::max(violation, maximize ? reduced[j] : -reduced[j]);
    }
  }
  return violation;
}

double DualObjectiveValue(const LpModel& model,
                          const std::vector<double>& duals) {
  CheckDualSize(model, duals);
  double value = 0.0;
  for (int i = 0; i < model.num_constraints(); ++i) {
    value += duals[i] * model.constraints()[i].rhs;
  }
  return value;
}

SlacknessCheck CheckComplementarySlackness(const LpModel& model,
                                           const LpSolution& solution,
                                           double tol) {
  if (solution.status != LpStatus::kOptimal) {
    throw InputError("complementary slackness needs an optimal solution, got " +
                     std::string(ToString(solution.status)));
  }
  const std::vector<double> slacks = ConstraintSlacks(model, solution.x);
  const std::vector<double> reduced = ReducedCosts(model, solution.duals);
  double residual = 0.0;
  for (int i = 0; i < model.num_constraints(); ++i) {
    residual = std::max(residual, std::abs(solution.duals[i] * slacks[i]));
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    residual = std::max(residual, std::abs(solution.x[j] * reduced[j]));
  }
  return {residual <= tol, residual};
}

LpModel Dualize(const LpModel& model) {
  const bool maximize = model.sense() == ObjectiveSense::kMaximize;
  // Canonical row direction: <= when maximizing, >= when minimizing.
  const Relation canonical =
      maximize ? Relation::kLessEqual : Relation::kGreaterEqual;

  std::vector<double> row_sign(model.num_constraints(), 1.0);
  LpModel dual(maximize ? ObjectiveSense::kMinimize
                        : ObjectiveSense::kMaximize);
  for (int i = 0; i < model.num_constraints(); ++i) {
    const Constraint& row = model.constraints()[i];
    if (row.relation != Relation::kEqual && row.relation != canonical) {
      row_sign[i] = -1.0;
    }
    const std::string name =
        row.name.empty() ? std::to_string(i + 1) : row.name;
    dual.AddVariable("y_" + name,
                     row.relation == Relation::kEqual
                         ? VariableBound::kFree
                         : VariableBound::kNonNegative,
                     row_sign[i] * row.rhs);
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& var = model.variables()[j];
    std::vector<double> column(model.num_constraints());
    for (int i = 0; i < model.num_constraints(); ++i) {
      column[i] = row_sign[i] * model.constraints()[i].coefficients[j];
    }
    Relation relation = Relation::kEqual;
    if (var.bound == VariableBound::kNonNegative) {
      relation = maximize ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    dual.AddConstraint(std::move(column), relation, var.objective, var.name);
  }
  return dual;
}

}  // namespace tpass::lp
