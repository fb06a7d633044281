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

#ifndef TPASS_LP_MODEL_H_
#define TPASS_LP_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

namespace tpass::lp {

enum class ObjectiveSense { kMaximize, kMinimize };

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class VariableBound { kNonNegative, kFree };

struct Variable {
  std::string name;
  VariableBound bound = VariableBound::kNonNegative;
  double objective = 0.0;
};

// coefficients . x (relation) rhs
struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// A general-form linear program: optimize c^T x subject to a list of
// linear constraints, each variable either non-negative or free.
class LpModel {
 public:
  explicit LpModel(ObjectiveSense sense = ObjectiveSense::kMaximize)
      : sense_(sense) {}

  // Variables must all be added before the first constraint.
  int AddVariable(std::string name, VariableBound bound, double objective);

  // Throws InputError if the coefficient count differs from the number of
  // variables or any value is non-finite.
  int AddConstraint(std::vector<double> coefficients, Relation relation,
                    double rhs, std::string name = {});

  ObjectiveSense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  std::vector<double> ObjectiveCoefficients() const;

 private:
  ObjectiveSense sense_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(LpStatus status);

// Result of a solve. `x` and `duals` are empty unless status is kOptimal.
//
// Duals are shadow prices: duals[i] is the rate of change of the optimal
// objective with respect to constraint i's rhs. Under that convention the
// optimal objective equals sum_i duals[i] * rhs[i], a <= row of a
// maximization has a non-negative dual, a >= row a non-positive one, and
// the signs flip for minimization.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  std::vector<double> duals;
  int iterations = 0;
  // True if the solve fell back to Bland's rule after stalling.
  bool used_bland = false;
};

double ObjectiveValue(const LpModel& model, const std::vector<double>& x);

// lhs minus rhs for every constraint.
std::vector<double> ConstraintSlacks(const LpModel& model,
                                     const std::vector<double>& x);

// Largest violation of any constraint or variable bound at x; zero when x is
// feasible.
double PrimalViolation(const LpModel& model, const std::vector<double>& x);

// c_j - A_j^T y for every variable.
std::vector<double> ReducedCosts(const LpModel& model,
                                 const std::vector<double>& duals);

// Largest violation of dual feasibility: sign conditions on the duals
// (given the relations and sense) and on the reduced costs (given the
// variable bounds).
double DualViolation(const LpModel& model, const std::vector<double>& duals);

// sum_i duals[i] * rhs[i].
double DualObjectiveValue(const LpModel& model,
                          const std::vector<double>& duals);

struct SlacknessCheck {
  bool holds = false;
  // max of |dual_i * slack_i| over constraints and |x_j * reduced_cost_j|
  // over variables.
  double residual = 0.0;
};

// Throws InputError unless solution.status is kOptimal.
SlacknessCheck CheckComplementarySlackness(const LpModel& model,
                                           const LpSolution& solution,
                                           double tol);

// The standard LP dual, one variable per primal constraint and one
// constraint per primal variable.
//
// Rows are first brought to the canonical direction for the sense (<= for
// maximization, >= for minimization) by negating any row facing the other
// way, so every inequality dual is non-negative and every equality dual is
// free. A non-negative primal variable yields a dual inequality, a free one
// a dual equality. Dual variable i is named "y_<constraint name>" and dual
// constraint j carries primal variable j's name.
LpModel Dualize(const LpModel& model);

}  // namespace tpass::lp

#endif  // TPASS_LP_MODEL_H_
