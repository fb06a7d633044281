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

#include "tpass/equilibrium_lp.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tpass/errors.h"

namespace tpass {
namespace {

using lp::LpModel;
using lp::LpSolution;
using lp::LpStatus;
using lp::Relation;
using lp::VariableBound;

MixedStrategy StrategyFromSlice(const std::vector<double>& values, int offset,
                                int size, const char* what) {
  Vector weights(size);
  for (int k = 0; k < size; ++k) weights[k] = values[offset + k];
  try {
    return MixedStrategy::FromWeights(std::move(weights));
  } catch (const InputError& e) {
    throw CertificationFailure(
        std::string(what) +
        " read off the LP is not a distribution: " + e.what());
  }
}

double SlacknessResidual(const TpassGame& game, const MixedStrategy& p,
                         const MixedStrategy& q, double alpha, double beta) {
  const double bilinear = p.weights().dot(game.kernel() * q.weights());
  const double row_bonus = p.weights().dot(game.row_bonus());
  const double col_bonus = game.col_bonus().dot(q.weights());
  return std::max(std::abs(bilinear - alpha + row_bonus),
                  std::abs(bilinear + beta - col_bonus));
}

void Certify(const TpassGame& game, const EquilibriumSolution& solution,
             double tol, const char* method) {
  const EquilibriumReport report =
      IsEquilibrium(game, solution.p, solution.q, tol);
  if (!report.is_equilibrium) {
    throw CertificationFailure(
        std::string(method) +
        " produced a pair that fails the best-response test: row violation " +
        std::to_string(report.row_violation) + ", column violation " +
        std::to_string(report.col_violation));
  }
}

LpSolution SolveOrThrow(const LpModel& model, const lp::SimplexOptions& options,
                        const char* what) {
  LpSolution solution = lp::Solve(model, options);
  if (solution.status != LpStatus::kOptimal) {
    throw SolverFailure(std::string(what) + " returned status " +
                        std::string(lp::ToString(solution.status)) +
                        " but is always feasible and bounded");
  }
  return solution;
}

std::vector<double> Concat(const Vector& a, double b) {
  std::vector<double> out(a.data(), a.data() + a.size());
  out.push_back(b);
  return out;
}

}  // namespace

LpModel BuildPrimalLp(const TpassGame& game) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  LpModel model(lp::ObjectiveSense::kMaximize);
  for (int j = 0; j < n; ++j) {
    model.AddVariable("q" + std::to_string(j + 1), VariableBound::kNonNegative,
                      game.col_bonus()[j]);
  }
  model.AddVariable("alpha", VariableBound::kFree, -1.0);
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = game.kernel()(i, j);
    row[n] = -1.0;
    model.AddConstraint(std::move(row), Relation::kLessEqual,
                        -game.row_bonus()[i], "row" + std::to_string(i + 1));
  }
  std::vector<double> simplex(n + 1, 1.0);
  simplex[n] = 0.0;
  model.AddConstraint(std::move(simplex), Relation::kEqual, 1.0, "simplex_q");
  return model;
}

LpModel BuildDualLp(const TpassGame& game) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  LpModel model(lp::ObjectiveSense::kMinimize);
  for (int i = 0; i < m; ++i) {
    model.AddVariable("p" + std::to_string(i + 1), VariableBound::kNonNegative,
                      -game.row_bonus()[i]);
  }
  model.AddVariable("beta", VariableBound::kFree, 1.0);
  for (int j = 0; j < n; ++j) {
    std::vector<double> row(m + 1);
    for (int i = 0; i < m; ++i) row[i] = game.kernel()(i, j);
    row[m] = 1.0;
    model.AddConstraint(std::move(row), Relation::kGreaterEqual,
                        game.col_bonus()[j], "col" + std::to_string(j + 1));
  }
  std::vector<double> simplex(m + 1, 1.0);
  simplex[m] = 0.0;
  model.AddConstraint(std::move(simplex), Relation::kEqual, 1.0, "simplex_p");
  return model;
}

EquilibriumSolution SolveEquilibrium(const TpassGame& game, double tol,
                                     const lp::SimplexOptions& options) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  const LpModel model = BuildPrimalLp(game);
  const LpSolution lp = SolveOrThrow(model, options, "primal LP");

  EquilibriumSolution solution{
      .p = StrategyFromSlice(lp.duals, 0, m, "row strategy"),
      .q = StrategyFromSlice(lp.x, 0, n, "column strategy"),
      .alpha = lp.x[n],
      .beta = lp.duals[m],
      .lp1_value = lp.objective_value,
  };
  solution.slackness_residual = SlacknessResidual(
      game, solution.p, solution.q, solution.alpha, solution.beta);
  Certify(game, solution, tol, "primal LP");
  return solution;
}

EquilibriumReport CertifyByDuality(const TpassGame& game,
                                   const MixedStrategy& p,
                                   const MixedStrategy& q, double tol) {
  const double alpha = RowPayoff(game, p, q);
  const double beta = ColPayoff(game, p, q);

  const LpModel primal = BuildPrimalLp(game);
  const LpModel dual = BuildDualLp(game);
  const std::vector<double> primal_point = Concat(q.weights(), alpha);
  const std::vector<double> dual_point = Concat(p.weights(), beta);

  EquilibriumReport report;
  report.row_violation = lp::PrimalViolation(primal, primal_point);
  report.col_violation = lp::PrimalViolation(dual, dual_point);
  report.simplex_violation = std::max(std::abs(p.weights().sum() - 1.0),
                                      std::abs(q.weights().sum() - 1.0));
  report.objective_gap = std::abs(lp::ObjectiveValue(primal, primal_point) -
                                  lp::ObjectiveValue(dual, dual_point));
  report.is_equilibrium =
      std::max({report.row_violation, report.col_violation,
                report.simplex_violation, report.objective_gap}) <= tol;
  return report;
}

LpModel BuildJointLp(const TpassGame& game) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  const int alpha = m + n;
  const int beta = m + n + 1;
  LpModel model(lp::ObjectiveSense::kMaximize);
  for (int i = 0; i < m; ++i) {
    model.AddVariable("p" + std::to_string(i + 1), VariableBound::kNonNegative,
                      game.row_bonus()[i]);
  }
  for (int j = 0; j < n; ++j) {
    model.AddVariable("q" + std::to_string(j + 1), VariableBound::kNonNegative,
                      game.col_bonus()[j]);
  }
  model.AddVariable("alpha", VariableBound::kFree, -1.0);
  model.AddVariable("beta", VariableBound::kFree, -1.0);

  // A q - alpha <= -pi: q only.
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(m + n + 2, 0.0);
    for (int j = 0; j < n; ++j) row[m + j] = game.kernel()(i, j);
    row[alpha] = -1.0;
    model.AddConstraint(std::move(row), Relation::kLessEqual,
                        -game.row_bonus()[i], "row" + std::to_string(i + 1));
  }
  // -A^T p - beta <= -rho: p only.
  for (int j = 0; j < n; ++j) {
    std::vector<double> row(m + n + 2, 0.0);
    for (int i = 0; i < m; ++i) row[i] = -game.kernel()(i, j);
    row[beta] = -1.0;
    model.AddConstraint(std::move(row), Relation::kLessEqual,
                        -game.col_bonus()[j], "col" + std::to_string(j + 1));
  }
  std::vector<double> simplex_p(m + n + 2, 0.0);
  std::fill_n(simplex_p.begin(), m, 1.0);
  model.AddConstraint(std::move(simplex_p), Relation::kEqual, 1.0, "simplex_p");
  std::vector<double> simplex_q(m + n + 2, 0.0);
  std::fill_n(simplex_q.begin() + m, n, 1.0);
  model.AddConstraint(std::move(simplex_q), Relation::kEqual, 1.0, "simplex_q");
  return model;
}

JointLpCheck CheckJointLp(const TpassGame& game, const MixedStrategy& p,
                          const MixedStrategy& q, double tol) {
  const double alpha = RowPayoff(game, p, q);
  const double beta = ColPayoff(game, p, q);
  std::vector<double> point(p.weights().data(), p.weights().data() + p.size());
  point.insert(point.end(), q.weights().data(), q.weights().data() + q.size());
  point.push_back(alpha);
  point.push_back(beta);

  const LpModel model = BuildJointLp(game);
  JointLpCheck check;
  check.max_violation = lp::PrimalViolation(model, point);
  check.objective = lp::ObjectiveValue(model, point);
  check.holds = check.max_violation <= tol;
  return check;
}

JointLpResult SolveJointLp(const TpassGame& game, double tol,
                           const lp::SimplexOptions& options) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  const LpModel model = BuildJointLp(game);
  const LpSolution lp = SolveOrThrow(model, options, "joint LP");

  if (std::abs(lp.objective_value) > tol) {
    throw CertificationFailure("joint LP optimum " +
                               std::to_string(lp.objective_value) +
                               " is not zero within tolerance");
  }
  EquilibriumSolution solution{
      .p = StrategyFromSlice(lp.x, 0, m, "row strategy"),
      .q = StrategyFromSlice(lp.x, m, n, "column strategy"),
      .alpha = lp.x[m + n],
      .beta = lp.x[m + n + 1],
  };
  solution.lp1_value =
      game.col_bonus().dot(solution.q.weights()) - solution.alpha;
  solution.slackness_residual = SlacknessResidual(
      game, solution.p, solution.q, solution.alpha, solution.beta);
  Certify(game, solution, tol, "joint LP");
  return {std::move(solution), lp.objective_value};
}

}  // namespace tpass
