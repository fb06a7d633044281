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

#include "tpass/oracle.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "tpass/errors.h"

namespace tpass {
namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> Combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int i = pos + 1; i < k; ++i) current[i] = current[i - 1] + 1;
  }
  return out;
}

// Mixed strategy over `size` coordinates supported on `mixing`, making the
// opponent indifferent across `opponent`. `payoff(own, opp)` is the
// opponent's payoff when this player plays `own` and the opponent `opp`.
template <typename Payoff>
std::optional<Vector> SolveIndifference(int size,
                                        const std::vector<int>& mixing,
                                        const std::vector<int>& opponent,
                                        Payoff payoff, double tol) {
  const int k = static_cast<int>(mixing.size());
  Matrix system = Matrix::Zero(k + 1, k + 1);
  Vector rhs = Vector::Zero(k + 1);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) system(r, c) = payoff(mixing[c], opponent[r]);
    system(r, k) = -1.0;
  }
  for (int c = 0; c < k; ++c) system(k, c) = 1.0;
  rhs[k] = 1.0;

  const Eigen::PartialPivLU<Matrix> lu(system);
  if (!(lu.rcond() > 1e-12)) return std::nullopt;
  const Vector solution = lu.solve(rhs);
  if (!solution.allFinite()) return std::nullopt;

  Vector weights = Vector::Zero(size);
  for (int c = 0; c < k; ++c) {
    if (solution[c] < -tol) return std::nullopt;
    weights[mixing[c]] = std::max(solution[c], 0.0);
  }
  const double sum = weights.sum();
  if (!(sum > 0.0)) return std::nullopt;
  return Vector(weights / sum);
}

std::vector<int> OneBased(const std::vector<int>& indices) {
  std::vector<int> out(indices);
  for (int& i : out) ++i;
  return out;
}

double MaxNormDistance(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

double BimatrixDeviationGain(const BimatrixGame& game, const MixedStrategy& p,
                             const MixedStrategy& q) {
  if (p.size() != game.num_rows() || q.size() != game.num_cols()) {
    throw InputError("strategy dimensions do not match the bimatrix game");
  }
  const Vector row_values = game.row_payoffs() * q.weights();
  const Vector col_values = game.col_payoffs().transpose() * p.weights();
  const double row_gain = row_values.maxCoeff() - p.weights().dot(row_values);
  const double col_gain = col_values.maxCoeff() - q.weights().dot(col_values);
  return std::max({row_gain, col_gain, 0.0});
}

std::vector<EnumeratedEquilibrium> EnumerateEquilibria(
    const BimatrixGame& game, const EnumerationOptions& options) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  if (m > options.size_cap || n > options.size_cap) {
    throw InputError("support enumeration is capped at " +
                     std::to_string(options.size_cap) + "x" +
                     std::to_string(options.size_cap) + ", game is " +
                     std::to_string(m) + "x" + std::to_string(n));
  }
  const Matrix& row_payoffs = game.row_payoffs();
  const Matrix& col_payoffs = game.col_payoffs();

  std::vector<EnumeratedEquilibrium> found;
  for (int k = 1; k <= std::min(m, n); ++k) {
    const auto row_sets = Combinations(m, k);
    const auto col_sets = Combinations(n, k);
    for (const std::vector<int>& rows : row_sets) {
      for (const std::vector<int>& cols : col_sets) {
        // q makes the row player indifferent over `rows`.
        const auto q = SolveIndifference(
            n, cols, rows,
            [&](int col, int row) { return row_payoffs(row, col); },
            options.tol);
        if (!q) continue;
        const auto p = SolveIndifference(
            m, rows, cols,
            [&](int row, int col) { return col_payoffs(row, col); },
            options.tol);
        if (!p) continue;

        MixedStrategy p_strategy = MixedStrategy::FromWeights(*p);
        MixedStrategy q_strategy = MixedStrategy::FromWeights(*q);
        if (BimatrixDeviationGain(game, p_strategy, q_strategy) > options.tol) {
          continue;
        }
        const bool duplicate = std::any_of(
            found.begin(), found.end(), [&](const EnumeratedEquilibrium& e) {
              return std::max(MaxNormDistance(e.p.weights(), *p),
                              MaxNormDistance(e.q.weights(), *q)) <=
                     options.dedup_eps;
            });
        if (duplicate) continue;

        const double row_payoff =
            p_strategy.weights().dot(row_payoffs * q_strategy.weights());
        const double col_payoff =
            p_strategy.weights().dot(col_payoffs * q_strategy.weights());
        found.push_back({std::move(p_strategy),
                         std::move(q_strategy),
                         {OneBased(rows), OneBased(cols)},
                         row_payoff,
                         col_payoff});
      }
    }
  }
  return found;
}

CrossCheckResult CrossCheckDetails(const TpassGame& game,
                                   const EquilibriumSolution& solution,
                                   double tol, int size_cap) {
  const BimatrixGame bimatrix = Compose(game);
  EnumerationOptions options;
  options.tol = tol;
  options.size_cap = size_cap;
  const std::vector<EnumeratedEquilibrium> equilibria =
      EnumerateEquilibria(bimatrix, options);

  CrossCheckResult result;
  result.num_enumerated = static_cast<int>(equilibria.size());
  result.matched_enumeration = std::any_of(
      equilibria.begin(), equilibria.end(),
      [&](const EnumeratedEquilibrium& e) {
        return std::max(MaxNormDistance(e.p.weights(), solution.p.weights()),
                        MaxNormDistance(e.q.weights(), solution.q.weights())) <=
               tol;
      });
  result.passes_best_response =
      BimatrixDeviationGain(bimatrix, solution.p, solution.q) <= tol;
  result.confirmed = result.matched_enumeration || result.passes_best_response;
  return result;
}

bool CrossCheck(const TpassGame& game, const EquilibriumSolution& solution,
                double tol, int size_cap) {
  return CrossCheckDetails(game, solution, tol, size_cap).confirmed;
}

}  // namespace tpass
