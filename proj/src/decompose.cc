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

#include "tpass/decompose.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpass/errors.h"

namespace tpass {

BimatrixGame::BimatrixGame(Matrix row_payoffs, Matrix col_payoffs)
    : row_payoffs_(std::move(row_payoffs)),
      col_payoffs_(std::move(col_payoffs)) {
  if (row_payoffs_.rows() < 1 || row_payoffs_.cols() < 1) {
    throw InputError("bimatrix game needs at least one row and one column");
  }
  if (row_payoffs_.rows() != col_payoffs_.rows() ||
      row_payoffs_.cols() != col_payoffs_.cols()) {
    throw InputError("B is " + std::to_string(row_payoffs_.rows()) + "x" +
                     std::to_string(row_payoffs_.cols()) + " but C is " +
                     std::to_string(col_payoffs_.rows()) + "x" +
                     std::to_string(col_payoffs_.cols()));
  }
  if (!row_payoffs_.allFinite() || !col_payoffs_.allFinite()) {
    throw InputError("bimatrix entries must be finite");
  }
}

double DefaultSeparabilityTol(const BimatrixGame& game) {
  const Matrix sum = game.row_payoffs() + game.col_payoffs();
  return 1e-9 * std::max(1.0, sum.cwiseAbs().maxCoeff());
}

SeparabilityCheck IsSeparableSum(const BimatrixGame& game, double tol) {
  if (!(tol >= 0.0)) throw InputError("tolerance must be non-negative");
  const Matrix sum = game.row_payoffs() + game.col_payoffs();
  double residual = 0.0;
  for (int i = 1; i < sum.rows(); ++i) {
    for (int j = 1; j < sum.cols(); ++j) {
      residual = std::max(
          residual, std::abs(sum(i, j) - sum(i, 0) - sum(0, j) + sum(0, 0)));
    }
  }
  return {residual <= tol, residual};
}

DecompositionResult Decompose(const BimatrixGame& game, double tol) {
  const SeparabilityCheck check = IsSeparableSum(game, tol);
  if (!check.separable) {
    throw NotSeparable("payoff sum is not separable: tetrad residual " +
                           std::to_string(check.tetrad_residual) +
                           " exceeds tolerance " + std::to_string(tol),
                       check.tetrad_residual);
  }
  const int m = game.num_rows();
  const int n = game.num_cols();
  const Matrix sum = game.row_payoffs() + game.col_payoffs();

  // Gauge: rho_1 = S_11 / 2.
  const double rho_first = sum(0, 0) / 2.0;
  const Vector row_bonus = sum.col(0).array() - rho_first;
  const Vector col_bonus = sum.row(0).transpose().array() - row_bonus[0];
  Matrix kernel = game.row_payoffs() - RowBonusMatrix(row_bonus, n);

  const Matrix rebuilt_col = -kernel + ColBonusMatrix(col_bonus, m);
  const double residual =
      (game.col_payoffs() - rebuilt_col).cwiseAbs().maxCoeff();
  if (residual > (m + n) * tol) {
    throw NotSeparable("extraction residual " + std::to_string(residual) +
                           " exceeds (m + n) * tol",
                       residual);
  }
  return {TpassGame(std::move(kernel), row_bonus, col_bonus), residual};
}

BimatrixGame Compose(const TpassGame& game) {
  PayoffMatrices payoffs = BuildPayoffMatrices(game);
  return BimatrixGame(std::move(payoffs.row), std::move(payoffs.col));
}

}  // namespace tpass
