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

#include "tpass/game.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tpass/errors.h"

namespace tpass {
namespace {

void CheckDimensions(const TpassGame& game, const MixedStrategy& p,
                     const MixedStrategy& q) {
  if (p.size() != game.num_rows() || q.size() != game.num_cols()) {
    throw InputError("strategy dimensions (" + std::to_string(p.size()) + ", " +
                     std::to_string(q.size()) +
                     ") do not match game dimensions (" +
                     std::to_string(game.num_rows()) + ", " +
                     std::to_string(game.num_cols()) + ")");
  }
}

double SimplexViolation(const Vector& x) {
  double violation = std::abs(x.sum() - 1.0);
  if (x.size() > 0) violation = std::max(violation, -x.minCoeff());
  return violation;
}

}  // namespace

TpassGame::TpassGame(Matrix kernel, Vector row_bonus, Vector col_bonus)
    : kernel_(std::move(kernel)),
      row_bonus_(std::move(row_bonus)),
      col_bonus_(std::move(col_bonus)) {
  if (kernel_.rows() < 1 || kernel_.cols() < 1) {
    throw InputError("game needs at least one row and one column");
  }
  if (row_bonus_.size() != kernel_.rows()) {
    throw InputError("pi has " + std::to_string(row_bonus_.size()) +
                     " entries but A has " + std::to_string(kernel_.rows()) +
                     " rows");
  }
  if (col_bonus_.size() != kernel_.cols()) {
    throw InputError("rho has " + std::to_string(col_bonus_.size()) +
                     " entries but A has " + std::to_string(kernel_.cols()) +
                     " columns");
  }
  if (!kernel_.allFinite() || !row_bonus_.allFinite() ||
      !col_bonus_.allFinite()) {
    throw InputError("game entries must be finite");
  }
}

bool TpassGame::operator==(const TpassGame& other) const {
  return kernel_.rows() == other.kernel_.rows() &&
         kernel_.cols() == other.kernel_.cols() && kernel_ == other.kernel_ &&
         row_bonus_ == other.row_bonus_ && col_bonus_ == other.col_bonus_;
}

MixedStrategy MixedStrategy::FromWeights(Vector weights, double tol) {
  if (weights.size() < 1) throw InputError("empty strategy");
  if (!weights.allFinite()) throw InputError("strategy has non-finite entries");
  for (int k = 0; k < weights.size(); ++k) {
    if (weights[k] < -tol) {
      throw InputError("strategy coordinate " + std::to_string(k + 1) +
                       " is negative (" + std::to_string(weights[k]) + ")");
    }
  }
  const double sum = weights.sum();
  if (std::abs(sum - 1.0) > tol) {
    throw InputError("strategy coordinates sum to " + std::to_string(sum) +
                     ", not 1");
  }
  // Adding +0.0 turns any -0.0 left by the clamp into +0.0.
  weights = weights.cwiseMax(0.0).array() + 0.0;
  weights /= weights.sum();
  return MixedStrategy(std::move(weights));
}

MixedStrategy MixedStrategy::FromWeights(const std::vector<double>& weights,
                                         double tol) {
  return FromWeights(
      Vector(Eigen::Map<const Vector>(weights.data(), weights.size())), tol);
}

MixedStrategy MixedStrategy::Pure(int size, int index) {
  if (size < 1 || index < 1 || index > size) {
    throw InputError("pure strategy index " + std::to_string(index) +
                     " out of range 1.." + std::to_string(size));
  }
  Vector w = Vector::Zero(size);
  w[index - 1] = 1.0;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::Uniform(int size) {
  if (size < 1) throw InputError("empty strategy");
  return MixedStrategy(Vector::Constant(size, 1.0 / size));
}

std::vector<int> MixedStrategy::Support(double threshold) const {
  std::vector<int> support;
  for (int k = 0; k < size(); ++k) {
    if (weights_[k] > threshold) support.push_back(k + 1);
  }
  return support;
}

std::pair<double, double> PurePayoffs(const TpassGame& game, int i, int j) {
  if (i < 1 || i > game.num_rows() || j < 1 || j > game.num_cols()) {
    throw InputError("pure profile (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range");
  }
  const double a = game.kernel()(i - 1, j - 1);
  return {a + game.row_bonus()[i - 1], -a + game.col_bonus()[j - 1]};
}

double RowPayoff(const TpassGame& game, const MixedStrategy& p,
                 const MixedStrategy& q) {
  CheckDimensions(game, p, q);
  return p.weights().dot(game.kernel() * q.weights()) +
         p.weights().dot(game.row_bonus());
}

double ColPayoff(const TpassGame& game, const MixedStrategy& p,
                 const MixedStrategy& q) {
  CheckDimensions(game, p, q);
  return -p.weights().dot(game.kernel() * q.weights()) +
         game.col_bonus().dot(q.weights());
}

Matrix RowBonusMatrix(const Vector& row_bonus, int num_cols) {
  return row_bonus.replicate(1, num_cols);
}

Matrix ColBonusMatrix(const Vector& col_bonus, int num_rows) {
  return col_bonus.transpose().replicate(num_rows, 1);
}

PayoffMatrices BuildPayoffMatrices(const TpassGame& game) {
  return {game.kernel() + RowBonusMatrix(game.row_bonus(), game.num_cols()),
          -game.kernel() + ColBonusMatrix(game.col_bonus(), game.num_rows())};
}

EquilibriumReport IsEquilibrium(const TpassGame& game, const MixedStrategy& p,
                                const MixedStrategy& q, double tol) {
  CheckDimensions(game, p, q);
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const Vector row_deviations = game.kernel() * q.weights() + game.row_bonus();
  const Vector col_deviations =
      -game.kernel().transpose() * p.weights() + game.col_bonus();

  EquilibriumReport report;
  report.row_violation = row_deviations.maxCoeff() - RowPayoff(game, p, q);
  report.col_violation = col_deviations.maxCoeff() - ColPayoff(game, p, q);
  report.simplex_violation =
      std::max(SimplexViolation(p.weights()), SimplexViolation(q.weights()));
  report.is_equilibrium = std::max({report.row_violation, report.col_violation,
                                    report.simplex_violation}) <= tol;
  return report;
}

std::vector<ParetoCell> ParetoImprovingCells(const TpassGame& game,
                                             double row_reference,
                                             double col_reference) {
  std::vector<ParetoCell> cells;
  for (int i = 1; i <= game.num_rows(); ++i) {
    for (int j = 1; j <= game.num_cols(); ++j) {
      const auto [row, col] = PurePayoffs(game, i, j);
      if (row > row_reference && col > col_reference) {
        cells.push_back({i, j, row, col});
      }
    }
  }
  return cells;
}

TpassGame RandomTpass(int num_rows, int num_cols, double lo, double hi,
                      std::uint64_t seed) {
  if (num_rows < 1 || num_cols < 1) {
    throw InputError("random game needs m >= 1 and n >= 1");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw InputError("random game bounds must be finite with lo <= hi");
  }
  std::mt19937_64 engine(seed);
  auto draw = [&] {
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  };
  Matrix kernel(num_rows, num_cols);
  for (int i = 0; i < num_rows; ++i) {
    for (int j = 0; j < num_cols; ++j) kernel(i, j) = draw();
  }
  Vector row_bonus(num_rows);
  for (int i = 0; i < num_rows; ++i) row_bonus[i] = draw();
  Vector col_bonus(num_cols);
  for (int j = 0; j < num_cols; ++j) col_bonus[j] = draw();
  return TpassGame(std::move(kernel), std::move(row_bonus),
                   std::move(col_bonus));
}

}  // namespace tpass
