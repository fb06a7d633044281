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

#ifndef TPASS_GAME_H_
#define TPASS_GAME_H_

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace tpass {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Default tolerance for accepting a vector as a point of the probability
// simplex.
inline constexpr double kSimplexTol = 1e-9;

// Default tolerance for certifying an equilibrium.
inline constexpr double kEquilibriumTol = 1e-8;

// A two-person additively-separable sum game (A, pi, rho).
//
// When the row player picks row i and the column player picks column j, the
// row player receives a_ij + pi_i and the column player receives
// -a_ij + rho_j, so the payoff sum pi_i + rho_j separates across the players'
// choices. Constant pi and rho give a constant-sum game.
class TpassGame {
 public:
  // Throws InputError on empty or inconsistent dimensions or non-finite
  // entries.
  TpassGame(Matrix kernel, Vector row_bonus, Vector col_bonus);

  int num_rows() const { return static_cast<int>(kernel_.rows()); }
  int num_cols() const { return static_cast<int>(kernel_.cols()); }

  // A: the zero-sum component.
  const Matrix& kernel() const { return kernel_; }
  // pi: bonus depending only on the row player's choice.
  const Vector& row_bonus() const { return row_bonus_; }
  // rho: bonus depending only on the column player's choice.
  const Vector& col_bonus() const { return col_bonus_; }

  // Exact entrywise equality, dimensions included.
  bool operator==(const TpassGame& other) const;

 private:
  Matrix kernel_;
  Vector row_bonus_;
  Vector col_bonus_;
};

// A probability vector. Construction validates and is the only way in, so a
// MixedStrategy is always on the simplex.
class MixedStrategy {
 public:
  // Accepts weights that are >= -tol and sum to 1 within tol; small
  // negatives are clamped to zero and the result renormalized. Anything
  // further off throws InputError rather than being silently repaired.
  static MixedStrategy FromWeights(Vector weights, double tol = kSimplexTol);
  static MixedStrategy FromWeights(const std::vector<double>& weights,
                                   double tol = kSimplexTol);

  // The pure strategy e_index of the given size; index is 1-based.
  static MixedStrategy Pure(int size, int index);

  static MixedStrategy Uniform(int size);

  int size() const { return static_cast<int>(weights_.size()); }
  const Vector& weights() const { return weights_; }
  double operator[](int k) const { return weights_[k]; }

  // 1-based indices of the strictly positive coordinates.
  std::vector<int> Support(double threshold = 0.0) const;

 private:
  explicit MixedStrategy(Vector weights) : weights_(std::move(weights)) {}

  Vector weights_;
};

// Outcome of a best-response test. Violations are absolute payoff gaps: how
// much the best pure deviation gains over the current payoff.
struct EquilibriumReport {
  bool is_equilibrium = false;
  // max_i (A q + pi)_i - f^R(p, q).
  double row_violation = 0.0;
  // max_j (-A^T p + rho)_j - f^C(p, q).
  double col_violation = 0.0;
  double simplex_violation = 0.0;
  // Only filled by the LP duality certificate: |primal obj - dual obj|.
  double objective_gap = 0.0;
};

// Payoffs (row, column) at the pure profile (i, j), 1-based.
std::pair<double, double> PurePayoffs(const TpassGame& game, int i, int j);

// f^R(p, q) = p^T A q + p^T pi.
double RowPayoff(const TpassGame& game, const MixedStrategy& p,
                 const MixedStrategy& q);

// f^C(p, q) = -p^T A q + rho^T q.
double ColPayoff(const TpassGame& game, const MixedStrategy& p,
                 const MixedStrategy& q);

// B = A + R(pi) and C = -A + C(rho), where R(pi) repeats pi across columns
// and C(rho) repeats rho down rows.
struct PayoffMatrices {
  Matrix row;  // B
  Matrix col;  // C
};
PayoffMatrices BuildPayoffMatrices(const TpassGame& game);

// R(pi) and C(rho) on their own.
Matrix RowBonusMatrix(const Vector& row_bonus, int num_cols);
Matrix ColBonusMatrix(const Vector& col_bonus, int num_rows);

// Tests the equilibrium inequalities against pure deviations only; by
// bilinearity no mixed deviation can do better than the best pure one.
EquilibriumReport IsEquilibrium(const TpassGame& game, const MixedStrategy& p,
                                const MixedStrategy& q,
                                double tol = kEquilibriumTol);

// A pure profile whose payoffs strictly beat a reference payoff pair for
// both players. Indices are 1-based.
struct ParetoCell {
  int row = 0;
  int col = 0;
  double row_payoff = 0.0;
  double col_payoff = 0.0;
};
std::vector<ParetoCell> ParetoImprovingCells(const TpassGame& game,
                                             double row_reference,
                                             double col_reference);

// Random game with every entry of A, pi, rho drawn independently and
// uniformly from [lo, hi].
//
// The generator is std::mt19937_64 seeded with `seed`; each draw takes one
// 64-bit output x and maps it to lo + (hi - lo) * (x >> 11) * 2^-53. Entries
// are drawn in the order A (row-major), pi, rho. Both the engine and the
// mapping are fully specified, so the same arguments reproduce the same game
// on every platform.
TpassGame RandomTpass(int num_rows, int num_cols, double lo, double hi,
                      std::uint64_t seed);

}  // namespace tpass

#endif  // TPASS_GAME_H_
