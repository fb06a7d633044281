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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_util.h"
#include "tpass/errors.h"

namespace tpass {
namespace {

using testing::Vec;

double MaxAbsDiff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// For a fixed (B, C) the triple is only determined up to
// (A + d, pi - d, rho + d), so kernels are compared modulo a constant.
double KernelDistance(const Matrix& a, const Matrix& b) {
  const Matrix diff = a - b;
  return (diff.array() - diff(0, 0)).abs().maxCoeff();
}

TEST(BimatrixGameTest, RejectsShapeMismatch) {
  EXPECT_THROW(BimatrixGame(Matrix::Zero(2, 2), Matrix::Zero(2, 3)),
               InputError);
  EXPECT_THROW(BimatrixGame(Matrix::Zero(0, 2), Matrix::Zero(0, 2)),
               InputError);
}

TEST(IsSeparableSumTest, MisprintedDemoMatricesFail) {
  const SeparabilityCheck check =
      IsSeparableSum(testing::MisprintedPdBimatrix(), 1e-9);
  EXPECT_FALSE(check.separable);
  // S = [[1, 1/2], [1/2, 3/2]]; 3/2 - 1/2 - 1/2 + 1.
  EXPECT_DOUBLE_EQ(check.tetrad_residual, 1.5);
}

TEST(IsSeparableSumTest, SingleRowOrColumnAlwaysSeparable) {
  const Matrix b = Matrix::Random(1, 4);
  const Matrix c = Matrix::Random(1, 4);
  const SeparabilityCheck row = IsSeparableSum(BimatrixGame(b, c), 0.0);
  EXPECT_TRUE(row.separable);
  EXPECT_EQ(row.tetrad_residual, 0.0);
  const SeparabilityCheck col =
      IsSeparableSum(BimatrixGame(b.transpose(), c.transpose()), 0.0);
  EXPECT_TRUE(col.separable);
}

TEST(IsSeparableSumTest, RejectsNegativeTolerance) {
  EXPECT_THROW(IsSeparableSum(testing::MisprintedPdBimatrix(), -1.0),
               InputError);
}

TEST(IsSeparableSumTest, AnchoredResidualAgreesWithAllPairsTetrads) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 4;
    const int n = 1 + (trial / 4) % 4;
    Matrix b(m, n), c(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        b(i, j) = unit(rng);
        c(i, j) = unit(rng);
      }
    }
    // Half the trials are separable by construction.
    if (trial % 2 == 0) {
      const BimatrixGame composed = Compose(RandomTpass(m, n, -1, 1, trial));
      b = composed.row_payoffs();
      c = composed.col_payoffs();
    }
    const double all_pairs = testing::AllPairsTetradResidual(b + c);
    const SeparabilityCheck check = IsSeparableSum(BimatrixGame(b, c), 1e-9);
    // Every anchored tetrad is a tetrad, and every tetrad is a signed sum of
    // four anchored ones.
    EXPECT_LE(check.tetrad_residual, all_pairs + 1e-12);
    EXPECT_LE(all_pairs, 4.0 * check.tetrad_residual + 1e-12);
    if (trial % 2 == 0) {
      EXPECT_TRUE(check.separable);
      EXPECT_LE(all_pairs, 1e-12);
    }
  }
}

TEST(DecomposeTest, ConstantSumGame) {
  Matrix b(2, 2), c(2, 2);
  b << 1, 0, 0, 1;
  c << 0, 1, 1, 0;
  const DecompositionResult r = Decompose(BimatrixGame(b, c), 1e-9);
  EXPECT_EQ(r.game.row_bonus(), Vec({0.5, 0.5}));
  EXPECT_EQ(r.game.col_bonus(), Vec({0.5, 0.5}));
  EXPECT_EQ(r.game.kernel(), (b.array() - 0.5).matrix());
  EXPECT_EQ(r.max_residual, 0.0);
}

TEST(DecomposeTest, RecoversDemoGeneratorsExactly) {
  const DecompositionResult r = Decompose(Compose(testing::PdGame()), 1e-9);
  EXPECT_EQ(r.game, testing::PdGame());
  EXPECT_EQ(r.max_residual, 0.0);
}

TEST(DecomposeTest, MisprintedMatricesThrowWithResidual) {
  try {
    Decompose(testing::MisprintedPdBimatrix(), 1e-9);
    FAIL() << "expected NotSeparable";
  } catch (const NotSeparable& e) {
    EXPECT_DOUBLE_EQ(e.residual(), 1.5);
  }
}

TEST(DecomposeTest, GaugeIsFixedAtFirstCell) {
  const BimatrixGame g = Compose(RandomTpass(3, 4, -1, 1, 8));
  const DecompositionResult r = Decompose(g, 1e-9);
  const double s11 = g.row_payoffs()(0, 0) + g.col_payoffs()(0, 0);
  EXPECT_NEAR(r.game.col_bonus()[0], s11 / 2.0, 1e-15);
}

TEST(DecomposeTest, RoundTripRandomGames) {
  for (int seed = 0; seed < 300; ++seed) {
    const int m = 1 + seed % 6;
    const int n = 1 + (seed / 6) % 6;
    const TpassGame g = RandomTpass(m, n, -1, 1, seed);
    const BimatrixGame composed = Compose(g);
    const DecompositionResult r = Decompose(composed, 1e-9);
    const BimatrixGame again = Compose(r.game);
    EXPECT_LE(MaxAbsDiff(again.row_payoffs(), composed.row_payoffs()), 1e-12);
    EXPECT_LE(MaxAbsDiff(again.col_payoffs(), composed.col_payoffs()), 1e-12);
    const double d = g.row_bonus()[0] - r.game.row_bonus()[0];
    EXPECT_LE(MaxAbsDiff(r.game.kernel(), (g.kernel().array() + d).matrix()),
              1e-12);
    EXPECT_LE(
        MaxAbsDiff(r.game.row_bonus(), (g.row_bonus().array() - d).matrix()),
        1e-12);
    EXPECT_LE(
        MaxAbsDiff(r.game.col_bonus(), (g.col_bonus().array() + d).matrix()),
        1e-12);
  }
}

TEST(DecomposeTest, GaugeShiftMovesPayoffsByConstant) {
  const TpassGame g = RandomTpass(3, 2, -1, 1, 21);
  const double c = 0.37;
  const TpassGame shifted(g.kernel(), (g.row_bonus().array() + c).matrix(),
                          (g.col_bonus().array() - c).matrix());
  const BimatrixGame a = Compose(g);
  const BimatrixGame b = Compose(shifted);
  EXPECT_LE(MaxAbsDiff(b.row_payoffs(), (a.row_payoffs().array() + c).matrix()),
            1e-15);
  EXPECT_LE(MaxAbsDiff(b.col_payoffs(), (a.col_payoffs().array() - c).matrix()),
            1e-15);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const MixedStrategy p = testing::RandomSimplexPoint(rng, 3);
    const MixedStrategy q = testing::RandomSimplexPoint(rng, 2);
    const EquilibriumReport ra = IsEquilibrium(g, p, q);
    const EquilibriumReport rb = IsEquilibrium(shifted, p, q);
    EXPECT_EQ(ra.is_equilibrium, rb.is_equilibrium);
    EXPECT_NEAR(ra.row_violation, rb.row_violation, 1e-12);
  }
}

TEST(DecomposeTest, SingleEntryPerturbationRejected) {
  const BimatrixGame base = Compose(RandomTpass(3, 3, -1, 1, 4));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix b = base.row_payoffs();
      b(i, j) += 1e-3;
      EXPECT_THROW(Decompose(BimatrixGame(b, base.col_payoffs()), 1e-9),
                   NotSeparable)
          << "entry " << i << "," << j;
    }
  }
}

TEST(DecomposeTest, CommutesWithPermutations) {
  const TpassGame g = RandomTpass(4, 3, -1, 1, 55);
  std::vector<int> rows(4), cols(3);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    Matrix a(4, 3);
    Vector pi(4), rho(3);
    for (int i = 0; i < 4; ++i) {
      pi[i] = g.row_bonus()[rows[i]];
      for (int j = 0; j < 3; ++j) a(i, j) = g.kernel()(rows[i], cols[j]);
    }
    for (int j = 0; j < 3; ++j) rho[j] = g.col_bonus()[cols[j]];
    const DecompositionResult r =
        Decompose(Compose(TpassGame(a, pi, rho)), 1e-9);
    EXPECT_LE(KernelDistance(r.game.kernel(), a), 1e-12);
  }
}

TEST(ComposeTest, MatchesPayoffMatrices) {
  const TpassGame g = RandomTpass(2, 5, -3, 3, 77);
  const BimatrixGame b = Compose(g);
  const PayoffMatrices pm = BuildPayoffMatrices(g);
  EXPECT_EQ(b.row_payoffs(), pm.row);
  EXPECT_EQ(b.col_payoffs(), pm.col);
}

}  // namespace
}  // namespace tpass
