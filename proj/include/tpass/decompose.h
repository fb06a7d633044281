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

// Recognizing separable-sum structure in an arbitrary bimatrix game.
//
// A bimatrix game (B, C) is a TPASS game exactly when S = B + C satisfies
// S_ij = pi_i + rho_j for some vectors pi, rho. That holds iff every tetrad
// S_ij - S_i1 - S_1j + S_11 vanishes. The representation is unique up to the
// gauge (pi + c, rho - c); Decompose fixes it with rho_1 = S_11 / 2.

#ifndef TPASS_DECOMPOSE_H_
#define TPASS_DECOMPOSE_H_

#include "tpass/game.h"

namespace tpass {

// Arbitrary two-player game: B holds row player payoffs, C column player
// payoffs.
class BimatrixGame {
 public:
  // Throws InputError on shape mismatch, empty matrices, non-finite entries.
  BimatrixGame(Matrix row_payoffs, Matrix col_payoffs);

  int num_rows() const { return static_cast<int>(row_payoffs_.rows()); }
  int num_cols() const { return static_cast<int>(row_payoffs_.cols()); }
  const Matrix& row_payoffs() const { return row_payoffs_; }
  const Matrix& col_payoffs() const { return col_payoffs_; }

 private:
  Matrix row_payoffs_;
  Matrix col_payoffs_;
};

struct SeparabilityCheck {
  bool separable = false;
  // max_ij |S_ij - S_i1 - S_1j + S_11|.
  double tetrad_residual = 0.0;
};

struct DecompositionResult {
  TpassGame game;
  // max_ij |C - (-A + C(rho))| after extraction.
  double max_residual = 0.0;
};

// Default acceptance tolerance: 1e-9 scaled by max(1, max |S_ij|).
double DefaultSeparabilityTol(const BimatrixGame& game);

SeparabilityCheck IsSeparableSum(const BimatrixGame& game, double tol);

// Throws NotSeparable (carrying the tetrad residual) when the game fails
// IsSeparableSum at `tol`, or when the extraction residual exceeds
// (m + n) * tol.
DecompositionResult Decompose(const BimatrixGame& game, double tol);

BimatrixGame Compose(const TpassGame& game);

}  // namespace tpass

#endif  // TPASS_DECOMPOSE_H_
