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

// Brute-force support enumeration for small bimatrix games.
//
// Works on (B, C) directly and never touches the LP code, so it serves as
// ground truth for the LP pipeline. For every pair of equal-size supports
// (I, J) it solves the indifference systems
//
//   sum_{j in J} B_ij q_j = u  (i in I),   sum_{j in J} q_j = 1
//   sum_{i in I} C_ij p_i = v  (j in J),   sum_{i in I} p_i = 1
//
// by LU with partial pivoting, discards singular systems and solutions with
// a coordinate below -tol, clamps the rest to the simplex, and keeps the
// pair if no pure deviation anywhere in the game beats it by more than tol.
// Cost grows like 4^min(m, n), hence the size cap.

#ifndef TPASS_ORACLE_H_
#define TPASS_ORACLE_H_

#include <vector>

#include "tpass/decompose.h"
#include "tpass/equilibrium_lp.h"
#include "tpass/game.h"

namespace tpass {

// 1-based pure strategy indices.
struct SupportPair {
  std::vector<int> row_support;
  std::vector<int> col_support;
};

struct EnumeratedEquilibrium {
  MixedStrategy p;
  MixedStrategy q;
  SupportPair support;
  double row_payoff = 0.0;  // p^T B q
  double col_payoff = 0.0;  // p^T C q
};

struct EnumerationOptions {
  double tol = kEquilibriumTol;
  // Pairs closer than this in max norm are reported once.
  double dedup_eps = 1e-7;
  // Largest m and n accepted. Each extra unit roughly quadruples the work.
  int size_cap = 5;
};

// Results are ordered by support: smaller supports first, then
// lexicographically by row support, then by column support.
// Throws InputError if either dimension exceeds options.size_cap.
std::vector<EnumeratedEquilibrium> EnumerateEquilibria(
    const BimatrixGame& game, const EnumerationOptions& options = {});

// Largest gain from a pure deviation for either player, floored at zero.
double BimatrixDeviationGain(const BimatrixGame& game, const MixedStrategy& p,
                             const MixedStrategy& q);

struct CrossCheckResult {
  bool confirmed = false;
  // The pair coincides with an enumerated equilibrium within tol.
  bool matched_enumeration = false;
  // The pair passes the best-response test on (B, C) within tol.
  bool passes_best_response = false;
  int num_enumerated = 0;
};

// Composes the game, enumerates its equilibria, and confirms `solution` if
// it matches one of them or, failing that, passes the best-response test on
// the composed bimatrix game (an LP can land on a degenerate-support
// equilibrium that enumeration represents differently).
CrossCheckResult CrossCheckDetails(const TpassGame& game,
                                   const EquilibriumSolution& solution,
                                   double tol = kEquilibriumTol,
                                   int size_cap = 5);

bool CrossCheck(const TpassGame& game, const EquilibriumSolution& solution,
                double tol = kEquilibriumTol, int size_cap = 5);

}  // namespace tpass

#endif  // TPASS_ORACLE_H_
