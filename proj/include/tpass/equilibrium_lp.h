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

// Equilibria of TPASS games as solutions of linear programs.
//
// Two formulations are provided.
//
// The primal/dual pair. The primal is
//
//   maximize   rho^T q - alpha
//   subject to A q - alpha * 1 <= -pi,  sum_j q_j = 1,  q >= 0, alpha free
//
// and its dual is
//
//   minimize   -pi^T p + beta
//   subject to A^T p + beta * 1 >= rho,  sum_i p_i = 1,  p >= 0, beta free.
//
// Both are always feasible, so both have optima, and complementary slackness
// at a primal/dual optimum gives alpha = f^R(p, q) and beta = f^C(p, q),
// which turns the feasibility constraints into the best-response
// inequalities. Conversely every equilibrium, paired with those two scalars,
// is optimal for the pair.
//
// The joint program. Over (p, q, alpha, beta):
//
//   maximize   pi^T p + rho^T q - alpha - beta
//   subject to A q + pi - alpha * 1 <= 0,  -A^T p + rho - beta * 1 <= 0,
//              sum p = 1,  sum q = 1,  p, q >= 0,  alpha, beta free.
//
// Weighting the first block by p and the second by q and adding shows the
// objective is <= 0 at every feasible point (the p^T A q terms cancel). An
// equilibrium with its payoffs attains 0, and since an equilibrium always
// exists, the optimum is exactly 0 and the optimal (p, q) are precisely the
// equilibria.

#ifndef TPASS_EQUILIBRIUM_LP_H_
#define TPASS_EQUILIBRIUM_LP_H_

#include "tpass/game.h"
#include "tpass/lp_model.h"
#include "tpass/simplex.h"

namespace tpass {

struct EquilibriumSolution {
  MixedStrategy p;
  MixedStrategy q;
  // Row player's equilibrium payoff p^T A q + p^T pi.
  double alpha = 0.0;
  // Column player's equilibrium payoff -p^T A q + rho^T q.
  double beta = 0.0;
  // Primal objective rho^T q - alpha at the returned point.
  double lp1_value = 0.0;
  // max(|p^T A q - alpha + p^T pi|, |p^T A q + beta - rho^T q|).
  double slackness_residual = 0.0;
};

// Variables (q_1..q_n, alpha); rows row1..rowm then simplex_q.
lp::LpModel BuildPrimalLp(const TpassGame& game);

// Variables (p_1..p_m, beta); rows col1..coln then simplex_p.
lp::LpModel BuildDualLp(const TpassGame& game);

// Solves the primal program once and reads q, alpha from its solution and
// p, beta from its simplex multipliers (the m inequality duals form p, the
// simplex row's dual is beta). Only one equilibrium is returned when several
// exist: the vertex the deterministic pivot rule lands on.
//
// Throws SolverFailure from the engine, CertificationFailure if the
// assembled pair fails IsEquilibrium at `tol`.
EquilibriumSolution SolveEquilibrium(
    const TpassGame& game, double tol = kEquilibriumTol,
    const lp::SimplexOptions& options = lp::SimplexOptions{});

// Certifies a candidate pair through LP duality: with alpha = f^R(p, q) and
// beta = f^C(p, q), checks that (q, alpha) is primal feasible, (p, beta) is
// dual feasible, and the two objectives agree. row_violation and
// col_violation carry the primal and dual feasibility violations;
// objective_gap the objective mismatch.
EquilibriumReport CertifyByDuality(const TpassGame& game,
                                   const MixedStrategy& p,
                                   const MixedStrategy& q,
                                   double tol = kEquilibriumTol);

// Variables (p_1..p_m, q_1..q_n, alpha, beta); rows row1..rowm,
// col1..coln, simplex_p, simplex_q.
lp::LpModel BuildJointLp(const TpassGame& game);

struct JointLpCheck {
  bool holds = false;
  double max_violation = 0.0;
  // Objective at (p, q, f^R, f^C); zero up to rounding.
  double objective = 0.0;
};

// Evaluates the joint program at (p, q, f^R(p, q), f^C(p, q)), the scalars
// that make the objective vanish, and reports whether that point is
// feasible within tol. Holds iff (p, q) is an equilibrium.
JointLpCheck CheckJointLp(const TpassGame& game, const MixedStrategy& p,
                          const MixedStrategy& q, double tol = kEquilibriumTol);

struct JointLpResult {
  EquilibriumSolution solution;
  double optimal_value = 0.0;
};

// Solves the joint program and reads the equilibrium off the optimal vertex.
// Throws CertificationFailure if |optimal value| > tol or the vertex fails
// IsEquilibrium; either would contradict existence and signals a numerical
// problem.
JointLpResult SolveJointLp(
    const TpassGame& game, double tol = kEquilibriumTol,
    const lp::SimplexOptions& options = lp::SimplexOptions{});

}  // namespace tpass

#endif  // TPASS_EQUILIBRIUM_LP_H_
