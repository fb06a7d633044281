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

#ifndef TPASS_SIMPLEX_H_
#define TPASS_SIMPLEX_H_

#include "tpass/lp_model.h"

namespace tpass::lp {

struct SimplexOptions {
  // Primal and dual feasibility, and the phase 1 infeasibility threshold.
  double feasibility_tol = 1e-9;
  // Allowed relative gap between primal and dual objective at the optimum.
  double gap_tol = 1e-8;
  // Tableau entries at or below this magnitude are never pivoted on.
  double pivot_eps = 1e-11;
  // Switch from Dantzig's rule to Bland's rule after
  // stall_factor * (number of rows) pivots without objective progress.
  int stall_factor = 50;
};

// Two-phase primal simplex on a dense tableau.
//
// Free variables are split into a difference of two non-negative columns
// and recombined in the result. Duals are read off the final basis. The pivot
// sequence is fully determined by the model, so repeated solves take the same
// path.
//
// An Optimal result is re-verified against the original model (primal and
// dual feasibility, objective gap); a basis that fails that check raises
// SolverFailure, as do non-finite tableau entries and runaway iteration
// counts.
LpSolution Solve(const LpModel& model, const SimplexOptions& options = {});

}  // namespace tpass::lp

#endif  // TPASS_SIMPLEX_H_
