// Copyright 2026 The ewcert Authors
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

// General normalized estimation by a primal log-barrier method on the block
// formulation
//
//   maximize  +-sum c_ij g_ij   s.t.  [[t I, C], [C^T, t I]] >= 0,
//   t = 1 / sqrt((dA - 1)(dB - 1)),
//
// with C restricted to the measured support.

#ifndef EWCERT_SOLVER_H_
#define EWCERT_SOLVER_H_

#include <vector>

#include "ewcert/grid.h"
#include "ewcert/ne_result.h"

namespace ewcert {

struct SolverOptions {
  // Absolute accuracy of the returned NE value.
  double tol = 1e-8;
  // Newton steps per sign branch.
  int max_iter = 200;
  // Barrier weight reduction per outer step.
  double mu_factor = 0.2;
};

// Uses every measured entry of the grid.
NEResult ne_solve(const CorrelatorGrid& grid, const SolverOptions& opts = {});
NEResult ne_solve(const CorrelatorGrid& grid, const std::vector<GridIndex>& support,
                  const SolverOptions& opts = {});
NEResult ne_solve(const CorrelatorGrid& grid, const MeasurementSet& set,
                  const SolverOptions& opts = {});

// One result per set; throws InputError unless each set is contained in the
// next one.
std::vector<NEResult> ne_monotone_report(const CorrelatorGrid& grid,
                                         const std::vector<MeasurementSet>& chain,
                                         const SolverOptions& opts = {});

}  // namespace ewcert

#endif  // EWCERT_SOLVER_H_
