// Copyright 2026 The UECP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UECP_ROUNDING_H_
#define UECP_ROUNDING_H_

// Iterative rounding of fractional column-generation solutions, and the
// driver that alternates column generation with rounding until the master
// solution is integral.

#include <functional>

#include "json.hpp"
#include "uecp/colgen.h"
#include "uecp/model.h"

namespace uecp {

// What one rounding step fixed, for tracing and tests.
struct RoundStepReport {
  int fixed_from_ones = 0;   // cells with z = 1
  int nearest_slot = -1;     // the cell rounded by closeness to 0 or 1
  int nearest_content = -1;
  FixState nearest_state = FixState::kFree;
  int fixed_by_capacity = 0;  // cells fixed to 0 for lack of space
  int columns_discarded = 0;
  int columns_synthesized = 0;
};

// One rounding step on the current column-generation output:
//  1. fixes x_tf = 1 where z_tf = 1 (as long as the content still fits the
//     slot's residual space);
//  2. among free cells with fractional z, takes the one closest to 0 and
//     the one closest to 1 (smallest t, then f, on ties). If the former is
//     closer it is fixed to 0, otherwise the latter is fixed to 1 when it
//     fits the residual space and to 0 when it does not;
//  3. fixes to 0 every free cell whose content exceeds the slot's residual
//     space.
// Columns breaking a fixing are dropped from `pool`, and every content is
// given back its minimal complying column if it lost it, which keeps the
// master feasible. Throws Error(kInvalidArgument) if no free cell has a
// fractional z.
RoundStepReport RoundStep(const Instance& inst, const FractionalSolution& frac,
                          ColumnPool& pool, FixSet& fixes);

struct SolveOptions {
  CgaOptions cga;
  // Called with every column-generation result, fractional or not.
  std::function<void(const CgaResult&, const ColumnPool&)> on_cga_result;
};

struct SolveStats {
  int iterations = 0;  // column-generation calls
  int cga_iterations = 0;  // master solves over all calls
  int rounding_steps = 0;
  int columns_generated = 0;
  double lower_bound = 0.0;
  double cost = 0.0;
  double gap = 0.0;  // percent, (cost - lb) / lb * 100
  double runtime_ms = 0.0;
};

nlohmann::json ToJson(const SolveStats& stats);

struct SolveResult {
  Schedule schedule;
  double lower_bound = 0.0;  // objective of the first, unfixed master
  SolveStats stats;
  FixSet fixes;  // final fixings, all honored by the schedule
};

// Column generation and rounding until integral. The schedule is checked
// for exact capacity feasibility; a violation raises Error(kNumerical).
SolveResult Solve(const Instance& inst, const SolveOptions& options = {});

// Percent gap (cost - lb) / lb * 100, 0 when lb <= 0 and clamped at 0 for
// differences within the cost tolerance.
double GapPercent(double cost, double lower_bound);

}  // namespace uecp

#endif  // UECP_ROUNDING_H_
