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

#ifndef UECP_ORACLE_H_
#define UECP_ORACLE_H_

// Exhaustive solvers for tiny instances, used to check the heuristic path.

#include <vector>

#include "uecp/model.h"

namespace uecp {

inline constexpr int kMaxEnumerationSlots = 12;
inline constexpr long kMaxColumnCombinations = 10'000'000;

// Number of legal trajectories over `num_slots` slots.
long CountTrajectories(int num_slots);

// All legal trajectories of content f in increasing lexicographic order of
// their age vectors (absent < 0 < 1 < ...). Throws Error(kSizeLimit) when
// T exceeds kMaxEnumerationSlots.
std::vector<Column> EnumerateColumns(const Instance& inst, int f);

struct ExactResult {
  Schedule schedule;
  double objective = 0.0;  // schedule.cost.total
  long nodes_explored = 0;
};

// Minimum-cost capacity-feasible schedule by depth-first search over
// per-content trajectories with capacity and cost-bound pruning. Among
// optimal schedules the first in (content, column index) lexicographic order
// wins. Throws Error(kSizeLimit) when the product of per-content column
// counts exceeds kMaxColumnCombinations.
ExactResult ExactOptimum(const Instance& inst);

}  // namespace uecp

#endif  // UECP_ORACLE_H_
