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

#include "uecp/baselines.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "uecp/rng.h"

namespace uecp {

namespace {

std::vector<double> TotalRequests(const Instance& inst) {
  std::vector<double> totals(inst.num_contents());
  for (int f = 0; f < inst.num_contents(); ++f) {
    totals[f] = inst.demand.row(f).cast<double>().sum();
  }
  return totals;
}

// Admits contents of slot t in `order` and records their ages.
void FillSlot(const Instance& inst, int t, const std::vector<int>& order,
              const BaselineOptions& options,
              std::vector<std::vector<int>>& ages) {
  double remaining = inst.capacity;
  for (int f : order) {
    const double size = inst.size(f);
    if (size > remaining) continue;
    remaining -= size;
    const int prev = t > 0 ? ages[f][t - 1] : kAbsent;
    if (prev == kAbsent) {
      ages[f][t] = 0;
      continue;
    }
    const double stale =
        inst.aoi_weight * inst.penalty(f, prev + 1) * inst.demand(f, t);
    ages[f][t] =
        stale >= options.refresh_threshold * inst.refresh_cost(f) ? 0 : prev + 1;
  }
}

Schedule Assemble(const Instance& inst, std::vector<std::vector<int>> ages) {
  std::vector<Column> columns;
  for (int f = 0; f < inst.num_contents(); ++f) {
    columns.emplace_back(f, std::move(ages[f]));
  }
  return MakeSchedule(inst, std::move(columns));
}

}  // namespace

Schedule RunPba(const Instance& inst, uint64_t /*seed*/,
                const BaselineOptions& options) {
  ValidateInstance(inst);
  const std::vector<double> totals = TotalRequests(inst);
  std::vector<int> order;
  for (int f = 0; f < inst.num_contents(); ++f) {
    if (totals[f] > 0) order.push_back(f);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return totals[a] > totals[b]; });
  std::vector<std::vector<int>> ages(inst.num_contents(),
                                     std::vector<int>(inst.num_slots, kAbsent));
  for (int t = 0; t < inst.num_slots; ++t) {
    FillSlot(inst, t, order, options, ages);
  }
  return Assemble(inst, std::move(ages));
}

Schedule RunRba(const Instance& inst, uint64_t seed,
                const BaselineOptions& options) {
  ValidateInstance(inst);
  const std::vector<double> totals = TotalRequests(inst);
  Rng rng(seed);
  std::vector<std::vector<int>> ages(inst.num_contents(),
                                     std::vector<int>(inst.num_slots, kAbsent));
  for (int t = 0; t < inst.num_slots; ++t) {
    std::vector<double> weights = totals;
    std::vector<int> order;
    const auto candidates = std::count_if(weights.begin(), weights.end(),
                                          [](double w) { return w > 0; });
    for (long drawn = 0; drawn < candidates; ++drawn) {
      const int f = rng.WeightedIndex(weights);
      order.push_back(f);
      weights[f] = 0.0;
    }
    FillSlot(inst, t, order, options, ages);
  }
  return Assemble(inst, std::move(ages));
}

}  // namespace uecp
