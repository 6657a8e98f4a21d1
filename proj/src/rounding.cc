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

#include "uecp/rounding.h"

#include <chrono>
#include <cmath>

#include "uecp/error.h"

namespace uecp {

namespace {

bool IsFractional(double z) {
  return z > kIntegralityTolerance && z < 1.0 - kIntegralityTolerance;
}

}  // namespace

RoundStepReport RoundStep(const Instance& inst, const FractionalSolution& frac,
                          ColumnPool& pool, FixSet& fixes) {
  const int num_slots = inst.num_slots;
  const int num_contents = inst.num_contents();
  RoundStepReport report;

  for (int t = 0; t < num_slots; ++t) {
    double residual = inst.capacity - fixes.FixedLoad(inst, t);
    for (int f = 0; f < num_contents; ++f) {
      if (!fixes.is_free(t, f) ||
          std::abs(frac.z(t, f) - 1.0) > kIntegralityTolerance) {
        continue;
      }
      if (inst.size(f) <= residual) {
        fixes.Fix(t, f, FixState::kFixed1);
        residual -= inst.size(f);
        ++report.fixed_from_ones;
      }
    }
  }

  int low_t = -1, low_f = -1, high_t = -1, high_f = -1;
  double low = 2.0, high = 2.0;
  for (int t = 0; t < num_slots; ++t) {
    for (int f = 0; f < num_contents; ++f) {
      const double z = frac.z(t, f);
      if (!fixes.is_free(t, f) || !IsFractional(z)) continue;
      if (z < low) {
        low = z;
        low_t = t;
        low_f = f;
      }
      if (1.0 - z < high) {
        high = 1.0 - z;
        high_t = t;
        high_f = f;
      }
    }
  }
  if (low_t < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "rounding needs a fractional caching decision");
  }
  if (low < high) {
    report.nearest_slot = low_t;
    report.nearest_content = low_f;
    report.nearest_state = FixState::kFixed0;
  } else {
    report.nearest_slot = high_t;
    report.nearest_content = high_f;
    const double residual = inst.capacity - fixes.FixedLoad(inst, high_t);
    report.nearest_state = inst.size(high_f) <= residual ? FixState::kFixed1
                                                         : FixState::kFixed0;
  }
  fixes.Fix(report.nearest_slot, report.nearest_content, report.nearest_state);

  for (int t = 0; t < num_slots; ++t) {
    const double residual = inst.capacity - fixes.FixedLoad(inst, t);
    for (int f = 0; f < num_contents; ++f) {
      if (fixes.is_free(t, f) && inst.size(f) > residual) {
        fixes.Fix(t, f, FixState::kFixed0);
        ++report.fixed_by_capacity;
      }
    }
  }

  report.columns_discarded = pool.Discard(fixes);
  for (int f = 0; f < num_contents; ++f) {
    if (pool.Add(fixes.MinimalColumn(f))) ++report.columns_synthesized;
  }
  return report;
}

nlohmann::json ToJson(const SolveStats& stats) {
  return {{"iterations", stats.iterations},
          {"columns_generated", stats.columns_generated},
          {"lb", stats.lower_bound},
          {"cost", stats.cost},
          {"gap", stats.gap},
          {"runtime_ms", stats.runtime_ms}};
}

double GapPercent(double cost, double lower_bound) {
  if (lower_bound <= 0.0) return 0.0;
  const double diff = cost - lower_bound;
  if (std::abs(diff) <= kCostTolerance * std::max(1.0, lower_bound)) {
    return 0.0;
  }
  return diff / lower_bound * 100.0;
}

SolveResult Solve(const Instance& inst, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ValidateInstance(inst);
  const int num_slots = inst.num_slots;
  const int num_contents = inst.num_contents();

  SolveResult result;
  result.fixes = FixSet(num_slots, num_contents);
  ColumnPool pool(num_contents, num_slots);
  SolveStats& stats = result.stats;

  CgaResult cga = RunCga(inst, pool, result.fixes, options.cga);
  if (options.on_cga_result) options.on_cga_result(cga, pool);
  result.lower_bound = cga.lower_bound;
  stats.iterations = 1;
  stats.cga_iterations = cga.iterations;
  stats.columns_generated = cga.columns_added;

  const int max_steps = num_slots * num_contents;
  while (!ZBinary(cga.solution)) {
    if (stats.rounding_steps >= max_steps) {
      throw Error(ErrorKind::kNumerical, "rounding made no progress");
    }
    const int free_before = result.fixes.num_free();
    const RoundStepReport step =
        RoundStep(inst, cga.solution, pool, result.fixes);
    if (result.fixes.num_free() >= free_before) {
      throw Error(ErrorKind::kNumerical, "rounding step fixed nothing");
    }
    ++stats.rounding_steps;
    stats.columns_generated += step.columns_synthesized;
    cga = RunCga(inst, pool, result.fixes, options.cga);
    if (options.on_cga_result) options.on_cga_result(cga, pool);
    ++stats.iterations;
    stats.cga_iterations += cga.iterations;
    stats.columns_generated += cga.columns_added;
  }

  std::vector<Column> chosen;
  for (int f = 0; f < num_contents; ++f) {
    const auto& w = cga.solution.weights[f];
    const auto best = std::max_element(w.begin(), w.end()) - w.begin();
    chosen.push_back(pool.columns(f)[best]);
  }
  result.schedule = MakeSchedule(inst, std::move(chosen));
  if (!IsCapacityFeasible(inst, result.schedule)) {
    throw Error(ErrorKind::kNumerical, "rounded schedule exceeds capacity");
  }
  for (const Column& col : result.schedule.columns) {
    if (!result.fixes.Complies(col)) {
      throw Error(ErrorKind::kNumerical, "rounded schedule breaks a fixing");
    }
  }

  stats.lower_bound = result.lower_bound;
  stats.cost = result.schedule.cost.total;
  stats.gap = GapPercent(stats.cost, stats.lower_bound);
  stats.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return result;
}

}  // namespace uecp
