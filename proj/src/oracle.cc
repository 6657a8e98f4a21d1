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

#include "uecp/oracle.h"

#include <limits>
#include <string>

#include "uecp/error.h"

namespace uecp {

long CountTrajectories(int num_slots) {
  long absent = 1;  // trajectories ending absent
  long cached = 1;  // trajectories ending cached
  for (int t = 1; t < num_slots; ++t) {
    const long next_absent = absent + cached;
    const long next_cached = absent + 2 * cached;
    absent = next_absent;
    cached = next_cached;
  }
  return num_slots > 0 ? absent + cached : 1;
}

namespace {

void Extend(int f, std::vector<int>& ages, int t, std::vector<Column>& out) {
  if (t == static_cast<int>(ages.size())) {
    out.emplace_back(f, ages);
    return;
  }
  ages[t] = kAbsent;
  Extend(f, ages, t + 1, out);
  ages[t] = 0;
  Extend(f, ages, t + 1, out);
  if (t > 0 && ages[t - 1] != kAbsent) {
    ages[t] = ages[t - 1] + 1;
    Extend(f, ages, t + 1, out);
  }
  ages[t] = kAbsent;
}

struct Candidate {
  double cost;
  std::vector<int> slots;  // cached slots
};

struct Search {
  const Instance& inst;
  std::vector<std::vector<Candidate>> candidates;
  std::vector<double> suffix_min;
  std::vector<double> load;
  std::vector<int> current;
  std::vector<int> best;
  double best_cost = std::numeric_limits<double>::infinity();
  long nodes = 0;

  void Run(int f, double partial) {
    ++nodes;
    const int num_contents = static_cast<int>(candidates.size());
    if (f == num_contents) {
      if (partial < best_cost) {
        best_cost = partial;
        best = current;
      }
      return;
    }
    if (partial + suffix_min[f] >= best_cost) return;
    const double size = inst.size(f);
    for (size_t k = 0; k < candidates[f].size(); ++k) {
      const Candidate& c = candidates[f][k];
      bool fits = true;
      for (int t : c.slots) {
        if (load[t] + size > inst.capacity) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const std::vector<double> saved = load;
      for (int t : c.slots) load[t] += size;
      current[f] = static_cast<int>(k);
      Run(f + 1, partial + c.cost);
      load = saved;
    }
  }
};

}  // namespace

std::vector<Column> EnumerateColumns(const Instance& inst, int f) {
  if (inst.num_slots > kMaxEnumerationSlots) {
    throw Error(ErrorKind::kSizeLimit,
                "column enumeration is limited to " +
                    std::to_string(kMaxEnumerationSlots) + " slots");
  }
  if (f < 0 || f >= inst.num_contents()) {
    throw Error(ErrorKind::kInvalidArgument, "content out of range");
  }
  std::vector<Column> out;
  out.reserve(CountTrajectories(inst.num_slots));
  std::vector<int> ages(inst.num_slots, kAbsent);
  Extend(f, ages, 0, out);
  return out;
}

ExactResult ExactOptimum(const Instance& inst) {
  ValidateInstance(inst);
  const int num_contents = inst.num_contents();
  if (inst.num_slots > kMaxEnumerationSlots) {
    throw Error(ErrorKind::kSizeLimit, "instance too large for exhaustion");
  }
  const long per_content = CountTrajectories(inst.num_slots);
  double combinations = 1.0;
  for (int f = 0; f < num_contents; ++f) combinations *= per_content;
  if (combinations > static_cast<double>(kMaxColumnCombinations)) {
    throw Error(ErrorKind::kSizeLimit,
                "instance too large for exhaustion: " +
                    std::to_string(combinations) + " combinations");
  }

  std::vector<std::vector<Column>> columns(num_contents);
  Search search{inst, {}, {}, {}, {}, {}};
  search.candidates.resize(num_contents);
  for (int f = 0; f < num_contents; ++f) {
    columns[f] = EnumerateColumns(inst, f);
    for (const Column& col : columns[f]) {
      Candidate c{ColumnCost(inst, col), {}};
      for (int t = 0; t < inst.num_slots; ++t) {
        if (col.cached(t)) c.slots.push_back(t);
      }
      search.candidates[f].push_back(std::move(c));
    }
  }
  search.suffix_min.assign(num_contents + 1, 0.0);
  for (int f = num_contents - 1; f >= 0; --f) {
    double lowest = std::numeric_limits<double>::infinity();
    for (const Candidate& c : search.candidates[f]) {
      lowest = std::min(lowest, c.cost);
    }
    search.suffix_min[f] = search.suffix_min[f + 1] + lowest;
  }
  search.load.assign(inst.num_slots, 0.0);
  search.current.assign(num_contents, 0);
  search.Run(0, 0.0);

  std::vector<Column> chosen;
  for (int f = 0; f < num_contents; ++f) {
    chosen.push_back(columns[f][search.best[f]]);
  }
  ExactResult result;
  result.schedule = MakeSchedule(inst, std::move(chosen));
  result.objective = result.schedule.cost.total;
  result.nodes_explored = search.nodes;
  return result;
}

}  // namespace uecp
