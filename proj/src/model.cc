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

#include "uecp/model.h"

#include <cmath>
#include <sstream>

#include "uecp/error.h"

namespace uecp {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::kInvalidColumn:
      return "invalid column";
    case ErrorKind::kInfeasible:
      return "infeasible";
    case ErrorKind::kSizeLimit:
      return "size limit exceeded";
    case ErrorKind::kNumerical:
      return "numerical failure";
  }
  return "unknown";
}

AoIPenalty AoIPenalty::Linear(double coefficient) {
  AoIPenalty p;
  p.coefficient_ = coefficient;
  return p;
}

AoIPenalty AoIPenalty::Table(std::vector<double> values) {
  AoIPenalty p;
  p.coefficient_ = 0.0;
  p.table_ = std::move(values);
  return p;
}

double AoIPenalty::operator()(int age) const {
  if (age <= 0) return 0.0;
  if (table_.empty()) return coefficient_ * age;
  const size_t i = static_cast<size_t>(age);
  return i < table_.size() ? table_[i] : table_.back();
}

void AoIPenalty::Validate() const {
  if (table_.empty()) {
    if (!std::isfinite(coefficient_) || coefficient_ < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "linear AoI coefficient must be finite and nonnegative");
    }
    return;
  }
  if (table_.front() != 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "AoI table must start at 0");
  }
  for (size_t i = 1; i < table_.size(); ++i) {
    if (!std::isfinite(table_[i]) || table_[i] < table_[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "AoI table must be finite and nondecreasing");
    }
  }
}

void ValidateInstance(const Instance& inst) {
  auto fail = [](ErrorKind kind, const std::string& what) {
    throw Error(kind, "invalid instance: " + what);
  };
  if (inst.num_slots <= 0) fail(ErrorKind::kInvalidArgument, "T must be > 0");
  if (!std::isfinite(inst.capacity) || inst.capacity < 0.0) {
    fail(ErrorKind::kInvalidArgument, "capacity must be >= 0");
  }
  if (!std::isfinite(inst.cost_server) || !std::isfinite(inst.cost_cache) ||
      inst.cost_cache < 0.0) {
    fail(ErrorKind::kInvalidArgument, "costs must be finite and >= 0");
  }
  if (!(inst.cost_server > inst.cost_cache)) {
    fail(ErrorKind::kInvalidArgument, "cost_server must exceed cost_cache");
  }
  if (!std::isfinite(inst.aoi_weight) || inst.aoi_weight < 0.0) {
    fail(ErrorKind::kInvalidArgument, "aoi_weight must be >= 0");
  }
  const int num_contents = inst.num_contents();
  for (int f = 0; f < num_contents; ++f) {
    const Content& c = inst.contents[f];
    if (c.id != f + 1) {
      fail(ErrorKind::kInvalidArgument, "content ids must be 1..F in order");
    }
    if (!std::isfinite(c.size) || c.size <= 0.0) {
      fail(ErrorKind::kInvalidArgument, "content sizes must be > 0");
    }
    c.aoi_penalty.Validate();
  }
  if (inst.demand.rows() != num_contents ||
      inst.demand.cols() != inst.num_slots) {
    fail(ErrorKind::kDimensionMismatch, "demand must be F x T");
  }
  if ((inst.demand.array() < 0).any()) {
    fail(ErrorKind::kInvalidArgument, "demand must be nonnegative");
  }
  if (!inst.requests.empty()) {
    for (const Request& r : inst.requests) {
      if (r.content < 0 || r.content >= num_contents || r.slot < 0 ||
          r.slot >= inst.num_slots) {
        fail(ErrorKind::kInvalidArgument, "request out of range");
      }
    }
    if (DemandFromRequests(num_contents, inst.num_slots, inst.requests) !=
        inst.demand) {
      fail(ErrorKind::kInvalidArgument, "demand disagrees with requests");
    }
  }
}

Eigen::MatrixXi DemandFromRequests(int num_contents, int num_slots,
                                   std::span<const Request> requests) {
  Eigen::MatrixXi demand = Eigen::MatrixXi::Zero(num_contents, num_slots);
  for (const Request& r : requests) {
    if (r.content < 0 || r.content >= num_contents || r.slot < 0 ||
        r.slot >= num_slots) {
      throw Error(ErrorKind::kInvalidArgument, "request out of range");
    }
    ++demand(r.content, r.slot);
  }
  return demand;
}

Column Column::Empty(int content, int num_slots) {
  return Column(content, std::vector<int>(num_slots, kAbsent));
}

Column Column::Replay(int content, const std::vector<bool>& cached,
                      const std::vector<bool>& downloads) {
  std::vector<int> ages(cached.size(), kAbsent);
  for (size_t t = 0; t < cached.size(); ++t) {
    if (!cached[t]) continue;
    const bool fresh = t == 0 || ages[t - 1] == kAbsent || downloads[t];
    ages[t] = fresh ? 0 : ages[t - 1] + 1;
  }
  return Column(content, std::move(ages));
}

Column Column::FreshAt(int content, const std::vector<bool>& cached) {
  std::vector<int> ages(cached.size(), kAbsent);
  for (size_t t = 0; t < cached.size(); ++t) {
    if (cached[t]) ages[t] = 0;
  }
  return Column(content, std::move(ages));
}

int Column::num_cached() const {
  int n = 0;
  for (int a : ages_) n += a != kAbsent;
  return n;
}

int Column::num_downloads() const {
  int n = 0;
  for (int a : ages_) n += a == 0;
  return n;
}

bool IsValidTrajectory(std::span<const int> ages) {
  for (size_t t = 0; t < ages.size(); ++t) {
    const int a = ages[t];
    if (a < kAbsent) return false;
    if (a >= 1 && (t == 0 || ages[t - 1] != a - 1)) return false;
  }
  return true;
}

void ValidateColumn(const Instance& inst, const Column& col) {
  if (col.content() < 0 || col.content() >= inst.num_contents()) {
    throw Error(ErrorKind::kInvalidColumn, "column content out of range");
  }
  if (col.num_slots() != inst.num_slots) {
    throw Error(ErrorKind::kInvalidColumn, "column length differs from T");
  }
  if (!IsValidTrajectory(col.ages())) {
    throw Error(ErrorKind::kInvalidColumn,
                "illegal AoI trajectory " + FormatColumn(col));
  }
}

void ValidateSchedule(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.columns.size()) != inst.num_contents()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "schedule must hold one column per content");
  }
  for (int f = 0; f < inst.num_contents(); ++f) {
    const Column& col = sched.columns[f];
    if (col.content() != f) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "schedule columns must be ordered by content");
    }
    if (col.num_slots() != inst.num_slots) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "schedule column length differs from T");
    }
    ValidateColumn(inst, col);
  }
}

Schedule MakeSchedule(const Instance& inst, std::vector<Column> columns) {
  Schedule sched{std::move(columns), {}};
  sched.cost = TotalCost(inst, sched);
  return sched;
}

double SlotLoad(const Instance& inst, const Schedule& sched, int t) {
  double load = 0.0;
  for (const Column& col : sched.columns) {
    if (col.cached(t)) load += inst.size(col.content());
  }
  return load;
}

bool IsCapacityFeasible(const Instance& inst, const Schedule& sched) {
  for (int t = 0; t < inst.num_slots; ++t) {
    if (SlotLoad(inst, sched, t) > inst.capacity) return false;
  }
  return true;
}

double DownloadCost(const Instance& inst, const Schedule& sched) {
  ValidateSchedule(inst, sched);
  double cost = 0.0;
  for (int f = 0; f < inst.num_contents(); ++f) {
    for (int t = 0; t < inst.num_slots; ++t) {
      const double unit =
          sched.columns[f].cached(t) ? inst.cost_cache : inst.cost_server;
      cost += inst.size(f) * inst.demand(f, t) * unit;
    }
  }
  return cost;
}

double UpdateCost(const Instance& inst, const Schedule& sched) {
  ValidateSchedule(inst, sched);
  double cost = 0.0;
  for (int t = 0; t < inst.num_slots; ++t) {
    for (int f = 0; f < inst.num_contents(); ++f) {
      if (sched.columns[f].downloaded(t)) cost += inst.refresh_cost(f);
    }
  }
  return cost;
}

double AoICost(const Instance& inst, const Schedule& sched) {
  ValidateSchedule(inst, sched);
  double cost = 0.0;
  for (int f = 0; f < inst.num_contents(); ++f) {
    for (int t = 0; t < inst.num_slots; ++t) {
      const int age = sched.columns[f].age(t);
      if (age >= 1) cost += inst.penalty(f, age) * inst.demand(f, t);
    }
  }
  return cost;
}

CostBreakdown TotalCost(const Instance& inst, const Schedule& sched) {
  CostBreakdown c;
  c.download = DownloadCost(inst, sched);
  c.update = UpdateCost(inst, sched);
  c.aoi = AoICost(inst, sched);
  c.total = c.download + c.update + inst.aoi_weight * c.aoi;
  return c;
}

double ColumnCost(const Instance& inst, const Column& col) {
  ValidateColumn(inst, col);
  const int f = col.content();
  const double size = inst.size(f);
  double serve = 0.0;
  double refresh = 0.0;
  double stale = 0.0;
  for (int t = 0; t < inst.num_slots; ++t) {
    const double m = inst.demand(f, t);
    const int age = col.age(t);
    serve += size * m * (age != kAbsent ? inst.cost_cache : inst.cost_server);
    if (age == 0) refresh += inst.refresh_cost(f);
    if (age >= 1) stale += inst.penalty(f, age) * m;
  }
  return serve + refresh + inst.aoi_weight * stale;
}

std::string FormatColumn(const Column& col) {
  std::ostringstream os;
  os << "f" << col.content() << "[";
  for (int t = 0; t < col.num_slots(); ++t) {
    if (t) os << ' ';
    if (col.cached(t)) {
      os << col.age(t);
    } else {
      os << '-';
    }
  }
  os << "]";
  return os.str();
}

}  // namespace uecp
