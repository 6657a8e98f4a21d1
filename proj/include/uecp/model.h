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

#ifndef UECP_MODEL_H_
#define UECP_MODEL_H_

// Domain types and the cost model of the update-enabled caching problem:
// a base station cache of capacity S serves F contents over T slots. Each
// slot a content is absent, freshly downloaded from the server (AoI 0) or
// kept from the previous slot (AoI +1). Serving a request costs l_f * c_b
// from the cache and l_f * c_s from the server; refreshing costs
// l_f * (c_s - c_b); stale copies cost lambda * p_f(age) per request.
//
// Indices are 0-based throughout the library (content f in [0, F), slot t
// in [0, T)). The JSON layer translates to the 1-based ids users see.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace uecp {

// Marks a slot in which a content is not cached.
inline constexpr int kAbsent = -1;

// Absolute tolerance for cost comparisons.
inline constexpr double kCostTolerance = 1e-9;

// Cost p_f(i) of serving a copy whose age is i slots. p(0) = 0 and p is
// nondecreasing. Tables shorter than the horizon hold their last value.
class AoIPenalty {
 public:
  AoIPenalty() = default;

  static AoIPenalty Linear(double coefficient);
  static AoIPenalty Table(std::vector<double> values);

  double operator()(int age) const;

  bool is_linear() const { return table_.empty(); }
  double coefficient() const { return coefficient_; }
  const std::vector<double>& table() const { return table_; }

  // Throws Error(kInvalidArgument) on a negative coefficient, a table not
  // starting at zero, or a decreasing table.
  void Validate() const;

  friend bool operator==(const AoIPenalty&, const AoIPenalty&) = default;

 private:
  double coefficient_ = 1.0;
  std::vector<double> table_;
};

struct Content {
  int id = 0;  // 1-based external id.
  double size = 1.0;
  AoIPenalty aoi_penalty;
};

// One request r of user u for content `content` (0-based) in slot `slot`
// (0-based).
struct Request {
  int user = 0;
  int index = 0;
  int content = 0;
  int slot = 0;

  friend bool operator==(const Request&, const Request&) = default;
};

struct Instance {
  int num_slots = 0;
  std::vector<Content> contents;
  double capacity = 0.0;
  double cost_server = 0.0;
  double cost_cache = 0.0;
  double aoi_weight = 0.0;
  // Optional; when present it must agree with `demand`.
  std::vector<Request> requests;
  // demand(f, t) = number of requests for content f in slot t.
  Eigen::MatrixXi demand;

  int num_contents() const { return static_cast<int>(contents.size()); }
  double size(int f) const { return contents[f].size; }
  // Server-to-cache transfer cost l_f * (c_s - c_b).
  double refresh_cost(int f) const {
    return contents[f].size * (cost_server - cost_cache);
  }
  double penalty(int f, int age) const { return contents[f].aoi_penalty(age); }
  long total_requests() const { return demand.cast<long>().sum(); }
};

// Throws Error(kInvalidArgument / kDimensionMismatch) when any model
// invariant is broken, including c_s <= c_b.
void ValidateInstance(const Instance& inst);

Eigen::MatrixXi DemandFromRequests(int num_contents, int num_slots,
                                   std::span<const Request> requests);

// A per-content trajectory over the horizon. ages()[t] is kAbsent when the
// content is not cached in slot t, 0 on a (re-)download and i >= 1 when the
// copy has been kept for i slots.
class Column {
 public:
  Column() = default;
  Column(int content, std::vector<int> ages)
      : content_(content), ages_(std::move(ages)) {}

  static Column Empty(int content, int num_slots);
  // Rebuilds ages slot by slot from the cached and download indicators.
  // A download flag is ignored in slots where the content is not cached;
  // a cached slot after an absent one is always a download.
  static Column Replay(int content, const std::vector<bool>& cached,
                       const std::vector<bool>& downloads);
  // Cached exactly in the given slots, re-downloaded in each of them.
  static Column FreshAt(int content, const std::vector<bool>& cached);

  int content() const { return content_; }
  int num_slots() const { return static_cast<int>(ages_.size()); }
  std::span<const int> ages() const { return ages_; }
  int age(int t) const { return ages_[t]; }
  bool cached(int t) const { return ages_[t] != kAbsent; }
  bool downloaded(int t) const { return ages_[t] == 0; }
  int num_cached() const;
  int num_downloads() const;

  friend bool operator==(const Column&, const Column&) = default;

 private:
  int content_ = 0;
  std::vector<int> ages_;
};

// True iff ages form a legal trajectory (first slot absent or fresh; every
// age i >= 1 preceded by age i - 1).
bool IsValidTrajectory(std::span<const int> ages);

// Throws Error(kInvalidColumn) unless the column is a legal trajectory of
// the instance's horizon for an existing content.
void ValidateColumn(const Instance& inst, const Column& col);

struct CostBreakdown {
  double download = 0.0;
  double update = 0.0;
  double aoi = 0.0;  // Unweighted; total applies lambda.
  double total = 0.0;
};

struct Schedule {
  std::vector<Column> columns;  // columns[f].content() == f.
  CostBreakdown cost;
};

// Builds a schedule and fills in its cost breakdown.
Schedule MakeSchedule(const Instance& inst, std::vector<Column> columns);

// Throws Error(kDimensionMismatch / kInvalidColumn) if the schedule does
// not match the instance.
void ValidateSchedule(const Instance& inst, const Schedule& sched);

// Cache occupancy sum_f l_f x_tf in slot t.
double SlotLoad(const Instance& inst, const Schedule& sched, int t);
// Exact check of the per-slot capacity constraint, no tolerance.
bool IsCapacityFeasible(const Instance& inst, const Schedule& sched);

double DownloadCost(const Instance& inst, const Schedule& sched);
double UpdateCost(const Instance& inst, const Schedule& sched);
double AoICost(const Instance& inst, const Schedule& sched);
CostBreakdown TotalCost(const Instance& inst, const Schedule& sched);

// Full cost of one content's trajectory, lambda included. Summed over the
// columns of a schedule it equals TotalCost(...).total.
double ColumnCost(const Instance& inst, const Column& col);

std::string FormatColumn(const Column& col);

}  // namespace uecp

#endif  // UECP_MODEL_H_
