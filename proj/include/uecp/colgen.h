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

#ifndef UECP_COLGEN_H_
#define UECP_COLGEN_H_

// Column generation over per-content trajectories. The restricted master
// problem (RMP) picks a convex combination of known columns per content
// subject to per-slot capacity; pricing finds, for each content, the
// trajectory of minimum reduced cost as a shortest path in a layered DAG.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "uecp/lp.h"
#include "uecp/model.h"

namespace uecp {

enum class FixState : uint8_t { kFree, kFixed0, kFixed1 };

// Per (slot, content) caching decisions fixed by rounding. A fixing never
// changes once made.
class FixSet {
 public:
  FixSet() = default;
  FixSet(int num_slots, int num_contents)
      : num_slots_(num_slots),
        num_contents_(num_contents),
        states_(static_cast<size_t>(num_slots) * num_contents,
                FixState::kFree) {}

  int num_slots() const { return num_slots_; }
  int num_contents() const { return num_contents_; }
  FixState at(int t, int f) const { return states_[Index(t, f)]; }
  bool is_free(int t, int f) const { return at(t, f) == FixState::kFree; }

  // Throws Error(kInvalidArgument) when re-fixing a cell to another value.
  void Fix(int t, int f, FixState state);

  int num_free() const;
  // sum of l_f over contents fixed to 1 in slot t.
  double FixedLoad(const Instance& inst, int t) const;
  bool Complies(const Column& col) const;
  // The trajectory cached exactly at the content's fixed-1 slots and
  // refreshed in each; it complies with any set of fixings.
  Column MinimalColumn(int f) const;

 private:
  size_t Index(int t, int f) const {
    return static_cast<size_t>(t) * num_contents_ + f;
  }

  int num_slots_ = 0;
  int num_contents_ = 0;
  std::vector<FixState> states_;
};

// Duplicate-free column sets, one per content, each seeded with the
// never-cache column.
class ColumnPool {
 public:
  ColumnPool() = default;
  ColumnPool(int num_contents, int num_slots);

  int num_contents() const { return static_cast<int>(columns_.size()); }
  int num_slots() const { return num_slots_; }
  int size() const;
  const std::vector<Column>& columns(int f) const { return columns_[f]; }
  bool Contains(const Column& col) const;
  // Returns false (and stores nothing) for a duplicate.
  bool Add(Column col);
  // Drops every column that breaks a fixing; returns how many were dropped.
  int Discard(const FixSet& fixes);

 private:
  int num_slots_ = 0;
  std::vector<std::vector<Column>> columns_;
};

struct DualPrices {
  Eigen::VectorXd pi;    // per slot, capacity rows
  Eigen::VectorXd beta;  // per content, convexity rows
};

// C_col - sum_t l_f pi_t x_t - beta_f, computed straight from the column.
double ReducedCost(const Instance& inst, const Column& col,
                   const DualPrices& duals);

// Layered pricing DAG for one content. Layer 0 holds NotCached(0), the
// state before the horizon; layer k in 1..T stands for slot k - 1 and holds
// NotCached(k) plus Cached(k, i) for ages 0 <= i < k. Weights:
//   Source -> NotCached(0)                C = sum_t l m_t c_s
//   X(k-1) -> NotCached(k)                0
//   X(k-1) -> Cached(k, 0)                l (c_s - c_b) - g_k
//   Cached(k-1, i) -> Cached(k, i + 1)    lambda p(i + 1) m_k - g_k
//   X(T) -> Sink                          -beta
// with g_k = l m_k (c_s - c_b) + l pi_k, the serving saving of caching net of
// the (nonpositive) capacity price. A path's length equals the reduced
// cost of the trajectory it encodes. Slots fixed to 0 lose their Cached
// nodes, slots fixed to 1 their NotCached node; nodes unreachable from the
// source are not built.
struct PricingNode {
  enum class Kind { kSource, kNotCached, kCached, kSink };
  Kind kind;
  int layer;
  int age;
};

struct PricingArc {
  int from;
  int to;
  double weight;
};

struct PricingGraph {
  int content = 0;
  int num_slots = 0;
  std::vector<PricingNode> nodes;  // topological order, source first
  std::vector<PricingArc> arcs;    // grouped by source node, in node order

  int source() const { return 0; }
  int sink() const { return static_cast<int>(nodes.size()) - 1; }
  std::string Label(int node) const;
};

PricingGraph BuildPricingGraph(const Instance& inst, int f,
                               const DualPrices& duals, const FixSet& fixes);

struct PricingResult {
  Column column;
  double reduced_cost = 0.0;
};

// Shortest source-sink path by one pass over the topological order, so
// negative weights are fine. Ties go to fewer cached slots, then to the
// lexicographically smallest age vector (absent < 0 < 1 < ...).
PricingResult SolvePricing(const PricingGraph& graph);

// One "from to weight" line per arc after a "# pricing graph" header.
void WritePricingGraph(const PricingGraph& graph, std::ostream& out);

struct FractionalSolution {
  // weights[f][k] belongs to pool.columns(f)[k].
  std::vector<std::vector<double>> weights;
  // z(t, f) = sum_k x_t^(k) w_fk.
  Eigen::MatrixXd z;
};

inline constexpr double kIntegralityTolerance = 1e-6;

FractionalSolution MakeFractionalSolution(const ColumnPool& pool,
                                          std::vector<std::vector<double>> w);
bool WeightsBinary(const FractionalSolution& sol, int f,
                   double tol = kIntegralityTolerance);
bool ZBinary(const FractionalSolution& sol, int f,
             double tol = kIntegralityTolerance);
bool ZBinary(const FractionalSolution& sol,
             double tol = kIntegralityTolerance);

// Variables are the pool columns, content by content in pool order. Their
// upper bounds are left infinite since the convexity rows cap them at 1.
LpProblem BuildRmp(const Instance& inst, const ColumnPool& pool);

struct CgaOptions {
  double negative_tolerance = 1e-7;
  int max_iterations = 100000;
  LpOptions lp;
  // Called after every RMP solve.
  std::function<void(const LpProblem&, const LpSolution&)> on_lp_solve;
};

struct CgaResult {
  FractionalSolution solution;
  double lower_bound = 0.0;  // final RMP objective
  DualPrices duals;
  int iterations = 0;
  int columns_added = 0;
  std::vector<double> objective_history;  // RMP objective per iteration
};

// Alternates RMP solves and pricing until no content has a column of
// negative reduced cost. Every column of `pool` must comply with `fixes`;
// the pool grows in place. Throws Error(kInfeasible) if the RMP is
// infeasible and Error(kNumerical) if the LP solver fails.
CgaResult RunCga(const Instance& inst, ColumnPool& pool, const FixSet& fixes,
                 const CgaOptions& options = {});

}  // namespace uecp

#endif  // UECP_COLGEN_H_
