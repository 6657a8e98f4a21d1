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

#include "uecp/colgen.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uecp/error.h"

namespace uecp {

void FixSet::Fix(int t, int f, FixState state) {
  FixState& cell = states_[Index(t, f)];
  if (cell != FixState::kFree && cell != state) {
    throw Error(ErrorKind::kInvalidArgument, "conflicting fixing");
  }
  cell = state;
}

int FixSet::num_free() const {
  return static_cast<int>(
      std::count(states_.begin(), states_.end(), FixState::kFree));
}

double FixSet::FixedLoad(const Instance& inst, int t) const {
  double load = 0.0;
  for (int f = 0; f < num_contents_; ++f) {
    if (at(t, f) == FixState::kFixed1) load += inst.size(f);
  }
  return load;
}

bool FixSet::Complies(const Column& col) const {
  for (int t = 0; t < num_slots_; ++t) {
    const FixState s = at(t, col.content());
    if (s == FixState::kFixed1 && !col.cached(t)) return false;
    if (s == FixState::kFixed0 && col.cached(t)) return false;
  }
  return true;
}

Column FixSet::MinimalColumn(int f) const {
  std::vector<bool> cached(num_slots_);
  for (int t = 0; t < num_slots_; ++t) {
    cached[t] = at(t, f) == FixState::kFixed1;
  }
  return Column::FreshAt(f, cached);
}

ColumnPool::ColumnPool(int num_contents, int num_slots)
    : num_slots_(num_slots), columns_(num_contents) {
  for (int f = 0; f < num_contents; ++f) {
    columns_[f].push_back(Column::Empty(f, num_slots));
  }
}

int ColumnPool::size() const {
  int n = 0;
  for (const auto& cols : columns_) n += static_cast<int>(cols.size());
  return n;
}

bool ColumnPool::Contains(const Column& col) const {
  const auto& cols = columns_[col.content()];
  return std::find(cols.begin(), cols.end(), col) != cols.end();
}

bool ColumnPool::Add(Column col) {
  if (Contains(col)) return false;
  columns_[col.content()].push_back(std::move(col));
  return true;
}

int ColumnPool::Discard(const FixSet& fixes) {
  int dropped = 0;
  for (auto& cols : columns_) {
    const auto keep_end =
        std::stable_partition(cols.begin(), cols.end(), [&](const Column& c) {
          return fixes.Complies(c);
        });
    dropped += static_cast<int>(cols.end() - keep_end);
    cols.erase(keep_end, cols.end());
  }
  return dropped;
}

double ReducedCost(const Instance& inst, const Column& col,
                   const DualPrices& duals) {
  const int f = col.content();
  double credit = 0.0;
  for (int t = 0; t < inst.num_slots; ++t) {
    if (col.cached(t)) credit += inst.size(f) * duals.pi[t];
  }
  return ColumnCost(inst, col) - credit - duals.beta[f];
}

std::string PricingGraph::Label(int node) const {
  const PricingNode& n = nodes[node];
  switch (n.kind) {
    case PricingNode::Kind::kSource:
      return "S";
    case PricingNode::Kind::kSink:
      return "D";
    case PricingNode::Kind::kNotCached:
      return "N" + std::to_string(n.layer);
    case PricingNode::Kind::kCached:
      return "C" + std::to_string(n.layer) + "_" + std::to_string(n.age);
  }
  return "?";
}

PricingGraph BuildPricingGraph(const Instance& inst, int f,
                               const DualPrices& duals, const FixSet& fixes) {
  const int num_slots = inst.num_slots;
  if (f < 0 || f >= inst.num_contents() || duals.pi.size() != num_slots ||
      duals.beta.size() != inst.num_contents() ||
      fixes.num_slots() != num_slots ||
      fixes.num_contents() != inst.num_contents()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "pricing inputs do not match the instance");
  }
  using Kind = PricingNode::Kind;
  PricingGraph g;
  g.content = f;
  g.num_slots = num_slots;
  const double size = inst.size(f);
  const double refresh = inst.refresh_cost(f);

  double server_cost = 0.0;
  for (int t = 0; t < num_slots; ++t) {
    server_cost += size * inst.demand(f, t) * inst.cost_server;
  }
  g.nodes.push_back({Kind::kSource, 0, kAbsent});
  g.nodes.push_back({Kind::kNotCached, 0, kAbsent});
  g.arcs.push_back({0, 1, server_cost});

  // Node ids of the previous layer: not_cached (or -1) and cached[age].
  int prev_not_cached = 1;
  std::vector<int> prev_cached;
  for (int k = 1; k <= num_slots; ++k) {
    const int t = k - 1;
    const FixState fix = fixes.at(t, f);
    const double m = inst.demand(f, t);
    const double gain = size * m * (inst.cost_server - inst.cost_cache) +
                        size * duals.pi[t];

    int not_cached = -1;
    std::vector<int> cached(k, -1);
    if (fix != FixState::kFixed1) {
      not_cached = static_cast<int>(g.nodes.size());
      g.nodes.push_back({Kind::kNotCached, k, kAbsent});
    }
    if (fix != FixState::kFixed0) {
      cached[0] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({Kind::kCached, k, 0});
      for (int i = 1; i < k; ++i) {
        if (prev_cached.empty() || prev_cached[i - 1] < 0) continue;
        cached[i] = static_cast<int>(g.nodes.size());
        g.nodes.push_back({Kind::kCached, k, i});
      }
    }

    auto connect_from = [&](int from, int from_age) {
      if (not_cached >= 0) g.arcs.push_back({from, not_cached, 0.0});
      if (cached[0] >= 0) g.arcs.push_back({from, cached[0], refresh - gain});
      if (from_age >= 0 && from_age + 1 < k && cached[from_age + 1] >= 0) {
        g.arcs.push_back(
            {from, cached[from_age + 1],
             inst.aoi_weight * inst.penalty(f, from_age + 1) * m - gain});
      }
    };
    if (prev_not_cached >= 0) connect_from(prev_not_cached, kAbsent);
    for (int i = 0; i < static_cast<int>(prev_cached.size()); ++i) {
      if (prev_cached[i] >= 0) connect_from(prev_cached[i], i);
    }
    prev_not_cached = not_cached;
    prev_cached = std::move(cached);
  }

  const int sink = static_cast<int>(g.nodes.size());
  g.nodes.push_back({Kind::kSink, num_slots + 1, kAbsent});
  const double sink_weight = -duals.beta[f];
  if (prev_not_cached >= 0) g.arcs.push_back({prev_not_cached, sink, sink_weight});
  for (int id : prev_cached) {
    if (id >= 0) g.arcs.push_back({id, sink, sink_weight});
  }
  // Arcs were emitted per source node in increasing node order.
  std::stable_sort(g.arcs.begin(), g.arcs.end(),
                   [](const PricingArc& a, const PricingArc& b) {
                     return a.from < b.from;
                   });
  return g;
}

namespace {

struct PathLabel {
  double length = std::numeric_limits<double>::infinity();
  int cached = 0;
  std::vector<int> ages;
  bool reached = false;
};

bool Better(const PathLabel& a, const PathLabel& b) {
  if (!b.reached) return true;
  const double eps =
      1e-11 * std::max({1.0, std::abs(a.length), std::abs(b.length)});
  if (a.length < b.length - eps) return true;
  if (a.length > b.length + eps) return false;
  if (a.cached != b.cached) return a.cached < b.cached;
  return a.ages < b.ages;
}

}  // namespace

PricingResult SolvePricing(const PricingGraph& graph) {
  using Kind = PricingNode::Kind;
  std::vector<PathLabel> labels(graph.nodes.size());
  labels[graph.source()].length = 0.0;
  labels[graph.source()].reached = true;
  for (const PricingArc& arc : graph.arcs) {
    const PathLabel& from = labels[arc.from];
    if (!from.reached) continue;
    const PricingNode& to = graph.nodes[arc.to];
    PathLabel candidate;
    candidate.reached = true;
    candidate.length = from.length + arc.weight;
    candidate.cached = from.cached + (to.kind == Kind::kCached);
    candidate.ages = from.ages;
    if (to.kind == Kind::kCached) {
      candidate.ages.push_back(to.age);
    } else if (to.kind == Kind::kNotCached && to.layer > 0) {
      candidate.ages.push_back(kAbsent);
    }
    if (Better(candidate, labels[arc.to])) labels[arc.to] = std::move(candidate);
  }
  const PathLabel& best = labels[graph.sink()];
  if (!best.reached || static_cast<int>(best.ages.size()) != graph.num_slots) {
    throw Error(ErrorKind::kInfeasible, "pricing graph has no source-sink path");
  }
  return {Column(graph.content, best.ages), best.length};
}

void WritePricingGraph(const PricingGraph& graph, std::ostream& out) {
  out << "# pricing graph content=" << graph.content + 1
      << " slots=" << graph.num_slots << " nodes=" << graph.nodes.size()
      << " arcs=" << graph.arcs.size() << '\n';
  for (const PricingArc& arc : graph.arcs) {
    out << graph.Label(arc.from) << ' ' << graph.Label(arc.to) << ' '
        << arc.weight << '\n';
  }
}

FractionalSolution MakeFractionalSolution(
    const ColumnPool& pool, std::vector<std::vector<double>> w) {
  FractionalSolution sol;
  const int num_contents = pool.num_contents();
  const int num_slots = pool.num_slots();
  if (static_cast<int>(w.size()) != num_contents) {
    throw Error(ErrorKind::kDimensionMismatch, "one weight list per content");
  }
  for (int f = 0; f < num_contents; ++f) {
    if (w[f].size() != pool.columns(f).size()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "weights must match the content's pool");
    }
  }
  sol.z = Eigen::MatrixXd::Zero(num_slots, num_contents);
  for (int f = 0; f < num_contents; ++f) {
    const auto& cols = pool.columns(f);
    for (size_t k = 0; k < cols.size(); ++k) {
      for (int t = 0; t < num_slots; ++t) {
        if (cols[k].cached(t)) sol.z(t, f) += w[f][k];
      }
    }
  }
  sol.weights = std::move(w);
  return sol;
}

namespace {

bool NearBinary(double v, double tol) {
  return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
}

}  // namespace

bool WeightsBinary(const FractionalSolution& sol, int f, double tol) {
  return std::all_of(sol.weights[f].begin(), sol.weights[f].end(),
                     [tol](double w) { return NearBinary(w, tol); });
}

bool ZBinary(const FractionalSolution& sol, int f, double tol) {
  for (int t = 0; t < sol.z.rows(); ++t) {
    if (!NearBinary(sol.z(t, f), tol)) return false;
  }
  return true;
}

bool ZBinary(const FractionalSolution& sol, double tol) {
  for (int f = 0; f < sol.z.cols(); ++f) {
    if (!ZBinary(sol, f, tol)) return false;
  }
  return true;
}

LpProblem BuildRmp(const Instance& inst, const ColumnPool& pool) {
  const int num_slots = inst.num_slots;
  const int num_contents = inst.num_contents();
  const int n = pool.size();
  LpProblem lp;
  lp.objective.resize(n);
  lp.ineq_matrix = Eigen::MatrixXd::Zero(num_slots, n);
  lp.ineq_rhs = Eigen::VectorXd::Constant(num_slots, inst.capacity);
  lp.eq_matrix = Eigen::MatrixXd::Zero(num_contents, n);
  lp.eq_rhs = Eigen::VectorXd::Ones(num_contents);
  // w <= 1 follows from the convexity rows.
  lp.upper = Eigen::VectorXd::Constant(
      n, std::numeric_limits<double>::infinity());
  int j = 0;
  for (int f = 0; f < num_contents; ++f) {
    for (const Column& col : pool.columns(f)) {
      lp.objective[j] = ColumnCost(inst, col);
      for (int t = 0; t < num_slots; ++t) {
        if (col.cached(t)) lp.ineq_matrix(t, j) = inst.size(f);
      }
      lp.eq_matrix(f, j) = 1.0;
      ++j;
    }
  }
  return lp;
}

CgaResult RunCga(const Instance& inst, ColumnPool& pool, const FixSet& fixes,
                 const CgaOptions& options) {
  const int num_contents = inst.num_contents();
  if (pool.num_contents() != num_contents) {
    throw Error(ErrorKind::kDimensionMismatch, "pool does not match instance");
  }
  for (int f = 0; f < num_contents; ++f) {
    if (pool.columns(f).empty()) {
      throw Error(ErrorKind::kInvalidArgument, "every content needs a column");
    }
    for (const Column& col : pool.columns(f)) {
      if (!fixes.Complies(col)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "pool column breaks a fixing: " + FormatColumn(col));
      }
    }
  }

  CgaResult result;
  for (;;) {
    if (result.iterations >= options.max_iterations) {
      throw Error(ErrorKind::kNumerical, "column generation did not converge");
    }
    ++result.iterations;
    const LpProblem rmp = BuildRmp(inst, pool);
    const LpSolution lp = SolveLp(rmp, options.lp);
    if (options.on_lp_solve) options.on_lp_solve(rmp, lp);
    if (lp.status == LpStatus::kInfeasible) {
      throw Error(ErrorKind::kInfeasible, "restricted master is infeasible");
    }
    if (lp.status != LpStatus::kOptimal) {
      throw Error(ErrorKind::kNumerical,
                  std::string("restricted master: ") + LpStatusName(lp.status));
    }
    DualPrices duals{lp.duals_ineq, lp.duals_eq};
    if (duals.pi.size() > 0 &&
        duals.pi.maxCoeff() > options.lp.optimality_tolerance) {
      throw Error(ErrorKind::kNumerical, "capacity dual with wrong sign");
    }
    result.objective_history.push_back(lp.objective);

    int added = 0;
    for (int f = 0; f < num_contents; ++f) {
      PricingResult priced =
          SolvePricing(BuildPricingGraph(inst, f, duals, fixes));
      if (priced.reduced_cost < -options.negative_tolerance &&
          pool.Add(std::move(priced.column))) {
        ++added;
      }
    }
    if (added == 0) {
      std::vector<std::vector<double>> w(num_contents);
      int j = 0;
      for (int f = 0; f < num_contents; ++f) {
        for (size_t k = 0; k < pool.columns(f).size(); ++k) {
          w[f].push_back(lp.primal[j++]);
        }
      }
      result.solution = MakeFractionalSolution(pool, std::move(w));
      result.lower_bound = lp.objective;
      result.duals = std::move(duals);
      return result;
    }
    result.columns_added += added;
  }
}

}  // namespace uecp
