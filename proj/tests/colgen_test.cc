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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "test_util.h"
#include "uecp/colgen.h"
#include "uecp/error.h"
#include "uecp/oracle.h"

namespace uecp {
namespace {

using Kind = PricingNode::Kind;

DualPrices ZeroDuals(const Instance& inst) {
  return {Eigen::VectorXd::Zero(inst.num_slots),
          Eigen::VectorXd::Zero(inst.num_contents())};
}

DualPrices RandomDuals(Rng& rng, const Instance& inst) {
  DualPrices d = ZeroDuals(inst);
  for (int t = 0; t < inst.num_slots; ++t) {
    if (rng.UniformInt(0, 2) != 0) d.pi(t) = -10.0 * rng.UniformReal();
  }
  for (int f = 0; f < inst.num_contents(); ++f) {
    d.beta(f) = 80.0 * rng.UniformReal() - 20.0;
  }
  return d;
}

// Reduced cost from the per-request walk, independent of the library.
double WalkReducedCost(const Instance& inst, const Column& c,
                       const DualPrices& d) {
  double rc = test::PerRequestColumnCost(inst, c) - d.beta(c.content());
  for (int t = 0; t < inst.num_slots; ++t) {
    if (c.cached(t)) rc -= inst.contents[c.content()].size * d.pi(t);
  }
  return rc;
}

int FindNode(const PricingGraph& g, Kind kind, int layer, int age) {
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const PricingNode& n = g.nodes[i];
    if (n.kind == kind && n.layer == layer && (kind != Kind::kCached || n.age == age)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

// Length of the source-sink path that encodes the column, or nullopt if the
// graph lacks one of its nodes or arcs.
std::optional<double> PathLength(const PricingGraph& g, const Column& c) {
  std::vector<int> path = {g.source(), FindNode(g, Kind::kNotCached, 0, 0)};
  for (int t = 0; t < c.num_slots(); ++t) {
    path.push_back(c.cached(t) ? FindNode(g, Kind::kCached, t + 1, c.age(t))
                               : FindNode(g, Kind::kNotCached, t + 1, 0));
  }
  path.push_back(g.sink());
  double length = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] < 0 || path[i + 1] < 0) return std::nullopt;
    bool found = false;
    for (const PricingArc& a : g.arcs) {
      if (a.from == path[i] && a.to == path[i + 1]) {
        length += a.weight;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return length;
}

Instance SingleContent(int num_slots, std::vector<int> demand, double size = 2.0) {
  Instance inst;
  inst.num_slots = num_slots;
  inst.contents = {{1, size, AoIPenalty::Linear(1.0)}};
  inst.capacity = size;
  inst.cost_server = 10.0;
  inst.cost_cache = 1.0;
  inst.aoi_weight = 0.0;
  inst.demand.resize(1, num_slots);
  for (int t = 0; t < num_slots; ++t) inst.demand(0, t) = demand[t];
  return inst;
}

TEST(PricingGraphTest, OneSlotShape) {
  const Instance inst = SingleContent(1, {3});
  const PricingGraph g = BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(1, 1));
  ASSERT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(g.arcs.size(), 5u);
  std::vector<std::string> labels;
  for (size_t i = 0; i < g.nodes.size(); ++i) labels.push_back(g.Label(i));
  EXPECT_EQ(labels, (std::vector<std::string>{"S", "N0", "N1", "C1_0", "D"}));
  // C = 2 * 3 * 10; entering the cache costs c1 - g = 18 - 54.
  EXPECT_EQ(*PathLength(g, Column(0, {kAbsent})), 60.0);
  EXPECT_EQ(*PathLength(g, Column(0, {0})), 60.0 + 18.0 - 54.0);
}

TEST(PricingGraphTest, SizeIsQuadratic) {
  for (int t : {2, 5, 9}) {
    Instance inst = SingleContent(t, std::vector<int>(t, 1));
    const PricingGraph g =
        BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(t, 1));
    // S, D, N0..NT and C(k, i) for i < k.
    EXPECT_EQ(static_cast<int>(g.nodes.size()), 2 + (t + 1) + t * (t + 1) / 2);
    for (const PricingArc& a : g.arcs) EXPECT_LT(a.from, a.to);
  }
}

TEST(PricingGraphTest, PathLengthEqualsReducedCostOnEveryColumn) {
  Rng rng(3);
  for (int draw = 0; draw < 30; ++draw) {
    test::TinyLimits lim;
    lim.max_slots = 3;
    const Instance inst = test::TinyInstance(rng.Next(), lim);
    const DualPrices d = RandomDuals(rng, inst);
    for (int f = 0; f < inst.num_contents(); ++f) {
      const PricingGraph g =
          BuildPricingGraph(inst, f, d, FixSet(inst.num_slots, inst.num_contents()));
      const std::vector<Column> cols = EnumerateColumns(inst, f);
      EXPECT_EQ(static_cast<long>(cols.size()), CountTrajectories(inst.num_slots));
      for (const Column& c : cols) {
        const std::optional<double> len = PathLength(g, c);
        ASSERT_TRUE(len.has_value()) << FormatColumn(c);
        EXPECT_NEAR(*len, WalkReducedCost(inst, c, d), 1e-9);
        EXPECT_NEAR(*len, ReducedCost(inst, c, d), 1e-9);
      }
    }
  }
}

TEST(PricingTest, ZeroDualsNoDemand) {
  const Instance inst = SingleContent(4, {0, 0, 0, 0});
  const PricingResult r =
      SolvePricing(BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(4, 1)));
  EXPECT_EQ(r.column, Column::Empty(0, 4));
  EXPECT_EQ(r.reduced_cost, 0.0);
  DualPrices d = ZeroDuals(inst);
  d.beta(0) = 10.0;
  const PricingResult rb = SolvePricing(BuildPricingGraph(inst, 0, d, FixSet(4, 1)));
  EXPECT_EQ(rb.column, Column::Empty(0, 4));
  EXPECT_EQ(rb.reduced_cost, -10.0);
}

TEST(PricingTest, ZeroDualsNeverCachePathIsC) {
  const Instance inst = SingleContent(3, {1, 0, 2}, 1.0);
  const PricingGraph g = BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(3, 1));
  EXPECT_EQ(*PathLength(g, Column::Empty(0, 3)), 1.0 * 3 * 10.0);
}

TEST(PricingTest, MatchesEnumerationUpToEightSlots) {
  Rng rng(8);
  for (int draw = 0; draw < 100; ++draw) {
    test::TinyLimits lim;
    lim.max_contents = 3;
    lim.max_slots = 8;
    lim.max_demand = 6;
    const Instance inst = test::TinyInstance(rng.Next(), lim);
    const DualPrices d = RandomDuals(rng, inst);
    const int f = static_cast<int>(rng.UniformInt(0, inst.num_contents() - 1));
    // Half of the draws also carry random fixings.
    FixSet fixes(inst.num_slots, inst.num_contents());
    if (draw % 2 == 1) {
      for (int t = 0; t < inst.num_slots; ++t) {
        const int64_t s = rng.UniformInt(0, 3);
        if (s == 1) fixes.Fix(t, f, FixState::kFixed0);
        if (s == 2) fixes.Fix(t, f, FixState::kFixed1);
      }
    }
    const PricingResult r = SolvePricing(BuildPricingGraph(inst, f, d, fixes));
    double best = std::numeric_limits<double>::infinity();
    for (const Column& c : EnumerateColumns(inst, f)) {
      if (fixes.Complies(c)) best = std::min(best, WalkReducedCost(inst, c, d));
    }
    EXPECT_NEAR(r.reduced_cost, best, 1e-9) << "draw " << draw;
    EXPECT_TRUE(fixes.Complies(r.column));
    EXPECT_NEAR(WalkReducedCost(inst, r.column, d), r.reduced_cost, 1e-9);
  }
}

TEST(PricingTest, TieBreakPrefersFewerCachedSlots) {
  // Caching slot 1 or not costs the same: demand 1 makes the gain equal to
  // the refresh cost.
  const Instance inst = SingleContent(2, {1, 0}, 1.0);
  const PricingResult r =
      SolvePricing(BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(2, 1)));
  EXPECT_EQ(r.column, Column::Empty(0, 2));
}

TEST(PricingTest, AgreesWithBellmanFord) {
  Rng rng(21);
  for (int draw = 0; draw < 50; ++draw) {
    test::TinyLimits lim;
    lim.max_slots = 10;
    lim.max_demand = 8;
    const Instance inst = test::TinyInstance(rng.Next(), lim);
    const DualPrices d = RandomDuals(rng, inst);
    const PricingGraph g = BuildPricingGraph(
        inst, 0, d, FixSet(inst.num_slots, inst.num_contents()));
    std::vector<double> dist(g.nodes.size(), std::numeric_limits<double>::infinity());
    dist[g.source()] = 0.0;
    for (size_t pass = 0; pass < g.nodes.size(); ++pass) {
      bool changed = false;
      // Visit arcs from the back so one pass is not enough by accident.
      for (auto it = g.arcs.rbegin(); it != g.arcs.rend(); ++it) {
        if (dist[it->from] + it->weight < dist[it->to]) {
          dist[it->to] = dist[it->from] + it->weight;
          changed = true;
        }
      }
      if (!changed) break;
    }
    EXPECT_NEAR(SolvePricing(g).reduced_cost, dist[g.sink()],
                1e-9 * std::max(1.0, std::abs(dist[g.sink()])));
  }
}

TEST(PricingGraphTest, FixingsRemoveNodes) {
  Instance inst = SingleContent(4, {3, 3, 3, 3});
  FixSet fixes(4, 1);
  fixes.Fix(1, 0, FixState::kFixed0);
  fixes.Fix(2, 0, FixState::kFixed1);
  const PricingGraph g = BuildPricingGraph(inst, 0, ZeroDuals(inst), fixes);
  for (const PricingNode& n : g.nodes) {
    if (n.layer == 2) EXPECT_NE(n.kind, Kind::kCached);
    if (n.layer == 3) EXPECT_NE(n.kind, Kind::kNotCached);
    // Nothing can be older than one slot at layer 3 or 4 after a gap.
    if (n.kind == Kind::kCached && n.layer >= 3) EXPECT_LE(n.age, n.layer - 3);
  }
  const PricingResult r = SolvePricing(g);
  EXPECT_FALSE(r.column.cached(1));
  EXPECT_TRUE(r.column.cached(2));
}

TEST(PricingGraphTest, DumpFormat) {
  const Instance inst = SingleContent(2, {1, 1});
  const PricingGraph g = BuildPricingGraph(inst, 0, ZeroDuals(inst), FixSet(2, 1));
  std::ostringstream out;
  WritePricingGraph(g, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("# pricing graph", 0), 0u);
  std::string from, to;
  double w;
  size_t lines = 0;
  while (in >> from >> to >> w) {
    EXPECT_EQ(g.Label(g.arcs[lines].from), from);
    EXPECT_EQ(g.Label(g.arcs[lines].to), to);
    EXPECT_DOUBLE_EQ(g.arcs[lines].weight, w);
    ++lines;
  }
  EXPECT_EQ(lines, g.arcs.size());
}

TEST(FixSetTest, Basics) {
  Instance inst = test::TinyInstance(12);
  FixSet fixes(3, 2);
  EXPECT_EQ(fixes.num_free(), 6);
  fixes.Fix(0, 1, FixState::kFixed1);
  fixes.Fix(0, 1, FixState::kFixed1);
  EXPECT_THROW(fixes.Fix(0, 1, FixState::kFixed0), Error);
  fixes.Fix(2, 1, FixState::kFixed1);
  fixes.Fix(1, 0, FixState::kFixed0);
  EXPECT_EQ(fixes.num_free(), 3);
  const Column m = fixes.MinimalColumn(1);
  EXPECT_EQ(m, Column(1, {0, kAbsent, 0}));
  EXPECT_TRUE(fixes.Complies(m));
  EXPECT_FALSE(fixes.Complies(Column(1, {kAbsent, kAbsent, 0})));
  EXPECT_FALSE(fixes.Complies(Column(0, {0, 1, 2})));
  EXPECT_EQ(fixes.MinimalColumn(0), Column::Empty(0, 3));
}

TEST(ColumnPoolTest, SeededAndDuplicateFree) {
  ColumnPool pool(2, 3);
  EXPECT_EQ(pool.size(), 2);
  EXPECT_TRUE(pool.Contains(Column::Empty(0, 3)));
  EXPECT_FALSE(pool.Add(Column::Empty(1, 3)));
  EXPECT_TRUE(pool.Add(Column(1, {0, 1, 2})));
  EXPECT_FALSE(pool.Add(Column(1, {0, 1, 2})));
  EXPECT_TRUE(pool.Add(Column(1, {0, 0, 0})));
  EXPECT_EQ(pool.size(), 4);
  FixSet fixes(3, 2);
  fixes.Fix(1, 1, FixState::kFixed0);
  EXPECT_EQ(pool.Discard(fixes), 2);
  EXPECT_EQ(pool.columns(1).size(), 1u);
}

TEST(CgaTest, ZeroDemand) {
  Instance inst = test::TinyInstance(31);
  inst.demand.setZero();
  ColumnPool pool(inst.num_contents(), inst.num_slots);
  const CgaResult r = RunCga(inst, pool, FixSet(inst.num_slots, inst.num_contents()));
  EXPECT_NEAR(r.lower_bound, 0.0, 1e-12);
  for (int f = 0; f < inst.num_contents(); ++f) {
    EXPECT_TRUE(ZBinary(r.solution, f));
    for (int t = 0; t < inst.num_slots; ++t) EXPECT_NEAR(r.solution.z(t, f), 0.0, 1e-9);
  }
}

TEST(CgaTest, SingleContentAlwaysCached) {
  const Instance inst = SingleContent(4, {5, 5, 5, 5});
  ColumnPool pool(1, 4);
  const CgaResult r = RunCga(inst, pool, FixSet(4, 1));
  double best = std::numeric_limits<double>::infinity();
  Column arg;
  for (const Column& c : EnumerateColumns(inst, 0)) {
    const double cost = test::PerRequestColumnCost(inst, c);
    if (cost < best) {
      best = cost;
      arg = c;
    }
  }
  EXPECT_EQ(arg, Column(0, {0, 1, 2, 3}));
  EXPECT_NEAR(r.lower_bound, best, 1e-9);
  EXPECT_NEAR(best, 2.0 * 20 * 1.0 + 2.0 * 9.0, 1e-12);
}

TEST(CgaTest, BoundsTheOptimumAndTerminatesCleanly) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    test::TinyLimits lim;
    lim.max_contents = 3;
    lim.max_slots = 3;
    const Instance inst = test::TinyInstance(seed, lim);
    ColumnPool pool(inst.num_contents(), inst.num_slots);
    const FixSet fixes(inst.num_slots, inst.num_contents());
    const CgaResult r = RunCga(inst, pool, fixes);
    const ExactResult ex = ExactOptimum(inst);
    EXPECT_LE(r.lower_bound, ex.objective + 1e-6) << "seed " << seed;

    for (size_t i = 0; i + 1 < r.objective_history.size(); ++i) {
      EXPECT_LE(r.objective_history[i + 1], r.objective_history[i] + 1e-9);
    }
    EXPECT_EQ(r.objective_history.back(), r.lower_bound);
    EXPECT_LE(r.duals.pi.maxCoeff(), 1e-7);
    for (int f = 0; f < inst.num_contents(); ++f) {
      for (const Column& c : EnumerateColumns(inst, f)) {
        EXPECT_GE(WalkReducedCost(inst, c, r.duals), -1e-6) << FormatColumn(c);
      }
      const auto& w = r.solution.weights[f];
      EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-7);
      for (size_t a = 0; a < pool.columns(f).size(); ++a) {
        for (size_t b = a + 1; b < pool.columns(f).size(); ++b) {
          EXPECT_FALSE(pool.columns(f)[a] == pool.columns(f)[b]);
        }
      }
      EXPECT_EQ(WeightsBinary(r.solution, f), ZBinary(r.solution, f));
    }
    EXPECT_GE(r.solution.z.minCoeff(), -1e-7);
    EXPECT_LE(r.solution.z.maxCoeff(), 1.0 + 1e-7);
  }
}

TEST(CgaTest, InfeasibleFixings) {
  Instance inst = SingleContent(2, {1, 1}, 3.0);
  inst.capacity = 2.0;
  FixSet fixes(2, 1);
  fixes.Fix(0, 0, FixState::kFixed1);
  ColumnPool pool(1, 2);
  pool.Discard(fixes);
  pool.Add(fixes.MinimalColumn(0));
  try {
    RunCga(inst, pool, fixes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(CgaTest, RejectsNonCompliantPool) {
  const Instance inst = SingleContent(2, {1, 1});
  FixSet fixes(2, 1);
  fixes.Fix(0, 0, FixState::kFixed1);
  ColumnPool pool(1, 2);
  EXPECT_THROW(RunCga(inst, pool, fixes), Error);
}

TEST(BinaryEquivalenceTest, HandBuiltPools) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const bool binary = seed % 2 == 0;
    const test::HandPool hp = test::AdversarialPool(seed, binary);
    EXPECT_EQ(WeightsBinary(hp.solution, 0), binary);
    EXPECT_EQ(ZBinary(hp.solution, 0), binary);
  }
}

TEST(BinaryEquivalenceTest, SameCachedSetDifferentAges) {
  // Two columns with the same cached set but different ages can split the
  // weight with every z still binary.
  ColumnPool pool(1, 2);
  pool.Add(Column(0, {0, 1}));
  pool.Add(Column(0, {0, 0}));
  const FractionalSolution sol = MakeFractionalSolution(pool, {{0.0, 0.5, 0.5}});
  EXPECT_TRUE(ZBinary(sol, 0));
  EXPECT_FALSE(WeightsBinary(sol, 0));
}

}  // namespace
}  // namespace uecp
