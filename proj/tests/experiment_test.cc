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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "test_util.h"
#include "uecp/error.h"
#include "uecp/experiment.h"

namespace uecp {
namespace {

GenConfig SmallBase() {
  GenConfig cfg;
  cfg.num_users = 20;
  cfg.num_contents = 8;
  cfg.num_slots = 8;
  return cfg;
}

std::vector<uint64_t> Seeds(int n) {
  std::vector<uint64_t> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

TEST(MetricsTest, HandExample) {
  Instance inst;
  inst.num_slots = 3;
  inst.contents = {{1, 2.0, {}}};
  inst.capacity = 2.0;
  inst.cost_server = 10.0;
  inst.cost_cache = 1.0;
  inst.aoi_weight = 1.0;
  inst.demand.resize(1, 3);
  inst.demand << 3, 1, 2;
  const Schedule s = MakeSchedule(inst, {Column(0, {kAbsent, 0, 1})});
  // 3 requests of size 2 from the server plus one refresh of size 2.
  EXPECT_DOUBLE_EQ(BackhaulLoad(inst, s), 8.0);
  // Cache-served requests: one at age 0, two at age 1.
  EXPECT_DOUBLE_EQ(AverageAoI(inst, s), 2.0 / 3.0);
  const Schedule none = MakeSchedule(inst, {Column::Empty(0, 3)});
  EXPECT_DOUBLE_EQ(BackhaulLoad(inst, none), 12.0);
  EXPECT_DOUBLE_EQ(AverageAoI(inst, none), 0.0);
}

TEST(NamesTest, ParseRoundTrip) {
  for (Algorithm a : {Algorithm::kCga, Algorithm::kPba, Algorithm::kRba,
                      Algorithm::kExact}) {
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  }
  EXPECT_FALSE(ParseAlgorithm("simplex").has_value());
  for (SweepParam p :
       {SweepParam::kUsers, SweepParam::kContents, SweepParam::kLambda}) {
    EXPECT_EQ(ParseSweepParam(SweepParamName(p)), p);
  }
  EXPECT_EQ(ParseSweepParam("U"), SweepParam::kUsers);
  EXPECT_EQ(ParseSweepParam("lambda"), SweepParam::kLambda);
  EXPECT_FALSE(ParseSweepParam("T").has_value());
}

TEST(RunAlgorithmTest, ReportFields) {
  GenConfig cfg = SmallBase();
  cfg.seed = 3;
  const Instance inst = Generate(cfg);
  const RunReport cga = RunAlgorithm(inst, Algorithm::kCga, 1);
  ASSERT_TRUE(cga.lower_bound.has_value());
  EXPECT_GE(cga.gap, 0.0);
  EXPECT_NEAR(cga.gap, GapPercent(cga.schedule.cost.total, *cga.lower_bound), 1e-12);
  const nlohmann::json j = ToJson(cga, false);
  for (const char* key : {"algorithm", "cost", "lb", "gap", "backhaul_load",
                          "avg_aoi", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(j.contains("schedule"));
  EXPECT_TRUE(ToJson(cga, true).contains("schedule"));
  const RunReport pba = RunAlgorithm(inst, Algorithm::kPba, 1);
  EXPECT_FALSE(pba.lower_bound.has_value());
  EXPECT_FALSE(ToJson(pba, false).contains("lb"));
  EXPECT_GE(pba.schedule.cost.total, cga.schedule.cost.total - 1e-9);
  EXPECT_DOUBLE_EQ(cga.backhaul_load, BackhaulLoad(inst, cga.schedule));
}

TEST(SweepTest, LambdaGridRowCountAndNormalization) {
  SweepSpec spec;
  spec.param = SweepParam::kLambda;
  spec.grid = {0.0, 0.5, 1.0, 2.0};
  spec.seeds = Seeds(20);
  spec.base = SmallBase();
  const std::vector<SweepRow> rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 4u * 20u * 3u);
  std::map<Algorithm, std::pair<double, double>> load_range, aoi_range;
  for (const SweepRow& r : rows) {
    for (double v : {r.cost, r.lb, r.gap, r.backhaul_load, r.avg_aoi,
                     r.runtime_ms, r.backhaul_norm, r.avg_aoi_norm}) {
      EXPECT_TRUE(std::isfinite(v));
    }
    EXPECT_GE(r.backhaul_norm, 0.0);
    EXPECT_LE(r.backhaul_norm, 100.0);
    EXPECT_GE(r.avg_aoi_norm, 0.0);
    EXPECT_LE(r.avg_aoi_norm, 100.0);
    EXPECT_LE(r.lb, r.cost + 1e-9);
    auto& lr = load_range.try_emplace(r.algorithm, 1e300, -1e300).first->second;
    lr.first = std::min(lr.first, r.backhaul_norm);
    lr.second = std::max(lr.second, r.backhaul_norm);
    auto& ar = aoi_range.try_emplace(r.algorithm, 1e300, -1e300).first->second;
    ar.first = std::min(ar.first, r.avg_aoi_norm);
    ar.second = std::max(ar.second, r.avg_aoi_norm);
  }
  for (const auto& [alg, range] : load_range) {
    EXPECT_DOUBLE_EQ(range.first, 0.0) << AlgorithmName(alg);
    EXPECT_DOUBLE_EQ(range.second, 100.0) << AlgorithmName(alg);
  }
  for (const auto& [alg, range] : aoi_range) {
    EXPECT_DOUBLE_EQ(range.first, 0.0) << AlgorithmName(alg);
    EXPECT_DOUBLE_EQ(range.second, 100.0) << AlgorithmName(alg);
  }
  // Rows come out grid point by grid point, then seed, then algorithm.
  EXPECT_EQ(rows[0].value, 0.0);
  EXPECT_EQ(rows[0].algorithm, Algorithm::kCga);
  EXPECT_EQ(rows[1].algorithm, Algorithm::kPba);
  EXPECT_EQ(rows[2].algorithm, Algorithm::kRba);
  EXPECT_EQ(rows[3].seed, 2u);
  EXPECT_EQ(rows.back().value, 2.0);
}

std::string CsvWithoutRuntime(const std::vector<SweepRow>& rows) {
  std::vector<SweepRow> copy = rows;
  for (SweepRow& r : copy) r.runtime_ms = 0.0;
  std::ostringstream out;
  WriteSweepCsv(copy, out);
  return out.str();
}

TEST(SweepTest, CsvLayoutAndDeterminism) {
  SweepSpec spec;
  spec.param = SweepParam::kUsers;
  spec.grid = {10, 20};
  spec.seeds = Seeds(3);
  spec.base = SmallBase();
  const std::vector<SweepRow> rows = RunSweep(spec);
  std::ostringstream out;
  WriteSweepCsv(rows, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepCsvHeader);
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11);
    EXPECT_EQ(line.rfind("U,", 0), 0u);
  }
  EXPECT_EQ(count, 2 * 3 * 3);
  EXPECT_EQ(CsvWithoutRuntime(rows), CsvWithoutRuntime(RunSweep(spec)));
}

TEST(SweepTest, EmptyGridIsRejected) {
  SweepSpec spec;
  spec.seeds = Seeds(1);
  EXPECT_THROW(RunSweep(spec), Error);
  spec.grid = {10};
  spec.seeds.clear();
  EXPECT_THROW(RunSweep(spec), Error);
}

double MeanCgaCost(const std::vector<SweepRow>& rows, double value) {
  double sum = 0.0;
  int n = 0;
  for (const SweepRow& r : rows) {
    if (r.algorithm == Algorithm::kCga && r.value == value) {
      sum += r.cost;
      ++n;
    }
  }
  return sum / n;
}

TEST(SweepTest, CostGrowsWithUsers) {
  SweepSpec spec;
  spec.param = SweepParam::kUsers;
  spec.grid = {40, 60, 80};
  spec.seeds = Seeds(10);
  const std::vector<SweepRow> rows = RunSweep(spec);
  EXPECT_LT(MeanCgaCost(rows, 40), MeanCgaCost(rows, 60));
  EXPECT_LT(MeanCgaCost(rows, 60), MeanCgaCost(rows, 80));
}

TEST(SweepTest, MoreContentsLowerCostAtFixedRatio) {
  SweepSpec spec;
  spec.param = SweepParam::kContents;
  spec.grid = {5, 15, 30};
  spec.seeds = Seeds(10);
  const std::vector<SweepRow> rows = RunSweep(spec);
  EXPECT_LT(MeanCgaCost(rows, 15), MeanCgaCost(rows, 5));
}

}  // namespace
}  // namespace uecp
