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

#include "uecp/experiment.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "uecp/baselines.h"
#include "uecp/error.h"
#include "uecp/instance_io.h"
#include "uecp/oracle.h"

namespace uecp {

double BackhaulLoad(const Instance& inst, const Schedule& sched) {
  double load = 0.0;
  for (int f = 0; f < inst.num_contents(); ++f) {
    const Column& col = sched.columns[f];
    for (int t = 0; t < inst.num_slots; ++t) {
      if (!col.cached(t)) load += inst.size(f) * inst.demand(f, t);
      if (col.downloaded(t)) load += inst.size(f);
    }
  }
  return load;
}

double AverageAoI(const Instance& inst, const Schedule& sched) {
  double weighted = 0.0;
  double served = 0.0;
  for (int f = 0; f < inst.num_contents(); ++f) {
    const Column& col = sched.columns[f];
    for (int t = 0; t < inst.num_slots; ++t) {
      if (!col.cached(t)) continue;
      weighted += static_cast<double>(col.age(t)) * inst.demand(f, t);
      served += inst.demand(f, t);
    }
  }
  return served > 0.0 ? weighted / served : 0.0;
}

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCga:
      return "cga";
    case Algorithm::kPba:
      return "pba";
    case Algorithm::kRba:
      return "rba";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kCga, Algorithm::kPba, Algorithm::kRba,
                      Algorithm::kExact}) {
    if (name == AlgorithmName(a)) return a;
  }
  return std::nullopt;
}

RunReport RunAlgorithm(const Instance& inst, Algorithm algorithm,
                       uint64_t seed, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::kCga: {
      SolveResult solved = Solve(inst, options);
      report.schedule = std::move(solved.schedule);
      report.lower_bound = solved.lower_bound;
      report.gap = solved.stats.gap;
      report.stats = solved.stats;
      break;
    }
    case Algorithm::kPba:
      report.schedule = RunPba(inst, seed);
      break;
    case Algorithm::kRba:
      report.schedule = RunRba(inst, seed);
      break;
    case Algorithm::kExact:
      report.schedule = ExactOptimum(inst).schedule;
      break;
  }
  if (!IsCapacityFeasible(inst, report.schedule)) {
    throw Error(ErrorKind::kNumerical, "schedule exceeds capacity");
  }
  report.backhaul_load = BackhaulLoad(inst, report.schedule);
  report.avg_aoi = AverageAoI(inst, report.schedule);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

nlohmann::json ToJson(const RunReport& report, bool include_schedule) {
  nlohmann::json doc;
  doc["algorithm"] = AlgorithmName(report.algorithm);
  doc["cost"] = ToJson(report.schedule.cost);
  if (report.lower_bound) {
    doc["lb"] = *report.lower_bound;
    doc["gap"] = report.gap;
    doc["stats"] = ToJson(report.stats);
  }
  doc["backhaul_load"] = report.backhaul_load;
  doc["avg_aoi"] = report.avg_aoi;
  doc["runtime_ms"] = report.runtime_ms;
  if (include_schedule) doc["schedule"] = ToJson(report.schedule)["columns"];
  return doc;
}

std::optional<SweepParam> ParseSweepParam(std::string_view name) {
  if (name == "U") return SweepParam::kUsers;
  if (name == "F") return SweepParam::kContents;
  if (name == "lambda") return SweepParam::kLambda;
  return std::nullopt;
}

const char* SweepParamName(SweepParam param) {
  switch (param) {
    case SweepParam::kUsers:
      return "U";
    case SweepParam::kContents:
      return "F";
    case SweepParam::kLambda:
      return "lambda";
  }
  return "?";
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec) {
  if (spec.grid.empty() || spec.seeds.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sweep grid and seeds must be nonempty");
  }
  std::vector<SweepRow> rows;
  for (double value : spec.grid) {
    for (uint64_t seed : spec.seeds) {
      GenConfig cfg = spec.base;
      cfg.seed = seed;
      switch (spec.param) {
        case SweepParam::kUsers:
          cfg.num_users = static_cast<int>(value);
          break;
        case SweepParam::kContents:
          cfg.num_contents = static_cast<int>(value);
          break;
        case SweepParam::kLambda:
          cfg.aoi_weight = value;
          break;
      }
      const Instance inst = Generate(cfg);
      const RunReport cga = RunAlgorithm(inst, Algorithm::kCga, seed);
      const double lb = *cga.lower_bound;
      for (const RunReport& run :
           {cga, RunAlgorithm(inst, Algorithm::kPba, seed),
            RunAlgorithm(inst, Algorithm::kRba, seed)}) {
        const double cost = run.schedule.cost.total;
        rows.push_back({spec.param, value, seed, run.algorithm, cost, lb,
                        GapPercent(cost, lb), run.backhaul_load, run.avg_aoi,
                        run.runtime_ms});
      }
    }
  }

  struct Range {
    double lo = 1e300, hi = -1e300;
    void Add(double v) { lo = std::min(lo, v); hi = std::max(hi, v); }
    double Scale(double v) const {
      return hi > lo ? (v - lo) / (hi - lo) * 100.0 : 0.0;
    }
  };
  std::map<Algorithm, std::pair<Range, Range>> ranges;
  for (const SweepRow& r : rows) {
    ranges[r.algorithm].first.Add(r.backhaul_load);
    ranges[r.algorithm].second.Add(r.avg_aoi);
  }
  for (SweepRow& r : rows) {
    r.backhaul_norm = ranges[r.algorithm].first.Scale(r.backhaul_load);
    r.avg_aoi_norm = ranges[r.algorithm].second.Scale(r.avg_aoi);
  }
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  char buf[512];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf),
                  "%s,%.12g,%llu,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.3f,%.12g,"
                  "%.12g\n",
                  SweepParamName(r.param), r.value,
                  static_cast<unsigned long long>(r.seed),
                  AlgorithmName(r.algorithm), r.cost, r.lb, r.gap,
                  r.backhaul_load, r.avg_aoi, r.runtime_ms, r.backhaul_norm,
                  r.avg_aoi_norm);
    out << buf;
  }
}

}  // namespace uecp
