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

#ifndef UECP_EXPERIMENT_H_
#define UECP_EXPERIMENT_H_

// Running the algorithms side by side: per-run metrics and parameter sweeps
// emitted as CSV.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "uecp/instgen.h"
#include "uecp/model.h"
#include "uecp/rounding.h"

namespace uecp {

// Data units pulled from the server: requests served by the server plus
// server-to-cache refreshes.
double BackhaulLoad(const Instance& inst, const Schedule& sched);

// Request-weighted mean age over the requests served from the cache; 0 if
// the cache serves nothing.
double AverageAoI(const Instance& inst, const Schedule& sched);

enum class Algorithm { kCga, kPba, kRba, kExact };

const char* AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct RunReport {
  Algorithm algorithm = Algorithm::kCga;
  Schedule schedule;
  std::optional<double> lower_bound;  // column generation only
  double gap = 0.0;
  double backhaul_load = 0.0;
  double avg_aoi = 0.0;
  double runtime_ms = 0.0;
  SolveStats stats;  // column generation only
};

RunReport RunAlgorithm(const Instance& inst, Algorithm algorithm,
                       uint64_t seed, const SolveOptions& options = {});

// {algorithm, cost, lb, gap, backhaul_load, avg_aoi, runtime_ms}; lb, gap
// and stats appear for column generation only.
nlohmann::json ToJson(const RunReport& report, bool include_schedule);

enum class SweepParam { kUsers, kContents, kLambda };

std::optional<SweepParam> ParseSweepParam(std::string_view name);
const char* SweepParamName(SweepParam param);

struct SweepSpec {
  SweepParam param = SweepParam::kUsers;
  std::vector<double> grid;
  std::vector<uint64_t> seeds;
  GenConfig base;
};

struct SweepRow {
  SweepParam param;
  double value;
  uint64_t seed;
  Algorithm algorithm;
  double cost;
  double lb;  // the column-generation bound of the same instance
  double gap;
  double backhaul_load;
  double avg_aoi;
  double runtime_ms;
  // Min-max scaled to [0, 100] over all rows of the same algorithm.
  double backhaul_norm = 0.0;
  double avg_aoi_norm = 0.0;
};

// For every grid value and seed, generates an instance and runs column
// generation, PBA and RBA, in that order. Throws Error(kInvalidArgument)
// on an empty grid or seed list.
std::vector<SweepRow> RunSweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "param,value,seed,algorithm,cost,lb,gap,backhaul_load,avg_aoi,"
    "runtime_ms,backhaul_norm,avg_aoi_norm";

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace uecp

#endif  // UECP_EXPERIMENT_H_
