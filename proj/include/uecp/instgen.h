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

#ifndef UECP_INSTGEN_H_
#define UECP_INSTGEN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"
#include "uecp/model.h"

namespace uecp {

// Synthetic workload parameters. Every user issues a uniform number of
// requests in [min_requests, max_requests]; every request lands in a
// uniform slot (or one drawn from slot_weights) and picks a content by
// ZipF popularity whose rank order is reshuffled independently each slot.
// Sizes are integers uniform in [min_size, max_size] and the capacity is
// capacity_ratio times the total size.
struct GenConfig {
  int num_users = 60;
  int num_contents = 20;
  int num_slots = 24;
  double zipf_gamma = 0.54;
  double capacity_ratio = 0.5;
  int min_size = 1;
  int max_size = 10;
  int min_requests = 1;
  int max_requests = 15;
  uint64_t seed = 1;
  double cost_server = 10.0;
  double cost_cache = 1.0;
  double aoi_weight = 0.5;
  AoIPenalty aoi_penalty = AoIPenalty::Linear(1.0);
  // Optional per-slot request weights; empty means uniform.
  std::vector<double> slot_weights;
};

void ValidateGenConfig(const GenConfig& cfg);

nlohmann::json ToJson(const GenConfig& cfg);
// Missing keys keep their defaults.
GenConfig GenConfigFromJson(const nlohmann::json& doc);

// Request probability of ranks 1..n: r^-gamma / sum_i i^-gamma.
std::vector<double> ZipfWeights(int n, double gamma);

// Deterministic in cfg (seed included).
Instance Generate(const GenConfig& cfg);

// The T = 1 instance encoding a Partition question: content sizes are the
// numbers, S is half their sum, every content has two requests, c_s = 2 and
// c_b = 1. Caching content f saves exactly n_f, so the numbers split into
// two equal halves iff the optimal cost reaches yes_threshold_cost.
struct PartitionReduction {
  Instance instance;
  double server_only_cost = 0.0;  // sum_f 4 n_f
  double target_gain = 0.0;       // sum_f n_f / 2
  double yes_threshold_cost = 0.0;
};

PartitionReduction ReducePartition(std::span<const int> numbers);

}  // namespace uecp

#endif  // UECP_INSTGEN_H_
