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

#include "uecp/instgen.h"

#include <cmath>
#include <numeric>

#include "uecp/error.h"
#include "uecp/rng.h"

namespace uecp {

using nlohmann::json;

void ValidateGenConfig(const GenConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
  };
  require(cfg.num_users > 0, "num_users must be > 0");
  require(cfg.num_contents > 0, "num_contents must be > 0");
  require(cfg.num_slots > 0, "num_slots must be > 0");
  require(cfg.zipf_gamma > 0.0, "zipf_gamma must be > 0");
  require(cfg.capacity_ratio >= 0.0 && cfg.capacity_ratio <= 1.0,
          "capacity_ratio must lie in [0, 1]");
  require(cfg.min_size >= 1 && cfg.min_size <= cfg.max_size,
          "size range must be nonempty and positive");
  require(cfg.min_requests >= 0 && cfg.min_requests <= cfg.max_requests,
          "requests-per-user range must be nonempty");
  require(cfg.cost_server > cfg.cost_cache && cfg.cost_cache >= 0.0,
          "costs must satisfy cost_server > cost_cache >= 0");
  require(cfg.aoi_weight >= 0.0, "aoi_weight must be >= 0");
  cfg.aoi_penalty.Validate();
  if (!cfg.slot_weights.empty()) {
    require(static_cast<int>(cfg.slot_weights.size()) == cfg.num_slots,
            "slot_weights must have one entry per slot");
    double total = 0.0;
    for (double w : cfg.slot_weights) {
      require(w >= 0.0, "slot_weights must be nonnegative");
      total += w;
    }
    require(total > 0.0, "slot_weights must not all be zero");
  }
}

json ToJson(const GenConfig& cfg) {
  json penalty = cfg.aoi_penalty.is_linear()
                     ? json{{"type", "linear"},
                            {"coefficient", cfg.aoi_penalty.coefficient()}}
                     : json{{"type", "table"},
                            {"values", cfg.aoi_penalty.table()}};
  return {{"num_users", cfg.num_users},
          {"num_contents", cfg.num_contents},
          {"num_slots", cfg.num_slots},
          {"zipf_gamma", cfg.zipf_gamma},
          {"capacity_ratio", cfg.capacity_ratio},
          {"size_range", {cfg.min_size, cfg.max_size}},
          {"requests_per_user_range", {cfg.min_requests, cfg.max_requests}},
          {"seed", cfg.seed},
          {"cost_server", cfg.cost_server},
          {"cost_cache", cfg.cost_cache},
          {"aoi_weight", cfg.aoi_weight},
          {"aoi_penalty", penalty},
          {"slot_weights", cfg.slot_weights}};
}

GenConfig GenConfigFromJson(const json& doc) {
  GenConfig cfg;
  try {
    cfg.num_users = doc.value("num_users", cfg.num_users);
    cfg.num_contents = doc.value("num_contents", cfg.num_contents);
    cfg.num_slots = doc.value("num_slots", cfg.num_slots);
    cfg.zipf_gamma = doc.value("zipf_gamma", cfg.zipf_gamma);
    cfg.capacity_ratio = doc.value("capacity_ratio", cfg.capacity_ratio);
    if (doc.contains("size_range")) {
      cfg.min_size = doc["size_range"].at(0).get<int>();
      cfg.max_size = doc["size_range"].at(1).get<int>();
    }
    if (doc.contains("requests_per_user_range")) {
      cfg.min_requests = doc["requests_per_user_range"].at(0).get<int>();
      cfg.max_requests = doc["requests_per_user_range"].at(1).get<int>();
    }
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.cost_server = doc.value("cost_server", cfg.cost_server);
    cfg.cost_cache = doc.value("cost_cache", cfg.cost_cache);
    cfg.aoi_weight = doc.value("aoi_weight", cfg.aoi_weight);
    if (doc.contains("aoi_penalty")) {
      const json& p = doc["aoi_penalty"];
      cfg.aoi_penalty =
          p.at("type").get<std::string>() == "table"
              ? AoIPenalty::Table(p.at("values").get<std::vector<double>>())
              : AoIPenalty::Linear(p.at("coefficient").get<double>());
    }
    if (doc.contains("slot_weights")) {
      cfg.slot_weights = doc["slot_weights"].get<std::vector<double>>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("malformed generator config: ") + e.what());
  }
  ValidateGenConfig(cfg);
  return cfg;
}

std::vector<double> ZipfWeights(int n, double gamma) {
  std::vector<double> weights(n);
  double norm = 0.0;
  for (int r = 1; r <= n; ++r) {
    weights[r - 1] = std::pow(static_cast<double>(r), -gamma);
    norm += weights[r - 1];
  }
  for (double& w : weights) w /= norm;
  return weights;
}

Instance Generate(const GenConfig& cfg) {
  ValidateGenConfig(cfg);
  Rng rng(cfg.seed);

  Instance inst;
  inst.num_slots = cfg.num_slots;
  inst.cost_server = cfg.cost_server;
  inst.cost_cache = cfg.cost_cache;
  inst.aoi_weight = cfg.aoi_weight;
  double total_size = 0.0;
  for (int f = 0; f < cfg.num_contents; ++f) {
    const double size =
        static_cast<double>(rng.UniformInt(cfg.min_size, cfg.max_size));
    inst.contents.push_back({f + 1, size, cfg.aoi_penalty});
    total_size += size;
  }
  inst.capacity = cfg.capacity_ratio * total_size;

  // by_rank[t][r] is the content holding popularity rank r + 1 in slot t.
  std::vector<std::vector<int>> by_rank(cfg.num_slots);
  for (auto& order : by_rank) {
    order.resize(cfg.num_contents);
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
  }
  const std::vector<double> zipf = ZipfWeights(cfg.num_contents, cfg.zipf_gamma);

  for (int u = 1; u <= cfg.num_users; ++u) {
    const int num_requests =
        static_cast<int>(rng.UniformInt(cfg.min_requests, cfg.max_requests));
    for (int r = 1; r <= num_requests; ++r) {
      const int slot =
          cfg.slot_weights.empty()
              ? static_cast<int>(rng.UniformInt(0, cfg.num_slots - 1))
              : rng.WeightedIndex(cfg.slot_weights);
      const int content = by_rank[slot][rng.WeightedIndex(zipf)];
      inst.requests.push_back({u, r, content, slot});
    }
  }
  inst.demand =
      DemandFromRequests(cfg.num_contents, cfg.num_slots, inst.requests);
  ValidateInstance(inst);
  return inst;
}

PartitionReduction ReducePartition(std::span<const int> numbers) {
  if (numbers.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "partition input is empty");
  }
  PartitionReduction out;
  Instance& inst = out.instance;
  inst.num_slots = 1;
  inst.cost_server = 2.0;
  inst.cost_cache = 1.0;
  inst.aoi_weight = 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < numbers.size(); ++i) {
    if (numbers[i] <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "partition numbers must be positive");
    }
    inst.contents.push_back(
        {static_cast<int>(i) + 1, static_cast<double>(numbers[i]), {}});
    sum += numbers[i];
  }
  inst.capacity = sum / 2.0;
  inst.demand = Eigen::MatrixXi::Constant(inst.num_contents(), 1, 2);
  out.server_only_cost = 4.0 * sum;
  out.target_gain = sum / 2.0;
  out.yes_threshold_cost = out.server_only_cost - out.target_gain;
  ValidateInstance(inst);
  return out;
}

}  // namespace uecp
