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

#include "uecp/instance_io.h"

#include <fstream>

#include "uecp/error.h"

namespace uecp {

using nlohmann::json;

namespace {

json PenaltyToJson(const AoIPenalty& p) {
  if (p.is_linear()) {
    return {{"type", "linear"}, {"coefficient", p.coefficient()}};
  }
  return {{"type", "table"}, {"values", p.table()}};
}

AoIPenalty PenaltyFromJson(const json& doc) {
  const std::string type = doc.at("type").get<std::string>();
  if (type == "linear") {
    return AoIPenalty::Linear(doc.at("coefficient").get<double>());
  }
  if (type == "table") {
    return AoIPenalty::Table(doc.at("values").get<std::vector<double>>());
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown aoi_penalty type " + type);
}

}  // namespace

json ToJson(const Instance& inst) {
  json doc;
  doc["T"] = inst.num_slots;
  doc["capacity"] = inst.capacity;
  doc["cost_server"] = inst.cost_server;
  doc["cost_cache"] = inst.cost_cache;
  doc["aoi_weight"] = inst.aoi_weight;
  json contents = json::array();
  for (const Content& c : inst.contents) {
    contents.push_back({{"id", c.id},
                        {"size", c.size},
                        {"aoi_penalty", PenaltyToJson(c.aoi_penalty)}});
  }
  doc["contents"] = std::move(contents);
  json demand = json::array();
  for (int f = 0; f < inst.demand.rows(); ++f) {
    json row = json::array();
    for (int t = 0; t < inst.demand.cols(); ++t) row.push_back(inst.demand(f, t));
    demand.push_back(std::move(row));
  }
  doc["demand"] = std::move(demand);
  if (!inst.requests.empty()) {
    json requests = json::array();
    for (const Request& r : inst.requests) {
      requests.push_back({{"user", r.user},
                          {"index", r.index},
                          {"content", r.content + 1},
                          {"slot", r.slot + 1}});
    }
    doc["requests"] = std::move(requests);
  }
  return doc;
}

json ToJson(const CostBreakdown& cost) {
  return {{"download", cost.download},
          {"update", cost.update},
          {"aoi", cost.aoi},
          {"total", cost.total}};
}

json ToJson(const Schedule& sched) {
  json columns = json::array();
  for (const Column& col : sched.columns) {
    json ages = json::array();
    for (int a : col.ages()) {
      if (a == kAbsent) {
        ages.push_back(nullptr);
      } else {
        ages.push_back(a);
      }
    }
    columns.push_back({{"content", col.content() + 1}, {"ages", ages}});
  }
  return {{"columns", columns}, {"cost", ToJson(sched.cost)}};
}

Instance InstanceFromJson(const json& doc) {
  Instance inst;
  try {
    inst.num_slots = doc.at("T").get<int>();
    inst.capacity = doc.at("capacity").get<double>();
    inst.cost_server = doc.at("cost_server").get<double>();
    inst.cost_cache = doc.at("cost_cache").get<double>();
    inst.aoi_weight = doc.at("aoi_weight").get<double>();
    for (const json& c : doc.at("contents")) {
      Content content;
      content.id = c.at("id").get<int>();
      content.size = c.at("size").get<double>();
      if (c.contains("aoi_penalty")) {
        content.aoi_penalty = PenaltyFromJson(c.at("aoi_penalty"));
      }
      inst.contents.push_back(std::move(content));
    }
    const int num_contents = inst.num_contents();
    if (doc.contains("requests")) {
      for (const json& r : doc.at("requests")) {
        inst.requests.push_back({r.at("user").get<int>(),
                                 r.at("index").get<int>(),
                                 r.at("content").get<int>() - 1,
                                 r.at("slot").get<int>() - 1});
      }
    }
    if (doc.contains("demand")) {
      const json& rows = doc.at("demand");
      if (static_cast<int>(rows.size()) != num_contents) {
        throw Error(ErrorKind::kDimensionMismatch, "demand must have F rows");
      }
      inst.demand.resize(num_contents, inst.num_slots);
      for (int f = 0; f < num_contents; ++f) {
        if (static_cast<int>(rows[f].size()) != inst.num_slots) {
          throw Error(ErrorKind::kDimensionMismatch,
                      "demand rows must have T entries");
        }
        for (int t = 0; t < inst.num_slots; ++t) {
          inst.demand(f, t) = rows[f][t].get<int>();
        }
      }
    } else if (doc.contains("requests")) {
      inst.demand =
          DemandFromRequests(num_contents, inst.num_slots, inst.requests);
    } else {
      throw Error(ErrorKind::kInvalidArgument,
                  "instance needs demand or requests");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("malformed instance JSON: ") + e.what());
  }
  ValidateInstance(inst);
  return inst;
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument,
                path + ": " + std::string(e.what()));
  }
  return InstanceFromJson(doc);
}

void WriteJsonFile(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace uecp
