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

#ifndef UECP_INSTANCE_IO_H_
#define UECP_INSTANCE_IO_H_

// JSON serialization of instances and schedules.
//
// Instance document:
//   {"T": 24, "capacity": 30.5, "cost_server": 10, "cost_cache": 1,
//    "aoi_weight": 0.5,
//    "contents": [{"id": 1, "size": 3,
//                  "aoi_penalty": {"type": "linear", "coefficient": 1}}],
//    "demand": [[...T counts...], ...F rows...],
//    "requests": [{"user": 1, "index": 1, "content": 1, "slot": 1}]}
// Either "demand" or "requests" may be omitted, not both. Content ids and
// slots are 1-based. A table penalty is {"type": "table", "values": [0,..]}.

#include <string>

#include "json.hpp"
#include "uecp/model.h"

namespace uecp {

nlohmann::json ToJson(const Instance& inst);
nlohmann::json ToJson(const Schedule& sched);
nlohmann::json ToJson(const CostBreakdown& cost);

// Throws Error(kInvalidArgument) on missing or malformed fields and on any
// violated model invariant.
Instance InstanceFromJson(const nlohmann::json& doc);

Instance ReadInstanceFile(const std::string& path);
void WriteJsonFile(const std::string& path, const nlohmann::json& doc);

}  // namespace uecp

#endif  // UECP_INSTANCE_IO_H_
