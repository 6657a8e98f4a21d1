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

#ifndef UECP_BASELINES_H_
#define UECP_BASELINES_H_

// Greedy comparison policies. Both walk the slots in order and, in each
// slot, offer contents to the cache one at a time, admitting every content
// that still fits (first fit); contents not admitted are evicted. An
// admitted content that was not cached in the previous slot is downloaded;
// one that was is re-downloaded once lambda p(age + 1) m_tf reaches
// refresh_threshold * l_f (c_s - c_b), and kept otherwise. Contents
// without any request are never offered.
//
//  - popularity-based (PBA): offers contents by decreasing total request
//    count, ties by id.
//  - random-based (RBA): each slot draws a fresh order by weighted sampling
//    without replacement, weight = total request count.

#include <cstdint>

#include "uecp/model.h"

namespace uecp {

struct BaselineOptions {
  double refresh_threshold = 0.5;
};

Schedule RunPba(const Instance& inst, uint64_t seed,
                const BaselineOptions& options = {});
Schedule RunRba(const Instance& inst, uint64_t seed,
                const BaselineOptions& options = {});

}  // namespace uecp

#endif  // UECP_BASELINES_H_
