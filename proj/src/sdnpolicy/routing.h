// Copyright 2026 The sdnpolicy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDNPOLICY_ROUTING_H_
#define SDNPOLICY_ROUTING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdnpolicy/system_model.h"

namespace sdnpolicy {

struct PathHop {
  std::string switch_id;
  std::optional<PortNo> ingress;  // nullopt at the first hop
  std::optional<PortNo> egress;   // nullopt at the last hop

  friend bool operator==(const PathHop&, const PathHop&) = default;
};

using Path = std::vector<PathHop>;

// Minimum-cost simple path between two switches (Dijkstra). Ties are broken
// deterministically: the frontier is settled in (distance, switch id) order,
// neighbours are relaxed in (switch id, local port) order, and a tentative
// distance is only replaced by a strictly smaller one. Throws kUnknownSwitch.
Path ShortestPath(const SdnSystemModel& model, std::string_view src_switch,
                  std::string_view dst_switch);

// Sum of link costs along `path`.
double PathCost(const SdnSystemModel& model, const Path& path);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_ROUTING_H_
