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

#include "sdnpolicy/routing.h"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "sdnpolicy/errors.h"

namespace sdnpolicy {
namespace {

struct Edge {
  std::string neighbor;
  PortNo local_port;
  PortNo remote_port;
  double cost;
};

struct Predecessor {
  std::string switch_id;
  PortNo egress;   // on the predecessor
  PortNo ingress;  // on the successor
};

// Adjacency lists sorted by (neighbor id, local port).
std::map<std::string, std::vector<Edge>, std::less<>> BuildAdjacency(
    const SdnSystemModel& model) {
  std::map<std::string, std::vector<Edge>, std::less<>> adj;
  for (const Switch& sw : model.switches()) adj[sw.id];
  for (const Link& link : model.links()) {
    adj[link.a.switch_id].push_back(
        Edge{link.b.switch_id, link.a.port, link.b.port, link.cost});
    adj[link.b.switch_id].push_back(
        Edge{link.a.switch_id, link.b.port, link.a.port, link.cost});
  }
  for (auto& [id, edges] : adj) {
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.neighbor, x.local_port) <
             std::tie(y.neighbor, y.local_port);
    });
  }
  return adj;
}

}  // namespace

Path ShortestPath(const SdnSystemModel& model, std::string_view src_switch,
                  std::string_view dst_switch) {
  for (std::string_view id : {src_switch, dst_switch}) {
    if (model.FindSwitch(id) == nullptr) {
      throw Error(ErrorKind::kUnknownSwitch,
                  "unknown switch \"" + std::string(id) + "\"");
    }
  }
  const auto adj = BuildAdjacency(model);

  std::map<std::string, double, std::less<>> dist;
  std::map<std::string, Predecessor, std::less<>> prev;
  std::map<std::string, bool, std::less<>> settled;
  using Entry = std::pair<double, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  dist[std::string(src_switch)] = 0;
  frontier.emplace(0, std::string(src_switch));
  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (u == dst_switch) break;
    for (const Edge& e : adj.find(u)->second) {
      if (settled[e.neighbor]) continue;
      double alt = d + e.cost;
      auto it = dist.find(e.neighbor);
      if (it == dist.end() || alt < it->second) {
        dist[e.neighbor] = alt;
        prev[e.neighbor] = Predecessor{u, e.local_port, e.remote_port};
        frontier.emplace(alt, e.neighbor);
      }
    }
  }

  // Connectivity is a model invariant, so dst is always reached.
  Path path;
  std::string cur(dst_switch);
  std::optional<PortNo> egress;
  while (true) {
    PathHop hop{cur, std::nullopt, egress};
    auto it = prev.find(cur);
    if (cur == src_switch || it == prev.end()) {
      path.push_back(std::move(hop));
      break;
    }
    hop.ingress = it->second.ingress;
    egress = it->second.egress;
    path.push_back(std::move(hop));
    cur = it->second.switch_id;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

double PathCost(const SdnSystemModel& model, const Path& path) {
  double total = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const PortBinding* b = model.FindPort(path[i].switch_id, *path[i].egress);
    total += b->cost;
  }
  return total;
}

}  // namespace sdnpolicy
