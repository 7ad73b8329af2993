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

#include "testing/fixtures.h"

#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sdnpolicy/json_io.h"
#include <unistd.h>

namespace sdnpolicy::testing {

using nlohmann::json;

Terminal MakeTerminal(const std::string& id, int n, const std::string& sw,
                      PortNo port) {
  Terminal t;
  t.id = id;
  t.mac = MacAddress(0x020000000000ull + static_cast<uint64_t>(n));
  t.ip = Ipv4Address((10u << 24) | static_cast<uint32_t>(n));
  t.attachment = SwitchPort{sw, port};
  return t;
}

Switch MakeSwitch(int i, int n_ports) {
  Switch sw;
  sw.id = "s" + std::to_string(i);
  sw.dpid = static_cast<uint64_t>(i);
  for (int p = 1; p <= n_ports; ++p) sw.ports.push_back(p);
  return sw;
}

Link MakeLink(const std::string& a, PortNo pa, const std::string& b, PortNo pb,
              double cost) {
  return Link{SwitchPort{a, pa}, SwitchPort{b, pb}, cost};
}

ModelSpec TwoSwitchSpec() {
  ModelSpec spec;
  spec.switches = {MakeSwitch(1, 2), MakeSwitch(2, 2)};
  spec.links = {MakeLink("s1", 2, "s2", 1)};
  spec.terminals = {MakeTerminal("t1", 1, "s1", 1),
                    MakeTerminal("t3", 3, "s2", 2)};
  return spec;
}

ModelSpec LineSpec() {
  ModelSpec spec;
  spec.switches = {MakeSwitch(1, 2), MakeSwitch(2, 2), MakeSwitch(3, 2)};
  spec.links = {MakeLink("s1", 2, "s2", 1), MakeLink("s2", 2, "s3", 1)};
  spec.terminals = {MakeTerminal("t1", 1, "s1", 1),
                    MakeTerminal("t3", 3, "s3", 2)};
  return spec;
}

PacketHeader HeaderBetween(const SdnSystemModel& model, const std::string& src,
                           const std::string& dst, uint8_t proto,
                           uint16_t port) {
  const Terminal* s = model.FindTerminal(src);
  const Terminal* d = model.FindTerminal(dst);
  PacketHeader h;
  h.eth_src = s->mac;
  h.ip_src = s->ip;
  h.eth_dst = d->mac;
  h.ip_dst = d->ip;
  h.ip_proto = proto;
  h.tp_dst = port;
  return h;
}

std::optional<double> BruteForceMinCost(const ModelSpec& spec,
                                        const std::string& src,
                                        const std::string& dst) {
  std::multimap<std::string, std::pair<std::string, double>> adj;
  for (const Link& l : spec.links) {
    adj.emplace(l.a.switch_id, std::make_pair(l.b.switch_id, l.cost));
    adj.emplace(l.b.switch_id, std::make_pair(l.a.switch_id, l.cost));
  }
  std::optional<double> best;
  std::set<std::string> on_path{src};
  std::function<void(const std::string&, double)> dfs =
      [&](const std::string& at, double cost) {
        if (at == dst) {
          if (!best || cost < *best) best = cost;
          return;
        }
        auto [lo, hi] = adj.equal_range(at);
        for (auto it = lo; it != hi; ++it) {
          const auto& [next, c] = it->second;
          if (on_path.contains(next)) continue;
          on_path.insert(next);
          dfs(next, cost + c);
          on_path.erase(next);
        }
      };
  dfs(src, 0);
  return best;
}

BindingRegistry StandardServices() {
  BindingRegistry r;
  r.services["HTTP"] = ServiceBinding{6, 80};
  r.services["HTTPS"] = ServiceBinding{6, 443};
  r.services["SSH"] = ServiceBinding{6, 22};
  r.services["DNS"] = ServiceBinding{17, 53};
  return r;
}

namespace {

json RegistryJson(const BindingRegistry& registry) {
  json principals = json::object();
  for (const auto& [name, ids] : registry.principals) principals[name] = ids;
  json services = json::object();
  for (const auto& [name, b] : registry.services) {
    json s = json::object();
    if (b.ip_proto) s["proto"] = *b.ip_proto;
    if (b.tp_dst) s["port"] = *b.tp_dst;
    services[name] = s;
  }
  return json{{"principals", principals}, {"services", services}};
}

}  // namespace

std::string ModelSpecToJson(const ModelSpec& spec,
                            const BindingRegistry* registry) {
  json switches = json::array();
  for (const Switch& sw : spec.switches) {
    json rules = json::array();
    for (const FlowRule& r : sw.table) rules.push_back(json_io::RuleToJson(r));
    json s{{"id", sw.id}, {"dpid", sw.dpid}, {"ports", sw.ports}};
    if (!rules.empty()) s["rules"] = rules;
    switches.push_back(s);
  }
  json links = json::array();
  for (const Link& l : spec.links) {
    links.push_back(json{{"a", {{"switch", l.a.switch_id}, {"port", l.a.port}}},
                         {"b", {{"switch", l.b.switch_id}, {"port", l.b.port}}},
                         {"cost", l.cost}});
  }
  json terminals = json::array();
  for (const Terminal& t : spec.terminals) {
    json tj{{"id", t.id},
            {"mac", t.mac.ToString()},
            {"ip", t.ip.ToString()},
            {"attach",
             {{"switch", t.attachment.switch_id}, {"port", t.attachment.port}}}};
    if (t.vlan) tj["vlan"] = *t.vlan;
    terminals.push_back(tj);
  }
  json doc{{"switches", switches}, {"links", links}, {"terminals", terminals}};
  if (registry != nullptr) doc["registry"] = RegistryJson(*registry);
  return doc.dump(2);
}

std::string RegistryToJson(const BindingRegistry& registry) {
  return RegistryJson(registry).dump(2);
}

std::string PoliciesToJson(const std::vector<SecurityPolicy>& policies) {
  json list = json::array();
  for (const SecurityPolicy& p : policies) {
    list.push_back(json{{"id", p.id},
                        {"subject", p.subject},
                        {"object", p.object},
                        {"service", p.service},
                        {"action", std::string(PolicyActionName(p.action))}});
  }
  return json{{"policies", list}}.dump(2);
}

std::filesystem::path MakeTempDir(const std::string& prefix) {
  static std::atomic<int> counter{0};
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      (prefix + "-" + std::to_string(::getpid()) + "-" +
       std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sdnpolicy::testing
