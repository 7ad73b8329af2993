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

#include "sdnpolicy/system_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

#include "sdnpolicy/errors.h"
#include "sdnpolicy/json_io.h"

namespace sdnpolicy {
namespace {

using json_io::Json;

[[noreturn]] void Violation(std::string_view invariant,
                            const std::string& element) {
  throw Error(ErrorKind::kInvariantViolation,
              "invariant \"" + std::string(invariant) + "\" violated by " +
                  element);
}

std::string Quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

std::string Describe(const SwitchPort& sp) {
  return Quote(sp.switch_id) + " port " + std::to_string(sp.port);
}

std::string JoinComponents(const std::vector<std::vector<std::string>>& cs) {
  std::string out;
  for (const auto& component : cs) {
    if (!out.empty()) out += " ";
    out += "{";
    for (size_t i = 0; i < component.size(); ++i) {
      if (i > 0) out += ",";
      out += component[i];
    }
    out += "}";
  }
  return out;
}

}  // namespace

DisconnectedTopologyError::DisconnectedTopologyError(
    std::vector<std::vector<std::string>> components)
    : Error(ErrorKind::kDisconnectedTopology,
            "switch topology is disconnected: " + JoinComponents(components)),
      components_(std::move(components)) {}

int Match::Specificity() const {
  return in_port.has_value() + eth_src.has_value() + eth_dst.has_value() +
         ip_src.has_value() + ip_dst.has_value() + ip_proto.has_value() +
         tp_dst.has_value() + vlan.has_value();
}

bool Match::Covers(const PacketHeader& h, PortNo port) const {
  if (in_port && *in_port != port) return false;
  if (eth_src && *eth_src != h.eth_src) return false;
  if (eth_dst && *eth_dst != h.eth_dst) return false;
  if (ip_src && *ip_src != h.ip_src) return false;
  if (ip_dst && *ip_dst != h.ip_dst) return false;
  if (ip_proto && *ip_proto != h.ip_proto) return false;
  if (tp_dst && *tp_dst != h.tp_dst) return false;
  if (vlan && vlan != h.vlan) return false;
  return true;
}

std::string Match::Serialize() const {
  std::string out;
  auto add = [&out](std::string_view key, const std::string& value) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  };
  if (in_port) add("in_port", std::to_string(*in_port));
  if (eth_src) add("eth_src", eth_src->ToString());
  if (eth_dst) add("eth_dst", eth_dst->ToString());
  if (ip_src) add("ip_src", ip_src->ToString());
  if (ip_dst) add("ip_dst", ip_dst->ToString());
  if (ip_proto) add("ip_proto", std::to_string(*ip_proto));
  if (tp_dst) add("tp_dst", std::to_string(*tp_dst));
  if (vlan) add("vlan", std::to_string(*vlan));
  return out;
}

std::string Action::ToString() const {
  return is_drop() ? "drop" : "output:" + std::to_string(port);
}

bool LookupPrecedes(const FlowRule& a, const FlowRule& b) {
  if (a.priority != b.priority) return a.priority > b.priority;
  int sa = a.match.Specificity(), sb = b.match.Specificity();
  if (sa != sb) return sa > sb;
  return a.match.Serialize() < b.match.Serialize();
}

FlowRule TableMissRule() {
  return FlowRule{Match{}, kMissPriority, Action::Drop(),
                  std::string(kDefaultProvenance)};
}

bool Switch::HasPort(PortNo port) const {
  return std::find(ports.begin(), ports.end(), port) != ports.end();
}

Switch* ModelSpec::MutableSwitch(std::string_view id) {
  for (Switch& sw : switches) {
    if (sw.id == id) return &sw;
  }
  return nullptr;
}

SdnSystemModel SdnSystemModel::Create(ModelSpec spec) {
  auto state = std::make_shared<State>();

  if (spec.switches.empty()) Violation("switch set nonempty", "the model");

  // Switches.
  std::set<uint64_t> dpids;
  for (size_t i = 0; i < spec.switches.size(); ++i) {
    Switch& sw = spec.switches[i];
    if (sw.id.empty()) Violation("switch id nonempty", "a switch");
    if (!state->switch_index.emplace(sw.id, i).second) {
      Violation("switch id uniqueness", "switch " + Quote(sw.id));
    }
    if (!dpids.insert(sw.dpid).second) {
      Violation("switch dpid uniqueness", "switch " + Quote(sw.id));
    }
    if (sw.ports.empty()) {
      Violation("switch ports nonempty", "switch " + Quote(sw.id));
    }
    for (PortNo port : sw.ports) {
      if (port == 0) {
        Violation("port numbers positive", "switch " + Quote(sw.id));
      }
      if (!state->ports.emplace(std::make_pair(sw.id, port), PortBinding{})
               .second) {
        Violation("port uniqueness within switch",
                  Describe(SwitchPort{sw.id, port}));
      }
    }
    state->port_count += sw.ports.size();
    state->max_ports = std::max(state->max_ports, sw.ports.size());

    // Tables: exactly one priority-0 all-wildcard rule; no (priority, match)
    // duplicates; forward ports exist.
    bool has_miss = false;
    std::set<std::pair<uint16_t, std::string>> seen;
    for (const FlowRule& rule : sw.table) {
      std::string where = "rule (priority " + std::to_string(rule.priority) +
                          ", match \"" + rule.match.Serialize() +
                          "\") on switch " + Quote(sw.id);
      if (rule.priority == kMissPriority) {
        if (!rule.match.IsAllWildcard()) {
          Violation("priority 0 reserved for the table-miss rule", where);
        }
        has_miss = true;
      }
      if (!seen.emplace(rule.priority, rule.match.Serialize()).second) {
        Violation("rule (priority, match) uniqueness", where);
      }
      if (!rule.action.is_drop() && !sw.HasPort(rule.action.port)) {
        Violation("forward port exists on owning switch", where);
      }
    }
    if (!has_miss) sw.table.push_back(TableMissRule());
  }

  // Links.
  for (Link& link : spec.links) {
    std::string where = "link " + Describe(link.a) + " -- " + Describe(link.b);
    for (const SwitchPort* end : {&link.a, &link.b}) {
      if (!state->ports.contains(std::make_pair(end->switch_id, end->port))) {
        Violation("link endpoint exists", where);
      }
    }
    if (link.a == link.b) Violation("link endpoints distinct", where);
    if (link.a.switch_id == link.b.switch_id) {
      Violation("link is not a self-loop", where);
    }
    if (!(link.cost > 0) || !std::isfinite(link.cost)) {
      Violation("link cost positive and finite", where);
    }
    for (auto [end, peer] : {std::pair{&link.a, &link.b},
                             std::pair{&link.b, &link.a}}) {
      PortBinding& binding =
          state->ports.at(std::make_pair(end->switch_id, end->port));
      if (binding.kind != PortBinding::Kind::kUnconnected) {
        Violation("port carries at most one link", where);
      }
      binding.kind = PortBinding::Kind::kLink;
      binding.peer = *peer;
      binding.cost = link.cost;
    }
  }

  // Terminals.
  std::set<uint64_t> macs;
  for (size_t i = 0; i < spec.terminals.size(); ++i) {
    const Terminal& t = spec.terminals[i];
    std::string where = "terminal " + Quote(t.id);
    if (t.id.empty()) Violation("terminal id nonempty", "a terminal");
    if (!state->terminal_index.emplace(t.id, i).second) {
      Violation("terminal id uniqueness", where);
    }
    if (!macs.insert(t.mac.bits()).second) {
      Violation("terminal mac uniqueness", where);
    }
    if (!state->terminal_by_ip.emplace(t.ip.bits(), i).second) {
      Violation("terminal ip uniqueness", where);
    }
    if (t.vlan && *t.vlan > kMaxVlanId) {
      Violation("vlan is a 12-bit identifier", where);
    }
    if (!state->switch_index.contains(t.attachment.switch_id)) {
      Violation("terminal attachment switch exists", where);
    }
    auto port_it = state->ports.find(
        std::make_pair(t.attachment.switch_id, t.attachment.port));
    if (port_it == state->ports.end()) {
      Violation("terminal attachment port exists", where);
    }
    if (port_it->second.kind == PortBinding::Kind::kLink) {
      Violation("terminal port carries no link", where);
    }
    if (port_it->second.kind == PortBinding::Kind::kTerminal) {
      Violation("one terminal per port", where);
    }
    port_it->second.kind = PortBinding::Kind::kTerminal;
    port_it->second.terminal_id = t.id;
  }

  // Connectivity.
  {
    std::vector<size_t> parent(spec.switches.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Link& link : spec.links) {
      parent[find(state->switch_index.at(link.a.switch_id))] =
          find(state->switch_index.at(link.b.switch_id));
    }
    std::map<size_t, std::vector<std::string>> groups;
    for (size_t i = 0; i < spec.switches.size(); ++i) {
      groups[find(i)].push_back(spec.switches[i].id);
    }
    if (groups.size() > 1) {
      std::vector<std::vector<std::string>> components;
      for (auto& [root, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        components.push_back(std::move(ids));
      }
      std::sort(components.begin(), components.end());
      throw DisconnectedTopologyError(std::move(components));
    }
  }

  for (const Switch& sw : spec.switches) {
    std::vector<size_t> order(sw.table.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&sw](size_t a, size_t b) {
      return LookupPrecedes(sw.table[a], sw.table[b]);
    });
    state->lookup_order.push_back(std::move(order));
  }

  state->spec = std::move(spec);
  return SdnSystemModel(std::move(state));
}

const Terminal* SdnSystemModel::FindTerminal(std::string_view id) const {
  auto it = state_->terminal_index.find(id);
  return it == state_->terminal_index.end() ? nullptr
                                             : &terminals()[it->second];
}

const Switch* SdnSystemModel::FindSwitch(std::string_view id) const {
  auto it = state_->switch_index.find(id);
  return it == state_->switch_index.end() ? nullptr : &switches()[it->second];
}

const PortBinding* SdnSystemModel::FindPort(std::string_view switch_id,
                                            PortNo port) const {
  auto it = state_->ports.find(std::make_pair(std::string(switch_id), port));
  return it == state_->ports.end() ? nullptr : &it->second;
}

const Terminal* SdnSystemModel::TerminalByIp(Ipv4Address ip) const {
  auto it = state_->terminal_by_ip.find(ip.bits());
  return it == state_->terminal_by_ip.end() ? nullptr
                                             : &terminals()[it->second];
}

const std::vector<size_t>& SdnSystemModel::LookupOrder(
    std::string_view switch_id) const {
  return state_->lookup_order.at(state_->switch_index.find(switch_id)->second);
}

std::string SdnSystemModel::CanonicalText() const {
  Json switches_json = Json::object();
  for (size_t i = 0; i < switches().size(); ++i) {
    const Switch& sw = switches()[i];
    std::vector<PortNo> ports = sw.ports;
    std::sort(ports.begin(), ports.end());
    Json table = Json::array();
    for (size_t idx : state_->lookup_order[i]) {
      table.push_back(json_io::RuleToJson(sw.table[idx]));
    }
    switches_json[sw.id] = Json{{"dpid", sw.dpid}, {"ports", ports},
                                {"table", std::move(table)}};
  }
  Json terminals_json = Json::object();
  for (const Terminal& t : terminals()) {
    Json tj{{"mac", t.mac.ToString()},
            {"ip", t.ip.ToString()},
            {"switch", t.attachment.switch_id},
            {"port", t.attachment.port}};
    if (t.vlan) tj["vlan"] = *t.vlan;
    terminals_json[t.id] = std::move(tj);
  }
  std::vector<std::tuple<SwitchPort, SwitchPort, double>> links;
  for (const Link& link : this->links()) {
    auto [lo, hi] = std::minmax(link.a, link.b);
    links.emplace_back(lo, hi, link.cost);
  }
  std::sort(links.begin(), links.end());
  Json links_json = Json::array();
  for (const auto& [a, b, cost] : links) {
    links_json.push_back(Json{{"a", {a.switch_id, a.port}},
                              {"b", {b.switch_id, b.port}},
                              {"cost", cost}});
  }
  return Json{{"switches", std::move(switches_json)},
              {"terminals", std::move(terminals_json)},
              {"links", std::move(links_json)}}
      .dump();
}

std::string SdnSystemModel::Hash() const { return StableHash(CanonicalText()); }

std::string StableHash(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

SwitchPort SwitchPortFromJson(const Json& value, const std::string& path) {
  SwitchPort sp;
  sp.switch_id =
      json_io::GetString(json_io::Field(value, "switch", path), path + "/switch");
  sp.port = static_cast<PortNo>(json_io::GetUnsigned(
      json_io::Field(value, "port", path), path + "/port", UINT32_MAX));
  return sp;
}

uint64_t DpidFromJson(const Json& value, const std::string& path) {
  if (value.is_string()) {
    std::string text = value.get<std::string>();
    if (text.size() > 2 && text.size() <= 18 && text[0] == '0' &&
        (text[1] == 'x' || text[1] == 'X')) {
      uint64_t out = 0;
      auto [ptr, ec] = std::from_chars(text.data() + 2,
                                       text.data() + text.size(), out, 16);
      if (ec == std::errc() && ptr == text.data() + text.size()) return out;
    }
    json_io::SchemaError(path, "expected an integer or 0x-prefixed hex dpid");
  }
  return json_io::GetUnsigned(value, path, UINT64_MAX);
}

}  // namespace

SdnSystemModel LoadModel(std::string_view document) {
  Json doc = json_io::Parse(document);
  json_io::ExpectObject(doc, "");
  for (const auto& [key, unused] : doc.items()) {
    if (key != "switches" && key != "links" && key != "terminals" &&
        key != "registry" && key != "comment") {
      json_io::SchemaError("", "unknown top-level section \"" + key + "\"");
    }
  }

  ModelSpec spec;
  const Json& switches = json_io::Field(doc, "switches", "");
  json_io::ExpectArray(switches, "/switches");
  for (size_t i = 0; i < switches.size(); ++i) {
    std::string path = "/switches/" + std::to_string(i);
    const Json& sj = switches[i];
    Switch sw;
    sw.id = json_io::GetString(json_io::Field(sj, "id", path), path + "/id");
    sw.dpid = DpidFromJson(json_io::Field(sj, "dpid", path), path + "/dpid");
    const Json& ports = json_io::Field(sj, "ports", path);
    json_io::ExpectArray(ports, path + "/ports");
    for (size_t p = 0; p < ports.size(); ++p) {
      sw.ports.push_back(static_cast<PortNo>(json_io::GetUnsigned(
          ports[p], path + "/ports/" + std::to_string(p), UINT32_MAX)));
    }
    if (const Json* rules = json_io::OptionalField(sj, "rules", path)) {
      json_io::ExpectArray(*rules, path + "/rules");
      for (size_t r = 0; r < rules->size(); ++r) {
        sw.table.push_back(json_io::RuleFromJson(
            (*rules)[r], path + "/rules/" + std::to_string(r)));
      }
    }
    spec.switches.push_back(std::move(sw));
  }

  if (const Json* links = json_io::OptionalField(doc, "links", "")) {
    json_io::ExpectArray(*links, "/links");
    for (size_t i = 0; i < links->size(); ++i) {
      std::string path = "/links/" + std::to_string(i);
      const Json& lj = (*links)[i];
      Link link;
      link.a = SwitchPortFromJson(json_io::Field(lj, "a", path), path + "/a");
      link.b = SwitchPortFromJson(json_io::Field(lj, "b", path), path + "/b");
      if (const Json* cost = json_io::OptionalField(lj, "cost", path)) {
        link.cost = json_io::GetNumber(*cost, path + "/cost");
      }
      spec.links.push_back(std::move(link));
    }
  }

  if (const Json* terminals = json_io::OptionalField(doc, "terminals", "")) {
    json_io::ExpectArray(*terminals, "/terminals");
    for (size_t i = 0; i < terminals->size(); ++i) {
      std::string path = "/terminals/" + std::to_string(i);
      const Json& tj = (*terminals)[i];
      Terminal t;
      t.id = json_io::GetString(json_io::Field(tj, "id", path), path + "/id");
      t.mac = json_io::GetMac(json_io::Field(tj, "mac", path), path + "/mac");
      t.ip = json_io::GetIpv4(json_io::Field(tj, "ip", path), path + "/ip");
      if (const Json* vlan = json_io::OptionalField(tj, "vlan", path)) {
        t.vlan = static_cast<uint16_t>(
            json_io::GetUnsigned(*vlan, path + "/vlan", kMaxVlanId));
      }
      t.attachment = SwitchPortFromJson(json_io::Field(tj, "attach", path),
                                        path + "/attach");
      spec.terminals.push_back(std::move(t));
    }
  }

  return SdnSystemModel::Create(std::move(spec));
}

}  // namespace sdnpolicy
