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

#include "sdnpolicy/transform.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "sdnpolicy/errors.h"
#include "sdnpolicy/json_io.h"
#include "sdnpolicy/routing.h"

namespace sdnpolicy {
namespace {

using json_io::Json;

constexpr std::string_view kFtmFormatTag = "sdnpolicy-ftm/1";

const Terminal& AttachedTerminal(const SdnSystemModel& model,
                                 const std::string& id) {
  const Terminal* t = model.FindTerminal(id);
  if (t == nullptr) {
    throw Error(ErrorKind::kUnknownAttachment,
                "terminal \"" + id + "\" is not attached to the model");
  }
  return *t;
}

// Rules keyed by (switch, priority, serialized match), so duplicates collapse.
class RuleCollector {
 public:
  void Add(const std::string& switch_id, FlowRule rule) {
    auto key = std::make_tuple(switch_id, rule.priority, rule.match.Serialize());
    auto [it, inserted] = rules_.emplace(std::move(key), rule);
    if (inserted) return;
    if (it->second.action != rule.action) {
      throw Error(ErrorKind::kInternal,
                  "conflicting actions synthesized for " +
                      RuleToText(switch_id, rule));
    }
    if (rule.provenance < it->second.provenance) {
      it->second.provenance = std::move(rule.provenance);
    }
  }

  std::map<std::string, std::vector<FlowRule>, std::less<>> Finish() && {
    std::map<std::string, std::vector<FlowRule>, std::less<>> out;
    for (auto& [key, rule] : rules_) {
      out[std::get<0>(key)].push_back(std::move(rule));
    }
    for (auto& [id, list] : out) {
      std::sort(list.begin(), list.end(), LookupPrecedes);
    }
    return out;
  }

 private:
  std::map<std::tuple<std::string, uint16_t, std::string>, FlowRule> rules_;
};

// Forward rules carrying src->dst traffic along the shortest path.
void AddForwardingRules(const SdnSystemModel& model, const Terminal& src,
                        const Terminal& dst, std::optional<uint8_t> ip_proto,
                        std::optional<uint16_t> tp_dst,
                        const std::string& provenance,
                        RuleCollector& collector) {
  Path path = ShortestPath(model, src.attachment.switch_id,
                           dst.attachment.switch_id);
  for (size_t i = 0; i < path.size(); ++i) {
    const PathHop& hop = path[i];
    FlowRule rule;
    rule.priority = kPermitPriority;
    rule.match.in_port = i == 0 ? src.attachment.port : *hop.ingress;
    rule.match.ip_src = src.ip;
    rule.match.ip_dst = dst.ip;
    rule.match.ip_proto = ip_proto;
    rule.match.tp_dst = tp_dst;
    rule.action = Action::Forward(i + 1 == path.size() ? dst.attachment.port
                                                       : *hop.egress);
    rule.provenance = provenance;
    collector.Add(hop.switch_id, std::move(rule));
  }
}

std::string MatchText(const Match& m) {
  std::string out;
  auto add = [&out](std::string_view key, const std::string& value) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  };
  if (m.in_port) add("in_port", std::to_string(*m.in_port));
  if (m.eth_src) add("dl_src", m.eth_src->ToString());
  if (m.eth_dst) add("dl_dst", m.eth_dst->ToString());
  if (m.vlan) add("dl_vlan", std::to_string(*m.vlan));
  if (m.ip_src) add("nw_src", m.ip_src->ToString());
  if (m.ip_dst) add("nw_dst", m.ip_dst->ToString());
  if (m.ip_proto) add("nw_proto", std::to_string(*m.ip_proto));
  if (m.tp_dst) add("tp_dst", std::to_string(*m.tp_dst));
  return out.empty() ? "any" : out;
}

}  // namespace

size_t FlowTableDelta::RuleCount() const {
  size_t n = 0;
  for (const auto& [id, list] : rules) n += list.size();
  return n;
}

std::string PolicySetHash(const std::vector<ConcretePair>& pairs) {
  std::string text;
  for (const ConcretePair& p : pairs) {
    text += p.policy_id + '|' + p.src + '|' + p.dst + '|' +
            (p.ip_proto ? std::to_string(*p.ip_proto) : "*") + '|' +
            (p.tp_dst ? std::to_string(*p.tp_dst) : "*") + '|' +
            std::string(PolicyActionName(p.action)) + '\n';
  }
  return StableHash(text);
}

FlowTableDelta Transform(const std::vector<ConcretePair>& pairs,
                         const SdnSystemModel& model) {
  RuleCollector collector;
  for (const ConcretePair& pair : pairs) {
    const Terminal& src = AttachedTerminal(model, pair.src);
    const Terminal& dst = AttachedTerminal(model, pair.dst);
    if (pair.action == PolicyAction::kDeny) {
      FlowRule rule;
      rule.priority = kDenyPriority;
      rule.match.in_port = src.attachment.port;
      rule.match.ip_src = src.ip;
      rule.match.ip_dst = dst.ip;
      rule.match.ip_proto = pair.ip_proto;
      rule.match.tp_dst = pair.tp_dst;
      rule.action = Action::Drop();
      rule.provenance = pair.policy_id;
      collector.Add(src.attachment.switch_id, std::move(rule));
      continue;
    }
    AddForwardingRules(model, src, dst, pair.ip_proto, pair.tp_dst,
                       pair.policy_id, collector);
    // Replies are routed exactly as a dst->src permit would be, so the two
    // never disagree on a shared rule.
    AddForwardingRules(model, dst, src, pair.ip_proto, std::nullopt,
                       pair.policy_id, collector);
  }
  FlowTableDelta delta;
  delta.rules = std::move(collector).Finish();
  delta.policy_set_hash = PolicySetHash(pairs);
  delta.model_hash = model.Hash();
  return delta;
}

SdnSystemModel Apply(const SdnSystemModel& model, const FlowTableDelta& delta) {
  std::string actual = model.Hash();
  if (delta.model_hash != actual) {
    throw Error(ErrorKind::kStaleDelta, "delta was generated for model " +
                                            delta.model_hash +
                                            " but the model hash is " + actual);
  }
  ModelSpec spec = model.spec();
  for (const auto& [switch_id, rules] : delta.rules) {
    Switch* sw = spec.MutableSwitch(switch_id);
    if (sw == nullptr) {
      throw Error(ErrorKind::kInvariantViolation,
                  "invariant \"delta switches exist\" violated by switch \"" +
                      switch_id + "\"");
    }
    std::set<std::pair<uint16_t, std::string>> installed;
    for (const FlowRule& rule : sw->table) {
      installed.emplace(rule.priority, rule.match.Serialize());
    }
    for (const FlowRule& rule : rules) {
      if (!installed.emplace(rule.priority, rule.match.Serialize()).second) {
        throw Error(ErrorKind::kDuplicateRule,
                    "duplicate rule: " + RuleToText(switch_id, rule));
      }
      sw->table.push_back(rule);
    }
  }
  return SdnSystemModel::Create(std::move(spec));
}

std::string RuleToText(std::string_view switch_id, const FlowRule& rule) {
  return "switch=" + std::string(switch_id) +
         " priority=" + std::to_string(rule.priority) + " " +
         MatchText(rule.match) + " actions=" + rule.action.ToString() +
         " provenance=" + rule.provenance;
}

std::string ExportFtm(const FlowTableDelta& delta, FtmFormat format) {
  if (format == FtmFormat::kHuman) {
    std::string out;
    for (const auto& [switch_id, rules] : delta.rules) {
      for (const FlowRule& rule : rules) {
        out += RuleToText(switch_id, rule);
        out += '\n';
      }
    }
    return out;
  }
  Json switches = Json::object();
  for (const auto& [switch_id, rules] : delta.rules) {
    Json list = Json::array();
    for (const FlowRule& rule : rules) list.push_back(json_io::RuleToJson(rule));
    switches[switch_id] = std::move(list);
  }
  return json_io::Dump(Json{{"format", kFtmFormatTag},
                            {"metadata",
                             {{"model_hash", delta.model_hash},
                              {"policy_set_hash", delta.policy_set_hash}}},
                            {"switches", std::move(switches)}});
}

FlowTableDelta ParseFtm(std::string_view document) {
  Json doc = json_io::Parse(document);
  json_io::ExpectObject(doc, "");
  if (json_io::GetString(json_io::Field(doc, "format", ""), "/format") !=
      kFtmFormatTag) {
    json_io::SchemaError("/format", "unsupported FTM format");
  }
  FlowTableDelta delta;
  const Json& meta = json_io::Field(doc, "metadata", "");
  delta.model_hash = json_io::GetString(
      json_io::Field(meta, "model_hash", "/metadata"), "/metadata/model_hash");
  delta.policy_set_hash =
      json_io::GetString(json_io::Field(meta, "policy_set_hash", "/metadata"),
                         "/metadata/policy_set_hash");
  const Json& switches = json_io::Field(doc, "switches", "");
  json_io::ExpectObject(switches, "/switches");
  for (const auto& [switch_id, list] : switches.items()) {
    std::string path = "/switches/" + switch_id;
    json_io::ExpectArray(list, path);
    std::vector<FlowRule>& rules = delta.rules[switch_id];
    for (size_t i = 0; i < list.size(); ++i) {
      rules.push_back(
          json_io::RuleFromJson(list[i], path + "/" + std::to_string(i)));
    }
  }
  return delta;
}

}  // namespace sdnpolicy
