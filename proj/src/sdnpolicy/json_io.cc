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

#include "sdnpolicy/json_io.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdnpolicy/errors.h"

namespace sdnpolicy::json_io {

Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    size_t line = 1, column = 1;
    size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line
    // 1, column 2: " prefix; we print our own location.
    if (size_t colon = what.find(": "); colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    throw Error(ErrorKind::kSyntax, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + what);
  }
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

void SchemaError(const std::string& path, std::string_view what) {
  throw Error(ErrorKind::kSyntax, "at " + (path.empty() ? "/" : path) + ": " +
                                      std::string(what));
}

void ExpectObject(const Json& value, const std::string& path) {
  if (!value.is_object()) SchemaError(path, "expected an object");
}

void ExpectArray(const Json& value, const std::string& path) {
  if (!value.is_array()) SchemaError(path, "expected an array");
}

const Json& Field(const Json& obj, std::string_view key,
                  const std::string& path) {
  const Json* value = OptionalField(obj, key, path);
  if (value == nullptr) {
    SchemaError(path, "missing required field \"" + std::string(key) + "\"");
  }
  return *value;
}

const Json* OptionalField(const Json& obj, std::string_view key,
                          const std::string& path) {
  ExpectObject(obj, path);
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string GetString(const Json& value, const std::string& path) {
  if (!value.is_string()) SchemaError(path, "expected a string");
  return value.get<std::string>();
}

uint64_t GetUnsigned(const Json& value, const std::string& path,
                     uint64_t max_value) {
  if (!value.is_number_integer() ||
      (value.is_number_integer() && !value.is_number_unsigned() &&
       value.get<int64_t>() < 0)) {
    SchemaError(path, "expected a non-negative integer");
  }
  uint64_t v = value.get<uint64_t>();
  if (v > max_value) {
    SchemaError(path, "value " + std::to_string(v) + " exceeds maximum " +
                          std::to_string(max_value));
  }
  return v;
}

double GetNumber(const Json& value, const std::string& path) {
  if (!value.is_number()) SchemaError(path, "expected a number");
  return value.get<double>();
}

MacAddress GetMac(const Json& value, const std::string& path) {
  std::optional<MacAddress> mac = MacAddress::Parse(GetString(value, path));
  if (!mac.has_value()) SchemaError(path, "malformed MAC address");
  return *mac;
}

Ipv4Address GetIpv4(const Json& value, const std::string& path) {
  std::optional<Ipv4Address> ip = Ipv4Address::Parse(GetString(value, path));
  if (!ip.has_value()) SchemaError(path, "malformed IPv4 address");
  return *ip;
}

Json MatchToJson(const Match& match) {
  Json out = Json::object();
  if (match.in_port) out["in_port"] = *match.in_port;
  if (match.eth_src) out["eth_src"] = match.eth_src->ToString();
  if (match.eth_dst) out["eth_dst"] = match.eth_dst->ToString();
  if (match.ip_src) out["ip_src"] = match.ip_src->ToString();
  if (match.ip_dst) out["ip_dst"] = match.ip_dst->ToString();
  if (match.ip_proto) out["ip_proto"] = *match.ip_proto;
  if (match.tp_dst) out["tp_dst"] = *match.tp_dst;
  if (match.vlan) out["vlan"] = *match.vlan;
  return out;
}

Match MatchFromJson(const Json& value, const std::string& path) {
  ExpectObject(value, path);
  static constexpr std::string_view kKnown[] = {
      "in_port", "eth_src", "eth_dst", "ip_src",
      "ip_dst",  "ip_proto", "tp_dst", "vlan"};
  for (const auto& [key, unused] : value.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) ==
        std::end(kKnown)) {
      SchemaError(path, "unknown match field \"" + key + "\"");
    }
  }
  Match m;
  if (const Json* v = OptionalField(value, "in_port", path)) {
    m.in_port = static_cast<PortNo>(
        GetUnsigned(*v, path + "/in_port", UINT32_MAX));
  }
  if (const Json* v = OptionalField(value, "eth_src", path)) {
    m.eth_src = GetMac(*v, path + "/eth_src");
  }
  if (const Json* v = OptionalField(value, "eth_dst", path)) {
    m.eth_dst = GetMac(*v, path + "/eth_dst");
  }
  if (const Json* v = OptionalField(value, "ip_src", path)) {
    m.ip_src = GetIpv4(*v, path + "/ip_src");
  }
  if (const Json* v = OptionalField(value, "ip_dst", path)) {
    m.ip_dst = GetIpv4(*v, path + "/ip_dst");
  }
  if (const Json* v = OptionalField(value, "ip_proto", path)) {
    m.ip_proto = static_cast<uint8_t>(GetUnsigned(*v, path + "/ip_proto", 255));
  }
  if (const Json* v = OptionalField(value, "tp_dst", path)) {
    m.tp_dst =
        static_cast<uint16_t>(GetUnsigned(*v, path + "/tp_dst", 65535));
  }
  if (const Json* v = OptionalField(value, "vlan", path)) {
    m.vlan = static_cast<uint16_t>(GetUnsigned(*v, path + "/vlan", kMaxVlanId));
  }
  return m;
}

Json ActionToJson(const Action& action) {
  if (action.is_drop()) return Json{{"type", "drop"}};
  return Json{{"type", "forward"}, {"port", action.port}};
}

Action ActionFromJson(const Json& value, const std::string& path) {
  std::string type = GetString(Field(value, "type", path), path + "/type");
  if (type == "drop") return Action::Drop();
  if (type == "forward") {
    return Action::Forward(static_cast<PortNo>(
        GetUnsigned(Field(value, "port", path), path + "/port", UINT32_MAX)));
  }
  SchemaError(path + "/type", "expected \"forward\" or \"drop\"");
}

Json RuleToJson(const FlowRule& rule) {
  return Json{{"priority", rule.priority},
              {"match", MatchToJson(rule.match)},
              {"action", ActionToJson(rule.action)},
              {"provenance", rule.provenance}};
}

FlowRule RuleFromJson(const Json& value, const std::string& path) {
  FlowRule rule;
  rule.priority = static_cast<uint16_t>(
      GetUnsigned(Field(value, "priority", path), path + "/priority", 65535));
  if (const Json* m = OptionalField(value, "match", path)) {
    rule.match = MatchFromJson(*m, path + "/match");
  }
  rule.action = ActionFromJson(Field(value, "action", path), path + "/action");
  if (const Json* p = OptionalField(value, "provenance", path)) {
    rule.provenance = GetString(*p, path + "/provenance");
  } else {
    rule.provenance = std::string(kDefaultProvenance);
  }
  return rule;
}

}  // namespace sdnpolicy::json_io
