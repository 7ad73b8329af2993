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

#include "sdnpolicy/policy.h"

#include <algorithm>
#include <regex>
#include <set>
#include <tuple>

#include "sdnpolicy/errors.h"
#include "sdnpolicy/json_io.h"

namespace sdnpolicy {
namespace {

using json_io::Json;

bool IsBlank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

PolicyAction ParseAction(const std::string& text, const std::string& path) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "permit") return PolicyAction::kPermit;
  if (lower == "deny") return PolicyAction::kDeny;
  json_io::SchemaError(path, "expected \"permit\" or \"deny\"");
}

void CheckLeak(const SecurityPolicy& policy, std::string_view field,
               const std::string& value) {
  std::vector<std::string> tokens{value};
  size_t start = 0;
  while (start < value.size()) {
    size_t end = value.find_first_of(" \t\n", start);
    if (end == std::string::npos) end = value.size();
    if (end > start) tokens.push_back(value.substr(start, end - start));
    start = end + 1;
  }
  for (const std::string& token : tokens) {
    if (IsNetworkLiteral(token)) {
      throw Error(ErrorKind::kUnderlyingLeak,
                  "policy \"" + policy.id + "\": underlying network literal \"" +
                      token + "\" in " + std::string(field));
    }
  }
}

SecurityPolicy PolicyFromJson(const Json& pj, const std::string& path) {
  json_io::ExpectObject(pj, path);
  for (const auto& [key, unused] : pj.items()) {
    if (key != "id" && key != "subject" && key != "object" &&
        key != "service" && key != "action") {
      json_io::SchemaError(path, "unknown policy field \"" + key + "\"");
    }
  }
  SecurityPolicy p;
  p.id = json_io::GetString(json_io::Field(pj, "id", path), path + "/id");
  if (p.id.empty()) json_io::SchemaError(path + "/id", "empty policy id");
  p.subject = json_io::GetString(json_io::Field(pj, "subject", path),
                                 path + "/subject");
  p.object =
      json_io::GetString(json_io::Field(pj, "object", path), path + "/object");
  if (const Json* s = json_io::OptionalField(pj, "service", path)) {
    p.service = json_io::GetString(*s, path + "/service");
  } else {
    p.service = std::string(kAnyService);
  }
  p.action = ParseAction(
      json_io::GetString(json_io::Field(pj, "action", path), path + "/action"),
      path + "/action");
  for (const auto& [field, value] :
       {std::pair{"subject", &p.subject}, std::pair{"object", &p.object},
        std::pair{"service", &p.service}}) {
    if (value->empty()) {
      json_io::SchemaError(path + "/" + field, "empty symbolic name");
    }
    CheckLeak(p, field, *value);
  }
  return p;
}

BindingRegistry RegistryFromJson(const Json& rj, const std::string& path) {
  json_io::ExpectObject(rj, path);
  BindingRegistry registry;
  if (const Json* principals = json_io::OptionalField(rj, "principals", path)) {
    json_io::ExpectObject(*principals, path + "/principals");
    for (const auto& [name, members] : principals->items()) {
      std::string mpath = path + "/principals/" + name;
      json_io::ExpectArray(members, mpath);
      if (members.empty()) json_io::SchemaError(mpath, "empty terminal set");
      std::set<std::string> ids;
      for (size_t i = 0; i < members.size(); ++i) {
        ids.insert(json_io::GetString(members[i], mpath + "/" +
                                                      std::to_string(i)));
      }
      registry.principals[name] = {ids.begin(), ids.end()};
    }
  }
  if (const Json* services = json_io::OptionalField(rj, "services", path)) {
    json_io::ExpectObject(*services, path + "/services");
    for (const auto& [name, sj] : services->items()) {
      std::string spath = path + "/services/" + name;
      ServiceBinding binding;
      if (const Json* proto = json_io::OptionalField(sj, "proto", spath)) {
        binding.ip_proto = static_cast<uint8_t>(
            json_io::GetUnsigned(*proto, spath + "/proto", 255));
      }
      if (const Json* port = json_io::OptionalField(sj, "port", spath)) {
        binding.tp_dst = static_cast<uint16_t>(
            json_io::GetUnsigned(*port, spath + "/port", 65535));
      }
      registry.services[name] = binding;
    }
  }
  return registry;
}

bool FieldOverlap(const auto& a, const auto& b) {
  return !a.has_value() || !b.has_value() || *a == *b;
}

}  // namespace

std::string_view PolicyActionName(PolicyAction action) {
  return action == PolicyAction::kPermit ? "permit" : "deny";
}

std::optional<ServiceBinding> BindingRegistry::FindService(
    std::string_view name) const {
  if (name == kAnyService) return ServiceBinding{};
  auto it = services.find(name);
  if (it == services.end()) return std::nullopt;
  return it->second;
}

bool IsNetworkLiteral(std::string_view token) {
  static const std::regex kIpv4(R"(\d{1,3}(\.\d{1,3}){3}(/\d{1,2})?(:\d+)?)");
  static const std::regex kMac(
      R"([0-9A-Fa-f]{1,2}([:-][0-9A-Fa-f]{1,2}){5}|[0-9A-Fa-f]{4}(\.[0-9A-Fa-f]{4}){2})");
  static const std::regex kVlan(R"(vlan[-_:=/]?\d+)", std::regex::icase);
  static const std::regex kPort(R"(\d+|:\d+|(tcp|udp|port)[-_:=/]?\d+)",
                                std::regex::icase);
  std::string s(token);
  return std::regex_match(s, kIpv4) || std::regex_match(s, kMac) ||
         std::regex_match(s, kVlan) || std::regex_match(s, kPort);
}

std::vector<SecurityPolicy> ParsePolicies(std::string_view document) {
  if (IsBlank(document)) return {};
  Json doc = json_io::Parse(document);
  const Json* list = &doc;
  std::string base;
  if (doc.is_object()) {
    list = &json_io::Field(doc, "policies", "");
    base = "/policies";
  }
  json_io::ExpectArray(*list, base);

  std::vector<SecurityPolicy> out;
  std::set<std::string> ids;
  for (size_t i = 0; i < list->size(); ++i) {
    std::string path = base + "/" + std::to_string(i);
    SecurityPolicy p = PolicyFromJson((*list)[i], path);
    if (!ids.insert(p.id).second) {
      json_io::SchemaError(path + "/id", "duplicate policy id \"" + p.id + "\"");
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool HasEmbeddedRegistry(std::string_view document) {
  Json doc = json_io::Parse(document);
  return doc.is_object() && doc.contains("registry");
}

BindingRegistry ParseRegistry(std::string_view document) {
  Json doc = json_io::Parse(document);
  json_io::ExpectObject(doc, "");
  if (const Json* embedded = json_io::OptionalField(doc, "registry", "")) {
    return RegistryFromJson(*embedded, "/registry");
  }
  if (!doc.contains("principals") && !doc.contains("services")) {
    throw Error(ErrorKind::kInvalidArgument,
                "document carries no binding registry");
  }
  return RegistryFromJson(doc, "");
}

std::vector<ConcretePair> Resolve(const std::vector<SecurityPolicy>& policies,
                                  const BindingRegistry& registry,
                                  const SdnSystemModel& model) {
  auto principal = [&](const SecurityPolicy& p, const std::string& name) {
    auto it = registry.principals.find(name);
    if (it == registry.principals.end()) {
      throw Error(ErrorKind::kUnknownSymbol, "policy \"" + p.id +
                                                 "\": unbound symbol \"" +
                                                 name + "\"");
    }
    for (const std::string& id : it->second) {
      if (model.FindTerminal(id) == nullptr) {
        throw Error(ErrorKind::kDanglingTerminal,
                    "binding \"" + name + "\" references unknown terminal \"" +
                        id + "\"");
      }
    }
    std::vector<std::string> ids = it->second;
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  std::vector<ConcretePair> out;
  for (const SecurityPolicy& p : policies) {
    std::vector<std::string> subjects = principal(p, p.subject);
    std::vector<std::string> objects = principal(p, p.object);
    std::optional<ServiceBinding> service = registry.FindService(p.service);
    if (!service.has_value()) {
      throw Error(ErrorKind::kUnknownSymbol, "policy \"" + p.id +
                                                 "\": unbound symbol \"" +
                                                 p.service + "\"");
    }
    for (const std::string& src : subjects) {
      for (const std::string& dst : objects) {
        if (src == dst) continue;
        out.push_back(ConcretePair{src, dst, service->ip_proto,
                                   service->tp_dst, p.action, p.id});
      }
    }
  }
  return out;
}

bool ServicesOverlap(const ConcretePair& a, const ConcretePair& b) {
  return FieldOverlap(a.ip_proto, b.ip_proto) &&
         FieldOverlap(a.tp_dst, b.tp_dst);
}

std::vector<Conflict> CheckConflicts(const std::vector<ConcretePair>& pairs) {
  std::map<std::pair<std::string, std::string>, std::vector<const ConcretePair*>>
      by_endpoints;
  for (const ConcretePair& pair : pairs) {
    by_endpoints[{pair.src, pair.dst}].push_back(&pair);
  }
  std::set<Conflict> found;
  for (const auto& [endpoints, group] : by_endpoints) {
    for (const ConcretePair* permit : group) {
      if (permit->action != PolicyAction::kPermit) continue;
      for (const ConcretePair* deny : group) {
        if (deny->action != PolicyAction::kDeny) continue;
        if (ServicesOverlap(*permit, *deny)) {
          found.insert(Conflict{permit->src, permit->dst, permit->policy_id,
                                deny->policy_id});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace sdnpolicy
