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

// Symbolic security policies and the bindings that ground them.
//
// A policy says whether a subject may reach an object over a service, using
// only symbolic names. The `BindingRegistry` maps those names onto terminal
// sets and (protocol, destination port) tuples; `Resolve` expands every policy
// into concrete terminal pairs.

#ifndef SDNPOLICY_POLICY_H_
#define SDNPOLICY_POLICY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdnpolicy/system_model.h"

namespace sdnpolicy {

// Reserved service name that binds to every protocol and port.
inline constexpr std::string_view kAnyService = "Any";

enum class PolicyAction { kPermit, kDeny };

std::string_view PolicyActionName(PolicyAction action);

struct SecurityPolicy {
  std::string id;
  std::string subject;
  std::string object;
  std::string service;  // a bound service name or kAnyService
  PolicyAction action = PolicyAction::kPermit;

  friend bool operator==(const SecurityPolicy&, const SecurityPolicy&) =
      default;
};

// (ip_proto, tp_dst); nullopt is a wildcard. Source ports are never bound.
struct ServiceBinding {
  std::optional<uint8_t> ip_proto;
  std::optional<uint16_t> tp_dst;

  friend bool operator==(const ServiceBinding&, const ServiceBinding&) =
      default;
};

struct BindingRegistry {
  std::map<std::string, std::vector<std::string>, std::less<>> principals;
  std::map<std::string, ServiceBinding, std::less<>> services;

  // kAnyService resolves to the full wildcard even when not listed.
  std::optional<ServiceBinding> FindService(std::string_view name) const;

  friend bool operator==(const BindingRegistry&, const BindingRegistry&) =
      default;
};

// One policy grounded to a (source terminal, destination terminal) pair.
struct ConcretePair {
  std::string src;
  std::string dst;
  std::optional<uint8_t> ip_proto;
  std::optional<uint16_t> tp_dst;
  PolicyAction action = PolicyAction::kPermit;
  std::string policy_id;

  friend bool operator==(const ConcretePair&, const ConcretePair&) = default;
};

struct Conflict {
  std::string src;
  std::string dst;
  std::string permit_policy;
  std::string deny_policy;

  friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

// True when `token` reads as an IPv4, MAC, VLAN or port literal.
bool IsNetworkLiteral(std::string_view token);

// Parses a policy document: either {"policies": [...]} or a bare array.
// Whitespace-only input is the empty policy set. Throws kSyntax, or
// kUnderlyingLeak naming the policy and offending token.
std::vector<SecurityPolicy> ParsePolicies(std::string_view document);

// Parses a registry document. Accepts a standalone registry object or any
// document carrying a "registry" section (e.g. a model document). Throws
// kSyntax; kInvalidArgument when the document has no registry at all.
BindingRegistry ParseRegistry(std::string_view document);

// True when `document` is an object with a "registry" section.
bool HasEmbeddedRegistry(std::string_view document);

// Output order: policy order, then (src, dst) lexicographically; self-pairs
// are skipped. Throws kUnknownSymbol or kDanglingTerminal.
std::vector<ConcretePair> Resolve(const std::vector<SecurityPolicy>& policies,
                                  const BindingRegistry& registry,
                                  const SdnSystemModel& model);

// Every (src, dst) carrying overlapping Permit and Deny service tuples.
// Sorted and free of duplicates.
std::vector<Conflict> CheckConflicts(const std::vector<ConcretePair>& pairs);

// True when the two service tuples share at least one concrete
// (protocol, port).
bool ServicesOverlap(const ConcretePair& a, const ConcretePair& b);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_POLICY_H_
