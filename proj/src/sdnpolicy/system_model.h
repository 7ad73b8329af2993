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

// The SDN system model: terminals, OpenFlow switches with their flow tables,
// and the inter-switch topology. A constructed `SdnSystemModel` is immutable
// and cheap to copy; "modifying" a model means building a new one from an
// edited `ModelSpec`.

#ifndef SDNPOLICY_SYSTEM_MODEL_H_
#define SDNPOLICY_SYSTEM_MODEL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdnpolicy/addresses.h"
#include "sdnpolicy/errors.h"

namespace sdnpolicy {

using PortNo = uint32_t;

inline constexpr uint16_t kMissPriority = 0;
inline constexpr std::string_view kDefaultProvenance = "default";

struct SwitchPort {
  std::string switch_id;
  PortNo port = 0;

  friend auto operator<=>(const SwitchPort&, const SwitchPort&) = default;
};

struct Terminal {
  std::string id;
  MacAddress mac;
  Ipv4Address ip;
  std::optional<uint16_t> vlan;
  SwitchPort attachment;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

// A concrete packet header. Headers are never rewritten in flight.
struct PacketHeader {
  MacAddress eth_src;
  MacAddress eth_dst;
  Ipv4Address ip_src;
  Ipv4Address ip_dst;
  uint8_t ip_proto = 0;
  uint16_t tp_dst = 0;
  std::optional<uint16_t> vlan;

  friend bool operator==(const PacketHeader&, const PacketHeader&) = default;
};

// Each field is either a concrete value or a wildcard (nullopt). A concrete
// `vlan` never matches an untagged packet.
struct Match {
  std::optional<PortNo> in_port;
  std::optional<MacAddress> eth_src;
  std::optional<MacAddress> eth_dst;
  std::optional<Ipv4Address> ip_src;
  std::optional<Ipv4Address> ip_dst;
  std::optional<uint8_t> ip_proto;
  std::optional<uint16_t> tp_dst;
  std::optional<uint16_t> vlan;

  bool IsAllWildcard() const { return Specificity() == 0; }
  // Number of concrete (non-wildcard) fields.
  int Specificity() const;
  bool Covers(const PacketHeader& header, PortNo port) const;
  // Canonical "field=value,..." text over concrete fields in fixed field
  // order; empty for the all-wildcard match. Used for tie-breaking, dedup
  // and hashing.
  std::string Serialize() const;

  friend bool operator==(const Match&, const Match&) = default;
};

struct Action {
  enum class Type { kForward, kDrop };

  Type type = Type::kDrop;
  PortNo port = 0;  // Meaningful only for kForward.

  static Action Forward(PortNo port) { return {Type::kForward, port}; }
  static Action Drop() { return {Type::kDrop, 0}; }
  bool is_drop() const { return type == Type::kDrop; }
  std::string ToString() const;

  friend bool operator==(const Action&, const Action&) = default;
};

struct FlowRule {
  Match match;
  uint16_t priority = 0;
  Action action;
  std::string provenance;

  friend bool operator==(const FlowRule&, const FlowRule&) = default;
};

// Strict weak ordering used by table lookup: higher priority first, then more
// concrete fields, then the lexicographically smaller serialized match.
bool LookupPrecedes(const FlowRule& a, const FlowRule& b);

FlowRule TableMissRule();

struct Switch {
  std::string id;
  uint64_t dpid = 0;
  std::vector<PortNo> ports;
  std::vector<FlowRule> table;

  bool HasPort(PortNo port) const;

  friend bool operator==(const Switch&, const Switch&) = default;
};

struct Link {
  SwitchPort a;
  SwitchPort b;
  double cost = 1.0;

  friend bool operator==(const Link&, const Link&) = default;
};

// Unvalidated model contents. `SdnSystemModel::Create` is the only way to
// turn one into a model.
struct ModelSpec {
  std::vector<Terminal> terminals;
  std::vector<Switch> switches;
  std::vector<Link> links;

  Switch* MutableSwitch(std::string_view id);

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// What sits behind a switch port.
struct PortBinding {
  enum class Kind { kUnconnected, kTerminal, kLink };

  Kind kind = Kind::kUnconnected;
  std::string terminal_id;  // kTerminal
  SwitchPort peer;          // kLink
  double cost = 0;          // kLink
};

class SdnSystemModel {
 public:
  // Validates every model invariant. Throws `Error` with kind
  // kInvariantViolation or kDisconnectedTopology. Switch tables that carry no
  // table-miss rule get the default priority-0 Drop rule appended.
  static SdnSystemModel Create(ModelSpec spec);

  const ModelSpec& spec() const { return state_->spec; }
  const std::vector<Terminal>& terminals() const { return spec().terminals; }
  const std::vector<Switch>& switches() const { return spec().switches; }
  const std::vector<Link>& links() const { return spec().links; }

  // Lookups return nullptr when absent.
  const Terminal* FindTerminal(std::string_view id) const;
  const Switch* FindSwitch(std::string_view id) const;
  const PortBinding* FindPort(std::string_view switch_id, PortNo port) const;
  const Terminal* TerminalByIp(Ipv4Address ip) const;

  // Rule indices of the switch's table in lookup order (see
  // `LookupPrecedes`). Requires an existing switch.
  const std::vector<size_t>& LookupOrder(std::string_view switch_id) const;

  // Total number of (switch, port) pairs.
  size_t PortCount() const { return state_->port_count; }
  size_t MaxPortsPerSwitch() const { return state_->max_ports; }

  // Canonical JSON text of the model: entities sorted by id, tables in lookup
  // order, so document ordering does not affect it.
  std::string CanonicalText() const;
  // Stable 64-bit FNV-1a hash of `CanonicalText`, as 16 hex digits.
  std::string Hash() const;

  friend bool operator==(const SdnSystemModel& a, const SdnSystemModel& b) {
    return a.spec() == b.spec();
  }

 private:
  struct State {
    ModelSpec spec;
    std::map<std::string, size_t, std::less<>> terminal_index;
    std::map<std::string, size_t, std::less<>> switch_index;
    std::map<std::pair<std::string, PortNo>, PortBinding, std::less<>> ports;
    std::map<uint32_t, size_t> terminal_by_ip;
    std::vector<std::vector<size_t>> lookup_order;  // by switch index
    size_t port_count = 0;
    size_t max_ports = 0;
  };

  explicit SdnSystemModel(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  std::shared_ptr<const State> state_;
};

// Raised by `SdnSystemModel::Create` when the switch graph has more than one
// connected component. Components are sorted, as are the ids inside each.
class DisconnectedTopologyError : public Error {
 public:
  explicit DisconnectedTopologyError(
      std::vector<std::vector<std::string>> components);

  const std::vector<std::vector<std::string>>& components() const {
    return components_;
  }

 private:
  std::vector<std::vector<std::string>> components_;
};

// Parses a model document (see docs/model-format.md). Throws `Error` with kind
// kSyntax for malformed text or schema errors, or whatever `Create` throws.
SdnSystemModel LoadModel(std::string_view document);

// 64-bit FNV-1a over `bytes`, rendered as 16 lowercase hex digits.
std::string StableHash(std::string_view bytes);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_SYSTEM_MODEL_H_
