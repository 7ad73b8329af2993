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

#include "sdnpolicy/dataplane.h"

#include <set>
#include <utility>

#include "sdnpolicy/errors.h"

namespace sdnpolicy {

const FlowRule& MatchRule(const SdnSystemModel& model, const Switch& sw,
                          const PacketHeader& header, PortNo in_port) {
  for (size_t idx : model.LookupOrder(sw.id)) {
    const FlowRule& rule = sw.table[idx];
    if (rule.match.Covers(header, in_port)) return rule;
  }
  throw Error(ErrorKind::kInternal,
              "switch \"" + sw.id + "\" has no table-miss rule");
}

size_t HopBound(const SdnSystemModel& model) { return model.PortCount() + 1; }

SimOutcome Simulate(const SdnSystemModel& model, std::string_view src_terminal,
                    const PacketHeader& header) {
  const Terminal* src = model.FindTerminal(src_terminal);
  if (src == nullptr) {
    throw Error(ErrorKind::kUnknownTerminal,
                "unknown terminal \"" + std::string(src_terminal) + "\"");
  }
  if (header.eth_src != src->mac || header.ip_src != src->ip) {
    throw Error(ErrorKind::kInvalidArgument,
                "header source addresses do not belong to terminal \"" +
                    src->id + "\"");
  }

  SimOutcome out;
  std::set<std::pair<std::string, PortNo>> visited;
  SwitchPort at = src->attachment;
  while (true) {
    if (!visited.emplace(at.switch_id, at.port).second) {
      out.kind = SimOutcome::Kind::kLoop;
      return out;
    }
    const Switch* sw = model.FindSwitch(at.switch_id);
    const FlowRule& rule = MatchRule(model, *sw, header, at.port);
    out.trace.push_back(
        Hop{sw->id, at.port, rule.priority, rule.action, rule.provenance});

    if (rule.action.is_drop()) {
      out.kind = SimOutcome::Kind::kDropped;
      out.switch_id = sw->id;
      out.provenance = rule.provenance;
      return out;
    }
    const PortBinding* egress = model.FindPort(sw->id, rule.action.port);
    switch (egress->kind) {
      case PortBinding::Kind::kLink:
        at = egress->peer;
        break;
      case PortBinding::Kind::kTerminal: {
        const Terminal* t = model.FindTerminal(egress->terminal_id);
        if (t->mac == header.eth_dst && t->ip == header.ip_dst) {
          out.kind = SimOutcome::Kind::kDelivered;
          out.terminal_id = t->id;
        } else {
          out.kind = SimOutcome::Kind::kDropped;
          out.switch_id = sw->id;
          out.provenance = std::string(kAddressMismatch);
        }
        return out;
      }
      case PortBinding::Kind::kUnconnected:
        out.kind = SimOutcome::Kind::kDropped;
        out.switch_id = sw->id;
        out.provenance = std::string(kUnconnectedPort);
        return out;
    }
  }
}

std::string SimOutcome::ToString() const {
  switch (kind) {
    case Kind::kDelivered:
      return "delivered to " + terminal_id + " after " +
             std::to_string(trace.size()) + " hop(s)";
    case Kind::kDropped:
      return "dropped at " + switch_id + " (" + provenance + ") after " +
             std::to_string(trace.size()) + " hop(s)";
    case Kind::kLoop:
      return "forwarding loop after " + std::to_string(trace.size()) +
             " hop(s)";
  }
  return "";
}

std::string HeaderToString(const PacketHeader& h) {
  std::string out = "eth_src=" + h.eth_src.ToString() +
                    " eth_dst=" + h.eth_dst.ToString() +
                    " ip_src=" + h.ip_src.ToString() +
                    " ip_dst=" + h.ip_dst.ToString() +
                    " ip_proto=" + std::to_string(h.ip_proto) +
                    " tp_dst=" + std::to_string(h.tp_dst);
  out += h.vlan ? " vlan=" + std::to_string(*h.vlan) : " vlan=none";
  return out;
}

}  // namespace sdnpolicy
