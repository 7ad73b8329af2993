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

// Executable forwarding semantics of the system model: single-table rule
// lookup and the hop-by-hop packet walk used for debugging and as the
// verification oracle.

#ifndef SDNPOLICY_DATAPLANE_H_
#define SDNPOLICY_DATAPLANE_H_

#include <string>
#include <string_view>
#include <vector>

#include "sdnpolicy/system_model.h"

namespace sdnpolicy {

// Provenance strings the simulator reports for drops not caused by a rule.
inline constexpr std::string_view kAddressMismatch = "address-mismatch";
inline constexpr std::string_view kUnconnectedPort = "unconnected-port";

// Highest-precedence rule of `sw` covering (header, in_port). Never fails on a
// model that satisfies the table-miss invariant.
const FlowRule& MatchRule(const SdnSystemModel& model, const Switch& sw,
                          const PacketHeader& header, PortNo in_port);

struct Hop {
  std::string switch_id;
  PortNo in_port = 0;
  uint16_t priority = 0;
  Action action;
  std::string provenance;  // of the matched rule

  friend bool operator==(const Hop&, const Hop&) = default;
};

struct SimOutcome {
  enum class Kind { kDelivered, kDropped, kLoop };

  Kind kind = Kind::kDropped;
  std::string terminal_id;  // kDelivered
  std::string switch_id;    // kDropped: where
  std::string provenance;   // kDropped: why
  std::vector<Hop> trace;

  std::string ToString() const;

  friend bool operator==(const SimOutcome&, const SimOutcome&) = default;
};

// Injects `header` at the source terminal's attachment point and follows the
// flow tables until delivery, a drop, or a revisited (switch, in_port).
// Throws kUnknownTerminal, or kInvalidArgument when the header's source
// addresses are not the terminal's.
SimOutcome Simulate(const SdnSystemModel& model, std::string_view src_terminal,
                    const PacketHeader& header);

// Upper bound on trace length: one hop per (switch, port) state, plus one.
size_t HopBound(const SdnSystemModel& model);

std::string HeaderToString(const PacketHeader& header);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_DATAPLANE_H_
