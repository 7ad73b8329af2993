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

// Compiles grounded policy pairs into per-switch flow rules (the FTM) routed
// along shortest paths, and installs them into a model.

#ifndef SDNPOLICY_TRANSFORM_H_
#define SDNPOLICY_TRANSFORM_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sdnpolicy/policy.h"
#include "sdnpolicy/system_model.h"

namespace sdnpolicy {

// Deny rules outrank permit rules, which outrank the table-miss rule.
inline constexpr uint16_t kPermitPriority = 1000;
inline constexpr uint16_t kDenyPriority = 2000;

struct FlowTableDelta {
  // Rules to add, keyed by switch id; each list is in lookup order.
  std::map<std::string, std::vector<FlowRule>, std::less<>> rules;
  std::string policy_set_hash;
  std::string model_hash;

  size_t RuleCount() const;

  friend bool operator==(const FlowTableDelta&, const FlowTableDelta&) =
      default;
};

// Hash over the canonical rendering of `pairs`, order-sensitive.
std::string PolicySetHash(const std::vector<ConcretePair>& pairs);

// Permit pairs get forward rules on every hop of the shortest path and
// mirror-image reply rules (tp_dst wildcarded) along the shortest path in the
// opposite direction. Deny pairs get one drop rule at the source's ingress.
// Identical rules are emitted once, attributed to the smallest policy id.
// Throws kUnknownAttachment for pairs naming terminals absent from `model`.
FlowTableDelta Transform(const std::vector<ConcretePair>& pairs,
                         const SdnSystemModel& model);

// Returns the model with `delta` installed; `model` itself is unchanged.
// Throws kStaleDelta when the delta was generated against another model, and
// kDuplicateRule when a delta rule repeats an installed (priority, match).
SdnSystemModel Apply(const SdnSystemModel& model, const FlowTableDelta& delta);

enum class FtmFormat { kMachine, kHuman };

// Machine output is byte-stable: ExportFtm(ParseFtm(ExportFtm(d))) ==
// ExportFtm(d).
std::string ExportFtm(const FlowTableDelta& delta, FtmFormat format);
// Parses the machine format. Throws kSyntax.
FlowTableDelta ParseFtm(std::string_view document);

// One OpenFlow-style line for `rule`, without a trailing newline.
std::string RuleToText(std::string_view switch_id, const FlowRule& rule);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_TRANSFORM_H_
