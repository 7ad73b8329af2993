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

// Verification of an updated model against the reachability properties the
// policies demand.
//
// Each grounded policy pair becomes a validation condition (VC): "traffic
// from src to dst with this service is (un)reachable". `ModelCheck` decides a
// VC by explicit-state breadth-first search over (header class, switch,
// in_port) states, where header classes partition the header space by the
// concrete values the installed rules and terminals mention. `OracleCheck`
// decides the same VC by enumerating concrete headers and running
// `Simulate`; the two must always agree.

#ifndef SDNPOLICY_VERIFIER_H_
#define SDNPOLICY_VERIFIER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdnpolicy/dataplane.h"
#include "sdnpolicy/policy.h"
#include "sdnpolicy/system_model.h"

namespace sdnpolicy {

enum class Expectation { kReachable, kUnreachable };

struct ValidationCondition {
  std::string id;  // "vc-<ordinal>", ordinals start at 1
  size_t ordinal = 0;
  std::string src;
  std::string dst;
  std::optional<uint8_t> ip_proto;
  std::optional<uint16_t> tp_dst;
  Expectation expected = Expectation::kReachable;
  std::string provenance;

  friend bool operator==(const ValidationCondition&,
                         const ValidationCondition&) = default;
};

std::vector<ValidationCondition> CompileVcs(
    const std::vector<ConcretePair>& pairs);

enum class VerdictResult { kHolds, kViolated, kInconclusive };

std::string_view VerdictResultName(VerdictResult result);

inline constexpr std::string_view kNoDeliveringClass =
    "no delivering header class exists";

struct Counterexample {
  PacketHeader header;
  SimOutcome outcome;
};

struct Verdict {
  std::string vc_id;
  VerdictResult result = VerdictResult::kHolds;
  // Violated reachability: kNoDeliveringClass. Inconclusive: the reason.
  std::string statement;
  // Violated unreachability: a delivered header and its replayed walk.
  std::optional<Counterexample> counterexample;
  size_t states_visited = 0;
  uint64_t header_classes = 0;
};

struct CheckOptions {
  size_t state_budget = 1'000'000;
  uint64_t enum_cap = 100'000;
};

// The finite partition of header space used by `ModelCheck`. For every header
// field the atoms are the distinct concrete values mentioned by an installed
// rule, a terminal, or the VC, plus one representative "other" value standing
// for every remaining value of the field's domain.
class HeaderClassSpace {
 public:
  enum Field { kEthSrc, kEthDst, kIpSrc, kIpDst, kIpProto, kTpDst, kVlan };
  static constexpr size_t kFieldCount = 7;
  // Encodes an untagged packet in the vlan field.
  static constexpr uint64_t kUntagged = kMaxVlanId + 1;

  using HeaderClass = std::array<uint32_t, kFieldCount>;

  static HeaderClassSpace Build(const SdnSystemModel& model,
                                const ValidationCondition* vc = nullptr);

  // Sorted atom values; the "other" representative, when the domain has
  // values left over, is among them at `OtherIndex`.
  const std::vector<uint64_t>& Atoms(Field field) const {
    return atoms_[field];
  }
  std::optional<uint32_t> OtherIndex(Field field) const {
    return other_[field];
  }
  // Atom index of a concrete field value.
  uint32_t AtomOf(Field field, uint64_t value) const;

  // Product of per-field atom counts, saturating at UINT64_MAX.
  uint64_t ClassCount() const;
  HeaderClass Classify(const PacketHeader& header) const;
  PacketHeader Representative(const HeaderClass& cls) const;

  static uint64_t FieldValue(const PacketHeader& header, Field field);

 private:
  std::array<std::vector<uint64_t>, kFieldCount> atoms_;
  std::array<std::optional<uint32_t>, kFieldCount> other_;
};

// Throws kStateBudgetExceeded when more than `options.state_budget` states
// would be visited, and kUnknownTerminal for VCs naming absent terminals.
Verdict ModelCheck(const SdnSystemModel& rsdn, const ValidationCondition& vc,
                   const CheckOptions& options = {});

// Number of concrete headers `OracleCheck` would simulate for `vc`.
uint64_t OracleUniverseSize(const SdnSystemModel& rsdn,
                            const ValidationCondition& vc);

// Throws kUniverseTooLarge when the universe exceeds `options.enum_cap`.
Verdict OracleCheck(const SdnSystemModel& rsdn, const ValidationCondition& vc,
                    const CheckOptions& options = {});

struct VerifyOptions {
  CheckOptions check;
  bool with_oracle = false;
};

struct VcReport {
  ValidationCondition vc;
  Verdict verdict;
  // Present only when the oracle ran; Inconclusive when its universe was too
  // large.
  std::optional<Verdict> oracle;
  // Ids of policies conflicting with this VC's policy on the same pair.
  std::vector<std::string> conflicts_with;
};

struct Report {
  enum class Status { kAllHold, kViolationsFound };

  std::vector<VcReport> results;  // sorted by VC ordinal
  std::vector<Conflict> conflicts;
  size_t holds = 0;
  size_t violated = 0;
  size_t inconclusive = 0;
  size_t oracle_disagreements = 0;
  double wall_seconds = 0;

  Status status() const {
    return violated == 0 && inconclusive == 0 ? Status::kAllHold
                                              : Status::kViolationsFound;
  }
};

// Checks every VC. Budget overruns become Inconclusive verdicts. With the
// oracle enabled, an oracle verdict that contradicts the checker is counted
// in `oracle_disagreements`; an oversized oracle universe makes the VC
// Inconclusive.
Report VerifyAll(const SdnSystemModel& rsdn,
                 const std::vector<ValidationCondition>& vcs,
                 const VerifyOptions& options = {});

// Records `conflicts` in the report and cross-references affected VCs.
void AnnotateConflicts(Report& report, const std::vector<Conflict>& conflicts);

// Machine format omits timings so repeated runs are byte-identical.
std::string ExportReportMachine(const Report& report);
std::string ExportReportHuman(const Report& report);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_VERIFIER_H_
