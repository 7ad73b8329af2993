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

// The end-to-end commands behind the command-line tool: load the model and
// policies, ground them, compile flow rules, install them, and verify.

#ifndef SDNPOLICY_PIPELINE_H_
#define SDNPOLICY_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace sdnpolicy {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

enum class OutputFormat { kMachine, kHuman, kBoth };

struct RunConfig {
  std::string model_path;
  std::string policy_path;
  std::string registry_path;  // empty: use the model document's registry
  std::string out_dir;
  std::string ftm_path;  // verify/simulate: install this FTM instead
  size_t state_budget = 1'000'000;
  uint64_t enum_cap = 100'000;
  OutputFormat format = OutputFormat::kBoth;
  bool with_oracle = false;
};

// Output file names under `RunConfig::out_dir`.
inline constexpr const char* kFtmMachineFile = "ftm.machine";
inline constexpr const char* kFtmHumanFile = "ftm.txt";
inline constexpr const char* kReportMachineFile = "report.machine";
inline constexpr const char* kReportHumanFile = "report.txt";

struct SimulateRequest {
  std::string src_terminal;
  // Destination addresses come from `dst_terminal` unless given explicitly.
  std::string dst_terminal;
  std::string eth_dst;
  std::string ip_dst;
  uint8_t ip_proto = 0;
  uint16_t tp_dst = 0;
  std::optional<uint16_t> vlan;
};

// Writes the FTM and a conflict report. 0 on success, 2 on input errors.
int CmdTransform(const RunConfig& config, std::ostream& out, std::ostream& err);

// Runs the whole pipeline and writes FTM and verification report. 0 when
// every condition holds, 1 on violations or inconclusive checks, 2 on input
// errors, 3 when checker and oracle disagree.
int CmdVerify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Walks one packet through the model (with policies or --ftm installed when
// given) and prints the trace. 0 delivered, 1 dropped or looped, 2 on input
// errors.
int CmdSimulate(const RunConfig& config, const SimulateRequest& request,
                std::ostream& out, std::ostream& err);

}  // namespace sdnpolicy

#endif  // SDNPOLICY_PIPELINE_H_
