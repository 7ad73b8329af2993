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

#include "sdnpolicy/pipeline.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "sdnpolicy/dataplane.h"
#include "sdnpolicy/errors.h"
#include "sdnpolicy/json_io.h"
#include "sdnpolicy/policy.h"
#include "sdnpolicy/system_model.h"
#include "sdnpolicy/transform.h"
#include "sdnpolicy/verifier.h"

namespace sdnpolicy {
namespace {

// An `Error` tagged with the input file it came from.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& file, const Error& cause)
      : std::runtime_error(file + ": " + std::string(ErrorKindName(cause.kind())) +
                           ": " + cause.what()),
        kind_(cause.kind()) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path, Error(ErrorKind::kIo, "cannot open file for reading"));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) {
    throw InputError(path.string(),
                     Error(ErrorKind::kIo, "cannot write output file"));
  }
}

template <typename Fn>
auto FromFile(const std::string& path, const std::string& text, Fn&& fn) {
  try {
    return fn(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInternal) throw;
    throw InputError(path, e);
  }
}

struct Inputs {
  SdnSystemModel model;
  std::vector<ConcretePair> pairs;
  std::vector<Conflict> conflicts;
};

SdnSystemModel LoadModelFile(const std::string& path) {
  std::string text = ReadFile(path);
  return FromFile(path, text, [](const std::string& t) { return LoadModel(t); });
}

Inputs LoadInputs(const RunConfig& config) {
  if (config.model_path.empty()) {
    throw InputError("<config>",
                     Error(ErrorKind::kInvalidArgument, "--model is required"));
  }
  if (config.policy_path.empty()) {
    throw InputError("<config>", Error(ErrorKind::kInvalidArgument,
                                       "--policies is required"));
  }
  std::string model_text = ReadFile(config.model_path);
  SdnSystemModel model = FromFile(config.model_path, model_text,
                                  [](const std::string& t) { return LoadModel(t); });

  std::string policy_text = ReadFile(config.policy_path);
  std::vector<SecurityPolicy> policies =
      FromFile(config.policy_path, policy_text,
               [](const std::string& t) { return ParsePolicies(t); });

  std::string registry_path =
      config.registry_path.empty() ? config.model_path : config.registry_path;
  std::string registry_text =
      config.registry_path.empty() ? model_text : ReadFile(registry_path);
  BindingRegistry registry =
      FromFile(registry_path, registry_text,
               [](const std::string& t) { return ParseRegistry(t); });

  std::vector<ConcretePair> pairs =
      FromFile(config.policy_path, policy_text, [&](const std::string&) {
        return Resolve(policies, registry, model);
      });
  std::vector<Conflict> conflicts = CheckConflicts(pairs);
  return Inputs{std::move(model), std::move(pairs), std::move(conflicts)};
}

FlowTableDelta DeltaFor(const RunConfig& config, const Inputs& inputs) {
  if (config.ftm_path.empty()) return Transform(inputs.pairs, inputs.model);
  std::string text = ReadFile(config.ftm_path);
  return FromFile(config.ftm_path, text,
                  [](const std::string& t) { return ParseFtm(t); });
}

SdnSystemModel ApplyDelta(const RunConfig& config, const SdnSystemModel& model,
                          const FlowTableDelta& delta) {
  std::string source = config.ftm_path.empty() ? "<generated ftm>"
                                               : config.ftm_path;
  try {
    return Apply(model, delta);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInternal) throw;
    throw InputError(source, e);
  }
}

std::filesystem::path PrepareOutDir(const RunConfig& config) {
  if (config.out_dir.empty()) {
    throw InputError("<config>",
                     Error(ErrorKind::kInvalidArgument, "--out is required"));
  }
  std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw InputError(config.out_dir,
                     Error(ErrorKind::kIo, "cannot create output directory"));
  }
  return dir;
}

bool WantMachine(const RunConfig& c) { return c.format != OutputFormat::kHuman; }
bool WantHuman(const RunConfig& c) { return c.format != OutputFormat::kMachine; }

void WriteFtm(const RunConfig& config, const std::filesystem::path& dir,
              const FlowTableDelta& delta) {
  if (WantMachine(config)) {
    WriteFile(dir / kFtmMachineFile, ExportFtm(delta, FtmFormat::kMachine));
  }
  if (WantHuman(config)) {
    WriteFile(dir / kFtmHumanFile, ExportFtm(delta, FtmFormat::kHuman));
  }
}

// Runs `body`, mapping failures onto exit statuses.
template <typename Fn>
int Guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::kInternal ? kExitInternalError
                                            : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace

int CmdTransform(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  return Guarded(err, [&] {
    Inputs inputs = LoadInputs(config);
    std::filesystem::path dir = PrepareOutDir(config);
    FlowTableDelta delta = Transform(inputs.pairs, inputs.model);
    WriteFtm(config, dir, delta);

    json_io::Json conflicts = json_io::Json::array();
    std::string text;
    for (const Conflict& c : inputs.conflicts) {
      conflicts.push_back(json_io::Json{{"src", c.src},
                                        {"dst", c.dst},
                                        {"permit", c.permit_policy},
                                        {"deny", c.deny_policy}});
      text += "conflict: " + c.src + " -> " + c.dst + " permit " +
              c.permit_policy + " vs deny " + c.deny_policy + "\n";
    }
    text += std::to_string(inputs.pairs.size()) + " pair(s), " +
            std::to_string(delta.RuleCount()) + " rule(s), " +
            std::to_string(inputs.conflicts.size()) + " conflict(s)\n";
    if (WantMachine(config)) {
      WriteFile(dir / kReportMachineFile,
                json_io::Dump(json_io::Json{
                    {"format", "sdnpolicy-transform-report/1"},
                    {"pairs", inputs.pairs.size()},
                    {"rules", delta.RuleCount()},
                    {"conflicts", std::move(conflicts)}}));
    }
    if (WantHuman(config)) WriteFile(dir / kReportHumanFile, text);
    out << text;
    return kExitOk;
  });
}

int CmdVerify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (config.state_budget == 0 || config.enum_cap == 0) {
      throw InputError("<config>", Error(ErrorKind::kInvalidArgument,
                                         "caps must be positive"));
    }
    Inputs inputs = LoadInputs(config);
    std::filesystem::path dir = PrepareOutDir(config);
    FlowTableDelta delta = DeltaFor(config, inputs);
    SdnSystemModel rsdn = ApplyDelta(config, inputs.model, delta);
    WriteFtm(config, dir, delta);

    VerifyOptions options;
    options.check.state_budget = config.state_budget;
    options.check.enum_cap = config.enum_cap;
    options.with_oracle = config.with_oracle;
    Report report = VerifyAll(rsdn, CompileVcs(inputs.pairs), options);
    AnnotateConflicts(report, inputs.conflicts);

    std::string human = ExportReportHuman(report);
    if (WantMachine(config)) {
      WriteFile(dir / kReportMachineFile, ExportReportMachine(report));
    }
    if (WantHuman(config)) WriteFile(dir / kReportHumanFile, human);
    out << human;

    if (report.oracle_disagreements > 0) {
      err << "internal error: model checker and oracle disagree on "
          << report.oracle_disagreements << " validation condition(s)\n";
      return kExitInternalError;
    }
    return report.status() == Report::Status::kAllHold ? kExitOk
                                                       : kExitPropertyFailure;
  });
}

int CmdSimulate(const RunConfig& config, const SimulateRequest& request,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    SdnSystemModel model = [&] {
      if (!config.policy_path.empty()) {
        Inputs inputs = LoadInputs(config);
        return ApplyDelta(config, inputs.model, DeltaFor(config, inputs));
      }
      SdnSystemModel base = LoadModelFile(config.model_path);
      if (config.ftm_path.empty()) return base;
      std::string text = ReadFile(config.ftm_path);
      FlowTableDelta delta = FromFile(
          config.ftm_path, text, [](const std::string& t) { return ParseFtm(t); });
      return ApplyDelta(config, base, delta);
    }();

    const Terminal* src = model.FindTerminal(request.src_terminal);
    if (src == nullptr) {
      throw Error(ErrorKind::kUnknownTerminal,
                  "unknown terminal \"" + request.src_terminal + "\"");
    }
    PacketHeader header;
    header.eth_src = src->mac;
    header.ip_src = src->ip;
    if (!request.dst_terminal.empty()) {
      const Terminal* dst = model.FindTerminal(request.dst_terminal);
      if (dst == nullptr) {
        throw Error(ErrorKind::kUnknownTerminal,
                    "unknown terminal \"" + request.dst_terminal + "\"");
      }
      header.eth_dst = dst->mac;
      header.ip_dst = dst->ip;
    }
    if (!request.eth_dst.empty()) {
      auto mac = MacAddress::Parse(request.eth_dst);
      if (!mac) {
        throw Error(ErrorKind::kInvalidArgument,
                    "malformed --eth-dst \"" + request.eth_dst + "\"");
      }
      header.eth_dst = *mac;
    }
    if (!request.ip_dst.empty()) {
      auto ip = Ipv4Address::Parse(request.ip_dst);
      if (!ip) {
        throw Error(ErrorKind::kInvalidArgument,
                    "malformed --ip-dst \"" + request.ip_dst + "\"");
      }
      header.ip_dst = *ip;
    }
    if (request.dst_terminal.empty() && request.ip_dst.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "a destination (--dst or --ip-dst) is required");
    }
    header.ip_proto = request.ip_proto;
    header.tp_dst = request.tp_dst;
    header.vlan = request.vlan;

    SimOutcome outcome = Simulate(model, src->id, header);
    out << "header: " << HeaderToString(header) << "\n";
    for (const Hop& hop : outcome.trace) {
      out << "  " << hop.switch_id << " in_port=" << hop.in_port
          << " priority=" << hop.priority << " " << hop.action.ToString()
          << " (" << hop.provenance << ")\n";
    }
    out << outcome.ToString() << "\n";
    return outcome.kind == SimOutcome::Kind::kDelivered ? kExitOk
                                                        : kExitPropertyFailure;
  });
}

}  // namespace sdnpolicy
