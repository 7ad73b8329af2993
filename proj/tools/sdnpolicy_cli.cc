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

// sdnpolicy: compile symbolic security policies into flow tables and verify
// the result.
//
//   sdnpolicy transform --model M --policies P [--registry R] --out DIR
//   sdnpolicy verify    --model M --policies P [--registry R] --out DIR
//                       [--ftm F] [--with-oracle] [--state-budget N]
//                       [--enum-cap N]
//   sdnpolicy simulate  --model M [--policies P | --ftm F] --src T
//                       (--dst T | --ip-dst A [--eth-dst A]) [--proto N]
//                       [--tp-dst N] [--vlan N]
//
// Exit status: 0 success, 1 property failure, 2 input error, 3 internal
// inconsistency.

#include <cstdint>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sdnpolicy/sdnpolicy.h"

namespace {

struct Options {
  std::string model, policies, registry, out, ftm, format = "both";
  uint64_t state_budget = 0;
  uint64_t enum_cap = 0;
  bool with_oracle = false;
  bool quiet = false;

  std::string src, dst, eth_dst, ip_dst;
  unsigned proto = 0;
  unsigned tp_dst = 0;
  int vlan = -1;
};

sdnp_run_config ToConfig(const Options& o) {
  sdnp_run_config config;
  sdnp_run_config_init(&config);
  auto c_str = [](const std::string& s) {
    return s.empty() ? nullptr : s.c_str();
  };
  config.model_path = c_str(o.model);
  config.policy_path = c_str(o.policies);
  config.registry_path = c_str(o.registry);
  config.out_dir = c_str(o.out);
  config.ftm_path = c_str(o.ftm);
  if (o.state_budget != 0) config.state_budget = o.state_budget;
  if (o.enum_cap != 0) config.enum_cap = o.enum_cap;
  static const std::map<std::string, sdnp_output_format> kFormats = {
      {"machine", SDNP_OUTPUT_MACHINE},
      {"human", SDNP_OUTPUT_HUMAN},
      {"both", SDNP_OUTPUT_BOTH}};
  config.format = kFormats.at(o.format);
  config.with_oracle = o.with_oracle;
  config.quiet = o.quiet;
  return config;
}

void AddInputFlags(CLI::App* cmd, Options& o, bool policies_required) {
  cmd->add_option("--model", o.model, "Model document")
      ->required()
      ->check(CLI::ExistingFile);
  auto* policies =
      cmd->add_option("--policies", o.policies, "Policy document")
          ->check(CLI::ExistingFile);
  if (policies_required) policies->required();
  cmd->add_option("--registry", o.registry,
                  "Registry document (default: the model's registry section)")
      ->check(CLI::ExistingFile);
}

void AddOutputFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output directory")->required();
  cmd->add_option("--format", o.format, "machine, human or both")
      ->check(CLI::IsMember({"machine", "human", "both"}));
  cmd->add_flag("--quiet", o.quiet, "Do not print the summary");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile symbolic SDN security policies into flow tables and "
               "verify them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sdnp_version());
  Options o;

  CLI::App* transform =
      app.add_subcommand("transform", "Write the flow-table delta (FTM)");
  AddInputFlags(transform, o, true);
  AddOutputFlags(transform, o);

  CLI::App* verify = app.add_subcommand(
      "verify", "Transform, install and model-check every policy");
  AddInputFlags(verify, o, true);
  AddOutputFlags(verify, o);
  verify->add_option("--ftm", o.ftm, "Verify this FTM instead of generating one")
      ->check(CLI::ExistingFile);
  verify->add_option("--state-budget", o.state_budget,
                     "Maximum visited states per condition")
      ->check(CLI::PositiveNumber);
  verify->add_option("--enum-cap", o.enum_cap,
                     "Maximum headers the oracle may enumerate per condition")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--with-oracle", o.with_oracle,
                   "Cross-check every verdict by concrete simulation");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Walk one packet through the network");
  AddInputFlags(simulate, o, false);
  simulate->add_option("--ftm", o.ftm, "Install this FTM first")
      ->check(CLI::ExistingFile);
  simulate->add_option("--src", o.src, "Source terminal id")->required();
  simulate->add_option("--dst", o.dst, "Destination terminal id");
  simulate->add_option("--eth-dst", o.eth_dst, "Destination MAC override");
  simulate->add_option("--ip-dst", o.ip_dst, "Destination IPv4 override");
  simulate->add_option("--proto", o.proto, "IP protocol number")
      ->check(CLI::Range(0, 255));
  simulate->add_option("--tp-dst", o.tp_dst, "Transport destination port")
      ->check(CLI::Range(0, 65535));
  simulate->add_option("--vlan", o.vlan, "VLAN id (untagged when absent)")
      ->check(CLI::Range(0, 4095));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : SDNP_EXIT_INPUT_ERROR;
  }

  sdnp_run_config config = ToConfig(o);
  if (transform->parsed()) return sdnp_cmd_transform(&config);
  if (verify->parsed()) return sdnp_cmd_verify(&config);

  sdnp_simulate_request request{};
  request.src_terminal = o.src.c_str();
  request.dst_terminal = o.dst.empty() ? nullptr : o.dst.c_str();
  request.eth_dst = o.eth_dst.empty() ? nullptr : o.eth_dst.c_str();
  request.ip_dst = o.ip_dst.empty() ? nullptr : o.ip_dst.c_str();
  request.ip_proto = static_cast<uint8_t>(o.proto);
  request.tp_dst = static_cast<uint16_t>(o.tp_dst);
  request.vlan = o.vlan;
  return sdnp_cmd_simulate(&config, &request);
}
