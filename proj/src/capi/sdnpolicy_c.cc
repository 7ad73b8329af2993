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

// extern "C" wrappers over the C++ core. Every entry point catches all
// exceptions and converts them into an sdnp_status plus a thread-local
// message.

#include "sdnpolicy/sdnpolicy.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "sdnpolicy/dataplane.h"
#include "sdnpolicy/errors.h"
#include "sdnpolicy/pipeline.h"
#include "sdnpolicy/policy.h"
#include "sdnpolicy/routing.h"
#include "sdnpolicy/system_model.h"
#include "sdnpolicy/transform.h"
#include "sdnpolicy/verifier.h"

struct sdnp_model {
  sdnpolicy::SdnSystemModel model;
};
struct sdnp_policy_set {
  std::vector<sdnpolicy::SecurityPolicy> policies;
};
struct sdnp_registry {
  sdnpolicy::BindingRegistry registry;
};
struct sdnp_pairs {
  std::vector<sdnpolicy::ConcretePair> pairs;
  std::vector<sdnpolicy::Conflict> conflicts;
};
struct sdnp_delta {
  sdnpolicy::FlowTableDelta delta;
};
struct sdnp_report {
  sdnpolicy::Report report;
};

namespace {

using namespace sdnpolicy;

thread_local std::string last_error;

sdnp_status Fail(sdnp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
sdnp_status Wrap(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SDNP_OK;
  } catch (const Error& e) {
    return Fail(static_cast<sdnp_status>(e.kind()), e.what());
  } catch (const std::exception& e) {
    return Fail(SDNP_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " must not be NULL");
  }
}

std::string_view Text(const char* text, size_t len) {
  RequireNonNull(text, "text");
  return std::string_view(text, len);
}

std::string OrEmpty(const char* s) { return s == nullptr ? "" : s; }

RunConfig ToRunConfig(const sdnp_run_config* c) {
  RunConfig config;
  config.model_path = OrEmpty(c->model_path);
  config.policy_path = OrEmpty(c->policy_path);
  config.registry_path = OrEmpty(c->registry_path);
  config.out_dir = OrEmpty(c->out_dir);
  config.ftm_path = OrEmpty(c->ftm_path);
  config.state_budget = c->state_budget;
  config.enum_cap = c->enum_cap;
  config.format = static_cast<OutputFormat>(c->format);
  config.with_oracle = c->with_oracle != 0;
  return config;
}

std::ostream& OutStream(const sdnp_run_config* c) {
  thread_local std::ostringstream sink;
  if (c->quiet) {
    sink.str("");
    return sink;
  }
  return std::cout;
}

}  // namespace

extern "C" {

const char* sdnp_version(void) { return "1.0.0"; }

const char* sdnp_status_name(sdnp_status status) {
  if (status == SDNP_OK) return "OK";
  static thread_local std::string name;
  name = std::string(ErrorKindName(static_cast<ErrorKind>(status)));
  return name.c_str();
}

const char* sdnp_last_error(void) { return last_error.c_str(); }

void sdnp_string_free(char* s) { std::free(s); }

sdnp_status sdnp_model_load(const char* text, size_t len, sdnp_model** out) {
  return Wrap([&] {
    RequireNonNull(out, "out");
    *out = new sdnp_model{LoadModel(Text(text, len))};
  });
}

void sdnp_model_free(sdnp_model* model) { delete model; }

size_t sdnp_model_switch_count(const sdnp_model* model) {
  return model == nullptr ? 0 : model->model.switches().size();
}

size_t sdnp_model_terminal_count(const sdnp_model* model) {
  return model == nullptr ? 0 : model->model.terminals().size();
}

sdnp_status sdnp_model_rule_count(const sdnp_model* model,
                                  const char* switch_id, size_t* out) {
  return Wrap([&] {
    RequireNonNull(model, "model");
    RequireNonNull(switch_id, "switch_id");
    RequireNonNull(out, "out");
    const Switch* sw = model->model.FindSwitch(switch_id);
    if (sw == nullptr) {
      throw Error(ErrorKind::kUnknownSwitch,
                  "unknown switch \"" + std::string(switch_id) + "\"");
    }
    *out = sw->table.size();
  });
}

sdnp_status sdnp_model_hash(const sdnp_model* model, char** out) {
  return Wrap([&] {
    RequireNonNull(model, "model");
    RequireNonNull(out, "out");
    *out = CopyString(model->model.Hash());
  });
}

sdnp_status sdnp_shortest_path(const sdnp_model* model, const char* src_switch,
                               const char* dst_switch, char** out_json) {
  return Wrap([&] {
    RequireNonNull(model, "model");
    RequireNonNull(src_switch, "src_switch");
    RequireNonNull(dst_switch, "dst_switch");
    RequireNonNull(out_json, "out_json");
    Path path = ShortestPath(model->model, src_switch, dst_switch);
    nlohmann::json hops = nlohmann::json::array();
    for (const PathHop& hop : path) {
      nlohmann::json h{{"switch", hop.switch_id}};
      h["ingress"] = hop.ingress ? nlohmann::json(*hop.ingress) : nullptr;
      h["egress"] = hop.egress ? nlohmann::json(*hop.egress) : nullptr;
      hops.push_back(std::move(h));
    }
    *out_json = CopyString(hops.dump());
  });
}

sdnp_status sdnp_simulate(const sdnp_model* model, const char* src_terminal,
                          const sdnp_header* header, sdnp_outcome_kind* kind,
                          char** trace_json) {
  return Wrap([&] {
    RequireNonNull(model, "model");
    RequireNonNull(src_terminal, "src_terminal");
    RequireNonNull(header, "header");
    RequireNonNull(kind, "kind");
    PacketHeader h;
    auto mac = [](const char* text, const char* field) {
      RequireNonNull(text, field);
      auto v = MacAddress::Parse(text);
      if (!v) {
        throw Error(ErrorKind::kInvalidArgument,
                    std::string("malformed ") + field);
      }
      return *v;
    };
    auto ip = [](const char* text, const char* field) {
      RequireNonNull(text, field);
      auto v = Ipv4Address::Parse(text);
      if (!v) {
        throw Error(ErrorKind::kInvalidArgument,
                    std::string("malformed ") + field);
      }
      return *v;
    };
    h.eth_src = mac(header->eth_src, "eth_src");
    h.eth_dst = mac(header->eth_dst, "eth_dst");
    h.ip_src = ip(header->ip_src, "ip_src");
    h.ip_dst = ip(header->ip_dst, "ip_dst");
    h.ip_proto = header->ip_proto;
    h.tp_dst = header->tp_dst;
    if (header->vlan >= 0) {
      if (header->vlan > kMaxVlanId) {
        throw Error(ErrorKind::kInvalidArgument, "vlan out of range");
      }
      h.vlan = static_cast<uint16_t>(header->vlan);
    }
    SimOutcome outcome = Simulate(model->model, src_terminal, h);
    *kind = static_cast<sdnp_outcome_kind>(outcome.kind);
    if (trace_json != nullptr) {
      nlohmann::json trace = nlohmann::json::array();
      for (const Hop& hop : outcome.trace) {
        trace.push_back({{"switch", hop.switch_id},
                         {"in_port", hop.in_port},
                         {"priority", hop.priority},
                         {"action", hop.action.ToString()},
                         {"provenance", hop.provenance}});
      }
      *trace_json = CopyString(
          nlohmann::json{{"outcome", outcome.ToString()}, {"trace", trace}}
              .dump());
    }
  });
}

sdnp_status sdnp_policies_parse(const char* text, size_t len,
                                sdnp_policy_set** out) {
  return Wrap([&] {
    RequireNonNull(out, "out");
    *out = new sdnp_policy_set{ParsePolicies(Text(text, len))};
  });
}

size_t sdnp_policies_count(const sdnp_policy_set* policies) {
  return policies == nullptr ? 0 : policies->policies.size();
}

void sdnp_policies_free(sdnp_policy_set* policies) { delete policies; }

sdnp_status sdnp_registry_parse(const char* text, size_t len,
                                sdnp_registry** out) {
  return Wrap([&] {
    RequireNonNull(out, "out");
    *out = new sdnp_registry{ParseRegistry(Text(text, len))};
  });
}

void sdnp_registry_free(sdnp_registry* registry) { delete registry; }

sdnp_status sdnp_resolve(const sdnp_policy_set* policies,
                         const sdnp_registry* registry,
                         const sdnp_model* model, sdnp_pairs** out) {
  return Wrap([&] {
    RequireNonNull(policies, "policies");
    RequireNonNull(registry, "registry");
    RequireNonNull(model, "model");
    RequireNonNull(out, "out");
    auto pairs = Resolve(policies->policies, registry->registry, model->model);
    auto conflicts = CheckConflicts(pairs);
    *out = new sdnp_pairs{std::move(pairs), std::move(conflicts)};
  });
}

size_t sdnp_pairs_count(const sdnp_pairs* pairs) {
  return pairs == nullptr ? 0 : pairs->pairs.size();
}

size_t sdnp_pairs_conflict_count(const sdnp_pairs* pairs) {
  return pairs == nullptr ? 0 : pairs->conflicts.size();
}

void sdnp_pairs_free(sdnp_pairs* pairs) { delete pairs; }

sdnp_status sdnp_transform(const sdnp_pairs* pairs, const sdnp_model* model,
                           sdnp_delta** out) {
  return Wrap([&] {
    RequireNonNull(pairs, "pairs");
    RequireNonNull(model, "model");
    RequireNonNull(out, "out");
    *out = new sdnp_delta{Transform(pairs->pairs, model->model)};
  });
}

sdnp_status sdnp_delta_parse(const char* text, size_t len, sdnp_delta** out) {
  return Wrap([&] {
    RequireNonNull(out, "out");
    *out = new sdnp_delta{ParseFtm(Text(text, len))};
  });
}

size_t sdnp_delta_rule_count(const sdnp_delta* delta) {
  return delta == nullptr ? 0 : delta->delta.RuleCount();
}

sdnp_status sdnp_delta_export(const sdnp_delta* delta, sdnp_format format,
                              char** out) {
  return Wrap([&] {
    RequireNonNull(delta, "delta");
    RequireNonNull(out, "out");
    *out = CopyString(ExportFtm(delta->delta, format == SDNP_FORMAT_HUMAN
                                                  ? FtmFormat::kHuman
                                                  : FtmFormat::kMachine));
  });
}

void sdnp_delta_free(sdnp_delta* delta) { delete delta; }

sdnp_status sdnp_apply(const sdnp_model* model, const sdnp_delta* delta,
                       sdnp_model** out) {
  return Wrap([&] {
    RequireNonNull(model, "model");
    RequireNonNull(delta, "delta");
    RequireNonNull(out, "out");
    *out = new sdnp_model{Apply(model->model, delta->delta)};
  });
}

void sdnp_verify_options_init(sdnp_verify_options* options) {
  if (options == nullptr) return;
  CheckOptions defaults;
  options->state_budget = defaults.state_budget;
  options->enum_cap = defaults.enum_cap;
  options->with_oracle = 0;
}

sdnp_status sdnp_verify(const sdnp_model* rsdn, const sdnp_pairs* pairs,
                        const sdnp_verify_options* options, sdnp_report** out) {
  return Wrap([&] {
    RequireNonNull(rsdn, "rsdn");
    RequireNonNull(pairs, "pairs");
    RequireNonNull(out, "out");
    VerifyOptions opts;
    if (options != nullptr) {
      opts.check.state_budget = options->state_budget;
      opts.check.enum_cap = options->enum_cap;
      opts.with_oracle = options->with_oracle != 0;
    }
    Report report = VerifyAll(rsdn->model, CompileVcs(pairs->pairs), opts);
    AnnotateConflicts(report, pairs->conflicts);
    *out = new sdnp_report{std::move(report)};
  });
}

sdnp_report_status sdnp_report_get_status(const sdnp_report* report) {
  return report != nullptr &&
                 report->report.status() == Report::Status::kAllHold
             ? SDNP_REPORT_ALL_HOLD
             : SDNP_REPORT_VIOLATIONS_FOUND;
}

void sdnp_report_counts(const sdnp_report* report, size_t* holds,
                        size_t* violated, size_t* inconclusive,
                        size_t* oracle_disagreements) {
  if (report == nullptr) return;
  if (holds) *holds = report->report.holds;
  if (violated) *violated = report->report.violated;
  if (inconclusive) *inconclusive = report->report.inconclusive;
  if (oracle_disagreements) {
    *oracle_disagreements = report->report.oracle_disagreements;
  }
}

sdnp_status sdnp_report_export(const sdnp_report* report, sdnp_format format,
                               char** out) {
  return Wrap([&] {
    RequireNonNull(report, "report");
    RequireNonNull(out, "out");
    *out = CopyString(format == SDNP_FORMAT_HUMAN
                          ? ExportReportHuman(report->report)
                          : ExportReportMachine(report->report));
  });
}

void sdnp_report_free(sdnp_report* report) { delete report; }

void sdnp_run_config_init(sdnp_run_config* config) {
  if (config == nullptr) return;
  RunConfig defaults;
  *config = sdnp_run_config{};
  config->state_budget = defaults.state_budget;
  config->enum_cap = defaults.enum_cap;
  config->format = SDNP_OUTPUT_BOTH;
}

int sdnp_cmd_transform(const sdnp_run_config* config) {
  if (config == nullptr) return SDNP_EXIT_INPUT_ERROR;
  return CmdTransform(ToRunConfig(config), OutStream(config), std::cerr);
}

int sdnp_cmd_verify(const sdnp_run_config* config) {
  if (config == nullptr) return SDNP_EXIT_INPUT_ERROR;
  return CmdVerify(ToRunConfig(config), OutStream(config), std::cerr);
}

int sdnp_cmd_simulate(const sdnp_run_config* config,
                      const sdnp_simulate_request* request) {
  if (config == nullptr || request == nullptr) return SDNP_EXIT_INPUT_ERROR;
  SimulateRequest req;
  req.src_terminal = OrEmpty(request->src_terminal);
  req.dst_terminal = OrEmpty(request->dst_terminal);
  req.eth_dst = OrEmpty(request->eth_dst);
  req.ip_dst = OrEmpty(request->ip_dst);
  req.ip_proto = request->ip_proto;
  req.tp_dst = request->tp_dst;
  if (request->vlan >= 0) {
    if (request->vlan > kMaxVlanId) {
      std::cerr << "error: vlan out of range\n";
      return SDNP_EXIT_INPUT_ERROR;
    }
    req.vlan = static_cast<uint16_t>(request->vlan);
  }
  return CmdSimulate(ToRunConfig(config), req, OutStream(config), std::cerr);
}

}  // extern "C"
