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

// Acceptance gate. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails. Thresholds are fixed below and are
// not adjustable from the command line.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdnpolicy/dataplane.h"
#include "sdnpolicy/policy.h"
#include "sdnpolicy/routing.h"
#include "sdnpolicy/sdnpolicy.h"
#include "sdnpolicy/system_model.h"
#include "sdnpolicy/transform.h"
#include "sdnpolicy/verifier.h"
#include "testing/fixtures.h"
#include "testing/instance_generator.h"

namespace sdnpolicy {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::GenerateInstance;
using testing::HeaderBetween;
using testing::Instance;

constexpr int kSweepInstances = 200;
constexpr double kSweepSecondsLimit = 60.0;
constexpr int kDijkstraGraphs = 500;
constexpr int kDijkstraMaxNodes = 8;
constexpr size_t kMutationCases = 100;
constexpr int kDeterminismInstances = 20;
constexpr uint64_t kSweepSeedBase = 1;
constexpr uint64_t kMutationSeedBase = 5000;
constexpr uint64_t kDeterminismSeedBase = 9000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void Report(int number, const std::string& title, const Outcome& o) {
  std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", number,
              title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// A violated verdict plus what is needed to replay it.
struct Witness {
  SdnSystemModel rsdn;
  ValidationCondition vc;
  Verdict verdict;
  std::string origin;
};

std::vector<Witness> witnesses;

// Writes an instance to disk and runs the verify command on it through the
// shared library.
struct SweepRun {
  int status = -1;
  fs::path out;
};

SweepRun RunVerify(const Instance& inst, const fs::path& dir,
                   const std::string& tag, bool with_oracle) {
  fs::path model = dir / ("model-" + std::to_string(inst.seed) + ".json");
  fs::path policies = dir / ("policies-" + std::to_string(inst.seed) + ".json");
  if (!fs::exists(model)) {
    testing::WriteText(model, inst.ModelJson());
    testing::WriteText(policies, inst.PoliciesJson());
  }
  SweepRun run;
  run.out = dir / (tag + "-" + std::to_string(inst.seed));
  std::string model_s = model.string();
  std::string policies_s = policies.string();
  std::string out_s = run.out.string();
  sdnp_run_config config;
  sdnp_run_config_init(&config);
  config.model_path = model_s.c_str();
  config.policy_path = policies_s.c_str();
  config.out_dir = out_s.c_str();
  config.format = SDNP_OUTPUT_MACHINE;
  config.with_oracle = with_oracle ? 1 : 0;
  config.quiet = 1;
  run.status = sdnp_cmd_verify(&config);
  return run;
}

// Test-side universe for one VC: every proto/port/vlan value occurring in the
// network (or the VC's fixed value), one value occurring nowhere, and the
// untagged case. Built independently of the library's class spaces.
std::vector<PacketHeader> VcUniverse(const SdnSystemModel& net,
                                     const ValidationCondition& vc) {
  std::set<int> protos, ports, vlans;
  for (const Switch& sw : net.switches()) {
    for (const FlowRule& r : sw.table) {
      if (r.match.ip_proto) protos.insert(*r.match.ip_proto);
      if (r.match.tp_dst) ports.insert(*r.match.tp_dst);
      if (r.match.vlan) vlans.insert(*r.match.vlan);
    }
  }
  for (const Terminal& t : net.terminals()) {
    if (t.vlan) vlans.insert(*t.vlan);
  }
  auto with_fresh = [](std::set<int> s, int limit) {
    for (int v = 0; v <= limit; ++v) {
      if (!s.contains(v)) {
        s.insert(v);
        break;
      }
    }
    return s;
  };
  if (vc.ip_proto) protos = {*vc.ip_proto}; else protos = with_fresh(protos, 255);
  if (vc.tp_dst) ports = {*vc.tp_dst}; else ports = with_fresh(ports, 65535);
  vlans = with_fresh(vlans, 4095);
  std::vector<std::optional<uint16_t>> vlan_values{std::nullopt};
  for (int v : vlans) vlan_values.push_back(static_cast<uint16_t>(v));

  std::vector<PacketHeader> out;
  for (int proto : protos) {
    for (int port : ports) {
      for (const auto& vlan : vlan_values) {
        PacketHeader h = HeaderBetween(net, vc.src, vc.dst,
                                       static_cast<uint8_t>(proto),
                                       static_cast<uint16_t>(port));
        h.vlan = vlan;
        out.push_back(h);
      }
    }
  }
  return out;
}

bool Delivers(const SdnSystemModel& net, const ValidationCondition& vc,
              const PacketHeader& h, SimOutcome* outcome = nullptr) {
  SimOutcome o = Simulate(net, vc.src, h);
  if (outcome != nullptr) *outcome = o;
  return o.kind == SimOutcome::Kind::kDelivered && o.terminal_id == vc.dst;
}

// --- Criteria 1 and 2 ------------------------------------------------------

void SweepCriteria(const fs::path& dir) {
  std::vector<Instance> instances;
  size_t vc_total = 0;
  for (int i = 0; i < kSweepInstances; ++i) {
    instances.push_back(GenerateInstance(kSweepSeedBase + i));
  }
  auto within_limits = [](const Instance& inst) {
    return inst.spec.switches.size() <= 8 && inst.spec.terminals.size() <= 16 &&
           inst.spec.links.size() <= 20 && inst.policies.size() <= 12 &&
           inst.registry.principals.size() <= 6;
  };

  // 1: plain sweep, timed end to end (including document writing).
  auto start = std::chrono::steady_clock::now();
  int all_hold = 0, bounded = 0;
  std::string first_bad;
  for (const Instance& inst : instances) {
    bounded += within_limits(inst);
    SweepRun run = RunVerify(inst, dir, "plain", false);
    if (run.status == SDNP_EXIT_OK) {
      ++all_hold;
    } else if (first_bad.empty()) {
      first_bad = " first failure: seed " + std::to_string(inst.seed) +
                  " status " + std::to_string(run.status);
    }
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  Outcome c1;
  c1.pass = all_hold == kSweepInstances && bounded == kSweepInstances &&
            seconds <= kSweepSecondsLimit;
  std::ostringstream d1;
  d1.precision(2);
  d1 << std::fixed << all_hold << "/" << kSweepInstances
     << " instances AllHold, " << bounded << " within size limits, "
     << seconds << " s (limit " << kSweepSecondsLimit << " s)" << first_bad;
  c1.detail = d1.str();
  Report(1, "end-to-end sweep", c1);

  // 2: same instances with the oracle; compare every VC's two verdicts.
  size_t agree = 0, compared = 0;
  int status_ok = 0;
  std::string first_mismatch;
  for (const Instance& inst : instances) {
    SweepRun run = RunVerify(inst, dir, "oracle", true);
    status_ok += run.status == SDNP_EXIT_OK;
    json report = json::parse(testing::ReadText(run.out / "report.machine"));
    for (const json& v : report.at("verdicts")) {
      ++compared;
      if (v.contains("oracle") &&
          v.at("checker").at("result") == v.at("oracle").at("result") &&
          v.at("checker").at("result") != "inconclusive") {
        ++agree;
      } else if (first_mismatch.empty()) {
        first_mismatch = " first mismatch: seed " + std::to_string(inst.seed) +
                         " " + v.at("vc").get<std::string>();
      }
    }
  }
  vc_total = compared;
  Outcome c2;
  c2.pass = compared > 0 && agree == compared && status_ok == kSweepInstances;
  c2.detail = std::to_string(agree) + "/" + std::to_string(vc_total) +
              " VC verdicts agree across " + std::to_string(status_ok) + "/" +
              std::to_string(kSweepInstances) + " instances with status 0" +
              first_mismatch;
  Report(2, "oracle agreement", c2);
}

// --- Criterion 3 -------------------------------------------------------------

void DijkstraCriterion() {
  int optimal_graphs = 0;
  size_t pairs_checked = 0;
  std::string first_bad;
  for (int g = 0; g < kDijkstraGraphs; ++g) {
    uint64_t seed = 100000 + static_cast<uint64_t>(g);
    int nodes = 1 + g % kDijkstraMaxNodes;
    ModelSpec spec = testing::GenerateWeightedGraph(seed, nodes, 16);
    SdnSystemModel model = SdnSystemModel::Create(spec);
    bool ok = true;
    for (const Switch& a : spec.switches) {
      for (const Switch& b : spec.switches) {
        ++pairs_checked;
        Path path = ShortestPath(model, a.id, b.id);
        std::optional<double> best = testing::BruteForceMinCost(spec, a.id, b.id);
        bool joined = !path.empty() && path.front().switch_id == a.id &&
                      path.back().switch_id == b.id;
        for (size_t i = 0; joined && i + 1 < path.size(); ++i) {
          const PortBinding* bind =
              path[i].egress ? model.FindPort(path[i].switch_id, *path[i].egress)
                             : nullptr;
          joined = bind != nullptr && bind->kind == PortBinding::Kind::kLink &&
                   path[i + 1].ingress &&
                   bind->peer == SwitchPort{path[i + 1].switch_id,
                                            *path[i + 1].ingress};
        }
        if (!joined || !best || PathCost(model, path) != *best) {
          ok = false;
          if (first_bad.empty()) {
            first_bad = " first failure: seed " + std::to_string(seed) + " " +
                        a.id + "->" + b.id;
          }
        }
      }
    }
    optimal_graphs += ok;
  }
  Outcome c;
  c.pass = optimal_graphs == kDijkstraGraphs;
  c.detail = std::to_string(optimal_graphs) + "/" +
             std::to_string(kDijkstraGraphs) + " graphs (<= " +
             std::to_string(kDijkstraMaxNodes) + " nodes, " +
             std::to_string(pairs_checked) +
             " switch pairs) match the exhaustive minimum" + first_bad;
  Report(3, "Dijkstra optimality", c);
}

// --- Criterion 4 -------------------------------------------------------------

ConcretePair Pair(std::optional<uint8_t> proto, std::optional<uint16_t> port,
                  PolicyAction action, const std::string& id) {
  return ConcretePair{"t1", "t3", proto, port, action, id};
}

void DenyDominanceCriterion() {
  struct Pattern {
    std::string name;
    ConcretePair permit;
    ConcretePair deny;
    bool overlapping;
  };
  const std::vector<Pattern> patterns{
      {"exact", Pair(6, 80, PolicyAction::kPermit, "p1"),
       Pair(6, 80, PolicyAction::kDeny, "p2"), true},
      {"deny-wildcard-subsumes", Pair(6, 80, PolicyAction::kPermit, "p1"),
       Pair(std::nullopt, std::nullopt, PolicyAction::kDeny, "p2"), true},
      {"permit-wildcard-subsumes",
       Pair(std::nullopt, std::nullopt, PolicyAction::kPermit, "p1"),
       Pair(6, 80, PolicyAction::kDeny, "p2"), true},
      {"disjoint", Pair(6, 80, PolicyAction::kPermit, "p1"),
       Pair(6, 443, PolicyAction::kDeny, "p2"), false},
  };
  SdnSystemModel model = SdnSystemModel::Create(testing::TwoSwitchSpec());
  int checks = 0, passed = 0;
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (ok) ++passed; else failed.push_back(what);
  };

  for (const Pattern& p : patterns) {
    std::vector<ConcretePair> pairs{p.permit, p.deny};
    SdnSystemModel rsdn = Apply(model, Transform(pairs, model));
    std::vector<ValidationCondition> vcs = CompileVcs(pairs);
    const ValidationCondition& permit_vc = vcs[0];
    const ValidationCondition& deny_vc = vcs[1];

    check(CheckConflicts(pairs).empty() != p.overlapping, p.name + " conflict report");

    // Denied traffic is dropped, probing wildcards with several values.
    for (uint8_t proto : {uint8_t{6}, uint8_t{17}}) {
      for (uint16_t port : {uint16_t{22}, uint16_t{80}, uint16_t{443}}) {
        if (p.deny.ip_proto && *p.deny.ip_proto != proto) continue;
        if (p.deny.tp_dst && *p.deny.tp_dst != port) continue;
        SimOutcome o = Simulate(rsdn, "t1", HeaderBetween(rsdn, "t1", "t3", proto, port));
        check(o.kind == SimOutcome::Kind::kDropped && o.provenance == "p2",
              p.name + " simulate denied " + std::to_string(proto) + "/" +
                  std::to_string(port));
      }
    }
    Verdict deny_checker = ModelCheck(rsdn, deny_vc);
    Verdict deny_oracle = OracleCheck(rsdn, deny_vc);
    check(deny_checker.result == VerdictResult::kHolds &&
              deny_oracle.result == VerdictResult::kHolds,
          p.name + " deny VC holds");
    if (!p.overlapping) {
      check(ModelCheck(rsdn, permit_vc).result == VerdictResult::kHolds &&
                OracleCheck(rsdn, permit_vc).result == VerdictResult::kHolds,
            p.name + " permit VC holds");
    } else {
      // Remove the deny rule: the deny VC must now fail with a witness.
      ModelSpec spec = rsdn.spec();
      std::erase_if(spec.MutableSwitch("s1")->table,
                    [](const FlowRule& r) { return r.provenance == "p2"; });
      SdnSystemModel mutant = SdnSystemModel::Create(spec);
      Verdict v = ModelCheck(mutant, deny_vc);
      Verdict o = OracleCheck(mutant, deny_vc);
      check(v.result == VerdictResult::kViolated &&
                o.result == VerdictResult::kViolated,
            p.name + " deny VC fails once the deny rule is gone");
      witnesses.push_back({mutant, deny_vc, v, "criterion 4 " + p.name});
      witnesses.push_back({mutant, deny_vc, o, "criterion 4 oracle " + p.name});
    }
  }
  Outcome c;
  c.pass = passed == checks;
  c.detail = std::to_string(passed) + "/" + std::to_string(checks) +
             " checks over exact, wildcard-subsumes (both directions) and "
             "disjoint patterns";
  for (const std::string& f : failed) c.detail += "; failed: " + f;
  Report(4, "deny dominance", c);
}

// --- Criterion 5 -------------------------------------------------------------

// The rule a hop matched, identified by position in its switch table.
size_t RuleIndex(const SdnSystemModel& net, const Hop& hop, const PacketHeader& h) {
  const Switch* sw = net.FindSwitch(hop.switch_id);
  const FlowRule& r = MatchRule(net, *sw, h, hop.in_port);
  return static_cast<size_t>(&r - sw->table.data());
}

void MutationCriterion() {
  size_t cases = 0, flipped = 0;
  std::string first_bad;
  for (uint64_t seed = kMutationSeedBase;
       cases < kMutationCases && seed < kMutationSeedBase + 2000; ++seed) {
    Instance inst = GenerateInstance(seed);
    SdnSystemModel model = SdnSystemModel::Create(inst.spec);
    std::vector<ConcretePair> pairs = Resolve(inst.policies, inst.registry, model);
    std::set<std::string> permit_ids;
    for (const ConcretePair& p : pairs) {
      if (p.action == PolicyAction::kPermit) permit_ids.insert(p.policy_id);
    }
    SdnSystemModel rsdn = Apply(model, Transform(pairs, model));

    for (const ValidationCondition& vc : CompileVcs(pairs)) {
      if (vc.expected != Expectation::kReachable) continue;
      std::vector<PacketHeader> universe = VcUniverse(rsdn, vc);
      std::vector<std::pair<PacketHeader, SimOutcome>> delivering;
      for (const PacketHeader& h : universe) {
        SimOutcome o;
        if (Delivers(rsdn, vc, h, &o)) delivering.emplace_back(h, o);
      }
      if (delivering.empty()) continue;

      // Candidate: a Permit-provenance forward rule on the first delivering
      // trace that every delivering header also uses...
      const auto& [h0, o0] = delivering.front();
      for (const Hop& hop : o0.trace) {
        if (!permit_ids.contains(hop.provenance) || hop.action.is_drop()) continue;
        size_t idx = RuleIndex(rsdn, hop, h0);
        bool on_every_path = true;
        for (const auto& [h, o] : delivering) {
          bool uses = false;
          for (const Hop& other : o.trace) {
            uses |= other.switch_id == hop.switch_id &&
                    RuleIndex(rsdn, other, h) == idx;
          }
          on_every_path &= uses;
        }
        if (!on_every_path) continue;
        // ...and the only non-miss rule at its switch and in_port that could
        // carry this VC's traffic at all.
        const Switch* sw = rsdn.FindSwitch(hop.switch_id);
        bool sole = true;
        for (size_t i = 0; sole && i < sw->table.size(); ++i) {
          if (i == idx || sw->table[i].priority == kMissPriority) continue;
          for (const PacketHeader& u : universe) {
            if (sw->table[i].match.Covers(u, hop.in_port)) {
              sole = false;
              break;
            }
          }
        }
        if (!sole) continue;

        ModelSpec spec = rsdn.spec();
        std::vector<FlowRule>& table = spec.MutableSwitch(hop.switch_id)->table;
        table.erase(table.begin() + static_cast<std::ptrdiff_t>(idx));
        SdnSystemModel mutant = SdnSystemModel::Create(spec);
        Verdict v = ModelCheck(mutant, vc);
        Verdict o = OracleCheck(mutant, vc);
        ++cases;
        if (v.result == VerdictResult::kViolated &&
            o.result == VerdictResult::kViolated) {
          ++flipped;
        } else if (first_bad.empty()) {
          first_bad = " first failure: seed " + std::to_string(seed) + " " + vc.id;
        }
        witnesses.push_back({mutant, vc, v, "criterion 5 seed " + std::to_string(seed)});
        witnesses.push_back({mutant, vc, o, "criterion 5 oracle seed " + std::to_string(seed)});
        break;  // one case per VC
      }
      if (cases >= kMutationCases) break;
    }
  }
  Outcome c;
  c.pass = cases >= kMutationCases && flipped == cases;
  c.detail = std::to_string(flipped) + "/" + std::to_string(cases) +
             " sole-path Permit rule deletions flip checker and oracle to "
             "violated (need >= " + std::to_string(kMutationCases) + ")" + first_bad;
  Report(5, "mutation sensitivity", c);
}

// --- Criterion 6 -------------------------------------------------------------

void DeterminismCriterion(const fs::path& dir) {
  int identical = 0;
  std::string first_bad;
  for (int i = 0; i < kDeterminismInstances; ++i) {
    Instance inst = GenerateInstance(kDeterminismSeedBase + i);
    SweepRun a = RunVerify(inst, dir, "det-a", true);
    SweepRun b = RunVerify(inst, dir, "det-b", true);
    bool same = a.status == b.status &&
                testing::ReadText(a.out / "ftm.machine") ==
                    testing::ReadText(b.out / "ftm.machine") &&
                testing::ReadText(a.out / "report.machine") ==
                    testing::ReadText(b.out / "report.machine") &&
                !testing::ReadText(a.out / "ftm.machine").empty();
    identical += same;
    if (!same && first_bad.empty()) {
      first_bad = " first difference: seed " + std::to_string(inst.seed);
    }
  }
  Outcome c;
  c.pass = identical == kDeterminismInstances;
  c.detail = std::to_string(identical) + "/" +
             std::to_string(kDeterminismInstances) +
             " instances give byte-equal ftm.machine and report.machine" +
             first_bad;
  Report(6, "determinism", c);
}

// --- Criterion 7 -------------------------------------------------------------

// Unreachable violations carry a packet and trace, replayed exactly.
// Reachable violations carry the statement that nothing is delivered, which
// is replayed by simulating every header of the VC.
void ReplayCriterion() {
  size_t replayed = 0, traces = 0, statements = 0;
  std::string first_bad;
  for (const Witness& w : witnesses) {
    if (w.verdict.result != VerdictResult::kViolated) continue;
    bool ok = false;
    if (w.vc.expected == Expectation::kUnreachable) {
      ++traces;
      if (w.verdict.counterexample) {
        const Counterexample& cex = *w.verdict.counterexample;
        ok = Simulate(w.rsdn, w.vc.src, cex.header) == cex.outcome &&
             cex.outcome.kind == SimOutcome::Kind::kDelivered &&
             cex.outcome.terminal_id == w.vc.dst;
      }
    } else {
      ++statements;
      ok = w.verdict.statement == kNoDeliveringClass;
      for (const PacketHeader& h : VcUniverse(w.rsdn, w.vc)) {
        ok = ok && !Delivers(w.rsdn, w.vc, h);
      }
    }
    replayed += ok;
    if (!ok && first_bad.empty()) first_bad = " first failure: " + w.origin;
  }
  Outcome c;
  size_t total = traces + statements;
  c.pass = total > 0 && traces > 0 && replayed == total;
  c.detail = std::to_string(replayed) + "/" + std::to_string(total) +
             " witnesses replay (" + std::to_string(traces) +
             " counterexample traces, " + std::to_string(statements) +
             " no-delivery statements)" + first_bad;
  Report(7, "counterexample replay", c);
}

}  // namespace
}  // namespace sdnpolicy

int main() {
  namespace fs = std::filesystem;
  fs::path dir = sdnpolicy::testing::MakeTempDir("sdnp-acceptance");
  sdnpolicy::SweepCriteria(dir);
  sdnpolicy::DijkstraCriterion();
  sdnpolicy::DenyDominanceCriterion();
  sdnpolicy::MutationCriterion();
  sdnpolicy::DeterminismCriterion(dir);
  sdnpolicy::ReplayCriterion();
  fs::remove_all(dir);
  std::printf("%s: %d criterion failure(s)\n",
              sdnpolicy::failures == 0 ? "ACCEPTED" : "REJECTED",
              sdnpolicy::failures);
  return sdnpolicy::failures == 0 ? 0 : 1;
}
