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

#include "sdnpolicy/verifier.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "sdnpolicy/errors.h"
#include "sdnpolicy/json_io.h"

namespace sdnpolicy {
namespace {

using json_io::Json;
using Field = HeaderClassSpace::Field;
using HeaderClass = HeaderClassSpace::HeaderClass;

constexpr std::array<uint64_t, HeaderClassSpace::kFieldCount> kDomainSize = {
    uint64_t{1} << 48, uint64_t{1} << 48, uint64_t{1} << 32, uint64_t{1} << 32,
    256,               65536,             HeaderClassSpace::kUntagged + 1};

uint64_t SaturatingMul(uint64_t a, uint64_t b) {
  if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
    return std::numeric_limits<uint64_t>::max();
  }
  return a * b;
}

const Terminal& RequireTerminal(const SdnSystemModel& model,
                                const std::string& id) {
  const Terminal* t = model.FindTerminal(id);
  if (t == nullptr) {
    throw Error(ErrorKind::kUnknownTerminal,
                "unknown terminal \"" + id + "\"");
  }
  return *t;
}

// Field predicates of one rule over atom indices; nullopt is a wildcard.
struct CompiledRule {
  std::optional<PortNo> in_port;
  std::array<std::optional<uint32_t>, HeaderClassSpace::kFieldCount> fields;
  const FlowRule* rule;
};

std::vector<CompiledRule> CompileTable(const SdnSystemModel& model,
                                       const Switch& sw,
                                       const HeaderClassSpace& space) {
  std::vector<CompiledRule> out;
  for (size_t idx : model.LookupOrder(sw.id)) {
    const FlowRule& rule = sw.table[idx];
    const Match& m = rule.match;
    CompiledRule c{m.in_port, {}, &rule};
    auto set = [&](Field f, std::optional<uint64_t> value) {
      if (value) c.fields[f] = space.AtomOf(f, *value);
    };
    set(Field::kEthSrc,
        m.eth_src ? std::optional<uint64_t>(m.eth_src->bits()) : std::nullopt);
    set(Field::kEthDst,
        m.eth_dst ? std::optional<uint64_t>(m.eth_dst->bits()) : std::nullopt);
    set(Field::kIpSrc,
        m.ip_src ? std::optional<uint64_t>(m.ip_src->bits()) : std::nullopt);
    set(Field::kIpDst,
        m.ip_dst ? std::optional<uint64_t>(m.ip_dst->bits()) : std::nullopt);
    set(Field::kIpProto, m.ip_proto);
    set(Field::kTpDst, m.tp_dst);
    set(Field::kVlan, m.vlan);
    out.push_back(c);
  }
  return out;
}

// Dense numbering of (switch, port) states with what lies behind each port.
struct PortState {
  size_t switch_index;
  PortNo port;
  PortBinding::Kind kind;
  uint32_t peer_state = 0;             // kLink
  const Terminal* terminal = nullptr;  // kTerminal
};

struct PortGraph {
  std::vector<PortState> states;
  std::map<std::pair<size_t, PortNo>, uint32_t> index;
};

PortGraph BuildPortGraph(const SdnSystemModel& model) {
  PortGraph g;
  std::map<std::string, size_t, std::less<>> switch_index;
  for (size_t i = 0; i < model.switches().size(); ++i) {
    const Switch& sw = model.switches()[i];
    switch_index[sw.id] = i;
    for (PortNo port : sw.ports) {
      g.index[{i, port}] = static_cast<uint32_t>(g.states.size());
      g.states.push_back(PortState{i, port, PortBinding::Kind::kUnconnected});
    }
  }
  for (PortState& s : g.states) {
    const Switch& sw = model.switches()[s.switch_index];
    const PortBinding* b = model.FindPort(sw.id, s.port);
    s.kind = b->kind;
    if (b->kind == PortBinding::Kind::kLink) {
      s.peer_state =
          g.index.at({switch_index.at(b->peer.switch_id), b->peer.port});
    } else if (b->kind == PortBinding::Kind::kTerminal) {
      s.terminal = model.FindTerminal(b->terminal_id);
    }
  }
  return g;
}

bool RuleMatches(const CompiledRule& rule, const HeaderClass& cls,
                 PortNo in_port) {
  if (rule.in_port && *rule.in_port != in_port) return false;
  for (size_t f = 0; f < HeaderClassSpace::kFieldCount; ++f) {
    if (rule.fields[f] && *rule.fields[f] != cls[f]) return false;
  }
  return true;
}

// Largest value in [0, domain) absent from `used`, if any.
template <typename Set>
std::optional<uint64_t> LargestUnused(const Set& used, uint64_t domain) {
  for (uint64_t v = domain; v-- > 0;) {
    if (!used.contains(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ValidationCondition> CompileVcs(
    const std::vector<ConcretePair>& pairs) {
  std::vector<ValidationCondition> out;
  out.reserve(pairs.size());
  for (const ConcretePair& p : pairs) {
    size_t ordinal = out.size() + 1;
    out.push_back(ValidationCondition{
        "vc-" + std::to_string(ordinal), ordinal, p.src, p.dst, p.ip_proto,
        p.tp_dst,
        p.action == PolicyAction::kPermit ? Expectation::kReachable
                                          : Expectation::kUnreachable,
        p.policy_id});
  }
  return out;
}

std::string_view VerdictResultName(VerdictResult result) {
  switch (result) {
    case VerdictResult::kHolds:
      return "holds";
    case VerdictResult::kViolated:
      return "violated";
    case VerdictResult::kInconclusive:
      return "inconclusive";
  }
  return "";
}

uint64_t HeaderClassSpace::FieldValue(const PacketHeader& h, Field field) {
  switch (field) {
    case kEthSrc:
      return h.eth_src.bits();
    case kEthDst:
      return h.eth_dst.bits();
    case kIpSrc:
      return h.ip_src.bits();
    case kIpDst:
      return h.ip_dst.bits();
    case kIpProto:
      return h.ip_proto;
    case kTpDst:
      return h.tp_dst;
    case kVlan:
      return h.vlan ? *h.vlan : kUntagged;
  }
  return 0;
}

HeaderClassSpace HeaderClassSpace::Build(const SdnSystemModel& model,
                                         const ValidationCondition* vc) {
  std::array<std::set<uint64_t>, kFieldCount> values;
  values[kVlan].insert(kUntagged);
  for (const Terminal& t : model.terminals()) {
    values[kEthSrc].insert(t.mac.bits());
    values[kEthDst].insert(t.mac.bits());
    values[kIpSrc].insert(t.ip.bits());
    values[kIpDst].insert(t.ip.bits());
    if (t.vlan) values[kVlan].insert(*t.vlan);
  }
  for (const Switch& sw : model.switches()) {
    for (const FlowRule& rule : sw.table) {
      const Match& m = rule.match;
      if (m.eth_src) values[kEthSrc].insert(m.eth_src->bits());
      if (m.eth_dst) values[kEthDst].insert(m.eth_dst->bits());
      if (m.ip_src) values[kIpSrc].insert(m.ip_src->bits());
      if (m.ip_dst) values[kIpDst].insert(m.ip_dst->bits());
      if (m.ip_proto) values[kIpProto].insert(*m.ip_proto);
      if (m.tp_dst) values[kTpDst].insert(*m.tp_dst);
      if (m.vlan) values[kVlan].insert(*m.vlan);
    }
  }
  if (vc != nullptr) {
    if (vc->ip_proto) values[kIpProto].insert(*vc->ip_proto);
    if (vc->tp_dst) values[kTpDst].insert(*vc->tp_dst);
  }

  HeaderClassSpace space;
  for (size_t f = 0; f < kFieldCount; ++f) {
    std::set<uint64_t>& vs = values[f];
    if (vs.size() < kDomainSize[f]) {
      // Smallest value no rule or terminal mentions.
      uint64_t other = 0;
      for (uint64_t v : vs) {
        if (v != other) break;
        ++other;
      }
      vs.insert(other);
      space.atoms_[f].assign(vs.begin(), vs.end());
      space.other_[f] = static_cast<uint32_t>(
          std::lower_bound(space.atoms_[f].begin(), space.atoms_[f].end(),
                           other) -
          space.atoms_[f].begin());
    } else {
      space.atoms_[f].assign(vs.begin(), vs.end());
    }
  }
  return space;
}

uint32_t HeaderClassSpace::AtomOf(Field field, uint64_t value) const {
  const std::vector<uint64_t>& atoms = atoms_[field];
  auto it = std::lower_bound(atoms.begin(), atoms.end(), value);
  if (it != atoms.end() && *it == value) {
    return static_cast<uint32_t>(it - atoms.begin());
  }
  return *other_[field];
}

uint64_t HeaderClassSpace::ClassCount() const {
  uint64_t n = 1;
  for (const auto& atoms : atoms_) n = SaturatingMul(n, atoms.size());
  return n;
}

HeaderClass HeaderClassSpace::Classify(const PacketHeader& header) const {
  HeaderClass cls{};
  for (size_t f = 0; f < kFieldCount; ++f) {
    cls[f] = AtomOf(static_cast<Field>(f),
                    FieldValue(header, static_cast<Field>(f)));
  }
  return cls;
}

PacketHeader HeaderClassSpace::Representative(const HeaderClass& cls) const {
  PacketHeader h;
  h.eth_src = MacAddress(atoms_[kEthSrc][cls[kEthSrc]]);
  h.eth_dst = MacAddress(atoms_[kEthDst][cls[kEthDst]]);
  h.ip_src = Ipv4Address(static_cast<uint32_t>(atoms_[kIpSrc][cls[kIpSrc]]));
  h.ip_dst = Ipv4Address(static_cast<uint32_t>(atoms_[kIpDst][cls[kIpDst]]));
  h.ip_proto = static_cast<uint8_t>(atoms_[kIpProto][cls[kIpProto]]);
  h.tp_dst = static_cast<uint16_t>(atoms_[kTpDst][cls[kTpDst]]);
  uint64_t vlan = atoms_[kVlan][cls[kVlan]];
  if (vlan != kUntagged) h.vlan = static_cast<uint16_t>(vlan);
  return h;
}

Verdict ModelCheck(const SdnSystemModel& rsdn, const ValidationCondition& vc,
                   const CheckOptions& options) {
  const Terminal& src = RequireTerminal(rsdn, vc.src);
  const Terminal& dst = RequireTerminal(rsdn, vc.dst);
  const HeaderClassSpace space = HeaderClassSpace::Build(rsdn, &vc);

  // Atom indices each field may take under this VC.
  std::array<std::vector<uint32_t>, HeaderClassSpace::kFieldCount> allowed;
  auto all_atoms = [&space](Field f) {
    std::vector<uint32_t> v(space.Atoms(f).size());
    for (uint32_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  };
  allowed[Field::kEthSrc] = {space.AtomOf(Field::kEthSrc, src.mac.bits())};
  allowed[Field::kIpSrc] = {space.AtomOf(Field::kIpSrc, src.ip.bits())};
  allowed[Field::kEthDst] = {space.AtomOf(Field::kEthDst, dst.mac.bits())};
  allowed[Field::kIpDst] = {space.AtomOf(Field::kIpDst, dst.ip.bits())};
  allowed[Field::kIpProto] =
      vc.ip_proto ? std::vector<uint32_t>{space.AtomOf(Field::kIpProto,
                                                       *vc.ip_proto)}
                  : all_atoms(Field::kIpProto);
  allowed[Field::kTpDst] =
      vc.tp_dst
          ? std::vector<uint32_t>{space.AtomOf(Field::kTpDst, *vc.tp_dst)}
          : all_atoms(Field::kTpDst);
  allowed[Field::kVlan] = all_atoms(Field::kVlan);

  uint64_t class_count = 1;
  for (const auto& a : allowed) class_count = SaturatingMul(class_count, a.size());
  auto decode = [&allowed](uint64_t ordinal) {
    HeaderClass cls{};
    for (size_t f = HeaderClassSpace::kFieldCount; f-- > 0;) {
      cls[f] = allowed[f][ordinal % allowed[f].size()];
      ordinal /= allowed[f].size();
    }
    return cls;
  };

  Verdict verdict;
  verdict.vc_id = vc.id;
  verdict.header_classes = class_count;

  auto budget_exceeded = [&options]() {
    throw Error(ErrorKind::kStateBudgetExceeded,
                "state budget of " + std::to_string(options.state_budget) +
                    " visited states exceeded");
  };
  if (class_count > options.state_budget) budget_exceeded();

  const PortGraph graph = BuildPortGraph(rsdn);
  std::vector<std::vector<CompiledRule>> tables;
  for (const Switch& sw : rsdn.switches()) {
    tables.push_back(CompileTable(rsdn, sw, space));
  }
  const uint32_t dst_mac_atom = allowed[Field::kEthDst][0];
  const uint32_t dst_ip_atom = allowed[Field::kIpDst][0];

  size_t src_switch = 0;
  while (rsdn.switches()[src_switch].id != src.attachment.switch_id) {
    ++src_switch;
  }
  const uint32_t start = graph.index.at({src_switch, src.attachment.port});
  const uint64_t n_states = graph.states.size();

  std::unordered_set<uint64_t> visited;
  std::deque<std::pair<uint64_t, uint32_t>> queue;
  for (uint64_t c = 0; c < class_count; ++c) {
    visited.insert(c * n_states + start);
    queue.emplace_back(c, start);
  }

  std::optional<HeaderClass> delivering;
  while (!queue.empty() && !delivering.has_value()) {
    auto [ordinal, state_id] = queue.front();
    queue.pop_front();
    const PortState& state = graph.states[state_id];
    const HeaderClass cls = decode(ordinal);

    const CompiledRule* hit = nullptr;
    for (const CompiledRule& rule : tables[state.switch_index]) {
      if (RuleMatches(rule, cls, state.port)) {
        hit = &rule;
        break;
      }
    }
    if (hit == nullptr) {
      throw Error(ErrorKind::kInternal, "switch without a table-miss rule");
    }
    const Action& action = hit->rule->action;
    if (action.is_drop()) continue;

    const PortState& out =
        graph.states[graph.index.at({state.switch_index, action.port})];
    switch (out.kind) {
      case PortBinding::Kind::kLink: {
        uint64_t key = ordinal * n_states + out.peer_state;
        if (visited.insert(key).second) {
          if (visited.size() > options.state_budget) budget_exceeded();
          queue.emplace_back(ordinal, out.peer_state);
        }
        break;
      }
      case PortBinding::Kind::kTerminal:
        if (out.terminal == &dst && cls[Field::kEthDst] == dst_mac_atom &&
            cls[Field::kIpDst] == dst_ip_atom) {
          delivering = cls;
        }
        break;
      case PortBinding::Kind::kUnconnected:
        break;
    }
  }
  verdict.states_visited = visited.size();

  if (vc.expected == Expectation::kReachable) {
    if (delivering.has_value()) {
      verdict.result = VerdictResult::kHolds;
    } else {
      verdict.result = VerdictResult::kViolated;
      verdict.statement = std::string(kNoDeliveringClass);
    }
    return verdict;
  }
  if (!delivering.has_value()) {
    verdict.result = VerdictResult::kHolds;
    return verdict;
  }
  verdict.result = VerdictResult::kViolated;
  Counterexample cex;
  cex.header = space.Representative(*delivering);
  cex.outcome = Simulate(rsdn, vc.src, cex.header);
  if (cex.outcome.kind != SimOutcome::Kind::kDelivered ||
      cex.outcome.terminal_id != vc.dst) {
    throw Error(ErrorKind::kInternal,
                vc.id + ": counterexample does not replay: " +
                    cex.outcome.ToString());
  }
  verdict.statement = "header delivered to " + vc.dst;
  verdict.counterexample = std::move(cex);
  return verdict;
}

namespace {

struct OracleUniverse {
  std::vector<uint8_t> protos;
  std::vector<uint16_t> ports;
  std::vector<std::optional<uint16_t>> vlans;

  uint64_t size() const {
    return SaturatingMul(SaturatingMul(protos.size(), ports.size()),
                         vlans.size());
  }
};

// Concrete values worth trying per free field: every value a rule or
// terminal mentions plus one value nothing mentions.
OracleUniverse BuildOracleUniverse(const SdnSystemModel& rsdn,
                                   const ValidationCondition& vc) {
  std::set<uint64_t> protos, ports, vlans;
  for (const Switch& sw : rsdn.switches()) {
    for (const FlowRule& rule : sw.table) {
      if (rule.match.ip_proto) protos.insert(*rule.match.ip_proto);
      if (rule.match.tp_dst) ports.insert(*rule.match.tp_dst);
      if (rule.match.vlan) vlans.insert(*rule.match.vlan);
    }
  }
  for (const Terminal& t : rsdn.terminals()) {
    if (t.vlan) vlans.insert(*t.vlan);
  }
  OracleUniverse u;
  if (vc.ip_proto) {
    u.protos = {*vc.ip_proto};
  } else {
    if (auto extra = LargestUnused(protos, 256)) protos.insert(*extra);
    for (uint64_t v : protos) u.protos.push_back(static_cast<uint8_t>(v));
  }
  if (vc.tp_dst) {
    u.ports = {*vc.tp_dst};
  } else {
    if (auto extra = LargestUnused(ports, 65536)) ports.insert(*extra);
    for (uint64_t v : ports) u.ports.push_back(static_cast<uint16_t>(v));
  }
  if (auto extra = LargestUnused(vlans, kMaxVlanId + 1)) vlans.insert(*extra);
  u.vlans.push_back(std::nullopt);
  for (uint64_t v : vlans) u.vlans.push_back(static_cast<uint16_t>(v));
  return u;
}

}  // namespace

uint64_t OracleUniverseSize(const SdnSystemModel& rsdn,
                            const ValidationCondition& vc) {
  return BuildOracleUniverse(rsdn, vc).size();
}

Verdict OracleCheck(const SdnSystemModel& rsdn, const ValidationCondition& vc,
                    const CheckOptions& options) {
  const Terminal& src = RequireTerminal(rsdn, vc.src);
  const Terminal& dst = RequireTerminal(rsdn, vc.dst);
  const OracleUniverse universe = BuildOracleUniverse(rsdn, vc);
  if (universe.size() > options.enum_cap) {
    throw Error(ErrorKind::kUniverseTooLarge,
                "header universe of " + std::to_string(universe.size()) +
                    " exceeds enumeration cap " +
                    std::to_string(options.enum_cap));
  }

  Verdict verdict;
  verdict.vc_id = vc.id;
  verdict.header_classes = universe.size();
  std::optional<Counterexample> delivered;
  for (uint8_t proto : universe.protos) {
    for (uint16_t port : universe.ports) {
      for (const std::optional<uint16_t>& vlan : universe.vlans) {
        PacketHeader h{src.mac, dst.mac, src.ip, dst.ip, proto, port, vlan};
        SimOutcome outcome = Simulate(rsdn, vc.src, h);
        ++verdict.states_visited;
        if (outcome.kind == SimOutcome::Kind::kDelivered &&
            outcome.terminal_id == vc.dst) {
          delivered = Counterexample{h, std::move(outcome)};
          break;
        }
      }
      if (delivered) break;
    }
    if (delivered) break;
  }

  bool holds = vc.expected == Expectation::kReachable ? delivered.has_value()
                                                      : !delivered.has_value();
  verdict.result = holds ? VerdictResult::kHolds : VerdictResult::kViolated;
  if (!holds) {
    if (vc.expected == Expectation::kReachable) {
      verdict.statement = std::string(kNoDeliveringClass);
    } else {
      verdict.statement = "header delivered to " + vc.dst;
      verdict.counterexample = std::move(delivered);
    }
  }
  return verdict;
}

Report VerifyAll(const SdnSystemModel& rsdn,
                 const std::vector<ValidationCondition>& vcs,
                 const VerifyOptions& options) {
  auto started = std::chrono::steady_clock::now();
  Report report;
  for (const ValidationCondition& vc : vcs) {
    VcReport entry{vc, {}, std::nullopt, {}};
    try {
      entry.verdict = ModelCheck(rsdn, vc, options.check);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kStateBudgetExceeded) throw;
      entry.verdict.vc_id = vc.id;
      entry.verdict.result = VerdictResult::kInconclusive;
      entry.verdict.statement = e.what();
    }
    if (options.with_oracle &&
        entry.verdict.result != VerdictResult::kInconclusive) {
      try {
        entry.oracle = OracleCheck(rsdn, vc, options.check);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUniverseTooLarge) throw;
        Verdict skipped;
        skipped.vc_id = vc.id;
        skipped.result = VerdictResult::kInconclusive;
        skipped.statement = e.what();
        entry.oracle = std::move(skipped);
      }
    }

    bool oracle_inconclusive =
        entry.oracle && entry.oracle->result == VerdictResult::kInconclusive;
    if (entry.verdict.result == VerdictResult::kInconclusive ||
        oracle_inconclusive) {
      ++report.inconclusive;
    } else if (entry.verdict.result == VerdictResult::kViolated) {
      ++report.violated;
    } else {
      ++report.holds;
    }
    if (entry.oracle && !oracle_inconclusive &&
        entry.verdict.result != VerdictResult::kInconclusive &&
        entry.oracle->result != entry.verdict.result) {
      ++report.oracle_disagreements;
    }
    report.results.push_back(std::move(entry));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const VcReport& a, const VcReport& b) {
                     return a.vc.ordinal < b.vc.ordinal;
                   });
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

void AnnotateConflicts(Report& report, const std::vector<Conflict>& conflicts) {
  report.conflicts = conflicts;
  for (VcReport& entry : report.results) {
    std::set<std::string> others;
    for (const Conflict& c : conflicts) {
      if (c.src != entry.vc.src || c.dst != entry.vc.dst) continue;
      if (c.permit_policy == entry.vc.provenance) others.insert(c.deny_policy);
      if (c.deny_policy == entry.vc.provenance) others.insert(c.permit_policy);
    }
    entry.conflicts_with.assign(others.begin(), others.end());
  }
}

namespace {

Json HeaderToJson(const PacketHeader& h) {
  Json out{{"eth_src", h.eth_src.ToString()}, {"eth_dst", h.eth_dst.ToString()},
           {"ip_src", h.ip_src.ToString()},   {"ip_dst", h.ip_dst.ToString()},
           {"ip_proto", h.ip_proto},          {"tp_dst", h.tp_dst}};
  if (h.vlan) out["vlan"] = *h.vlan;
  return out;
}

Json OutcomeToJson(const SimOutcome& o) {
  Json trace = Json::array();
  for (const Hop& hop : o.trace) {
    trace.push_back(Json{{"switch", hop.switch_id},
                         {"in_port", hop.in_port},
                         {"priority", hop.priority},
                         {"action", hop.action.ToString()},
                         {"provenance", hop.provenance}});
  }
  Json out{{"trace", std::move(trace)}};
  switch (o.kind) {
    case SimOutcome::Kind::kDelivered:
      out["kind"] = "delivered";
      out["terminal"] = o.terminal_id;
      break;
    case SimOutcome::Kind::kDropped:
      out["kind"] = "dropped";
      out["switch"] = o.switch_id;
      out["provenance"] = o.provenance;
      break;
    case SimOutcome::Kind::kLoop:
      out["kind"] = "loop";
      break;
  }
  return out;
}

Json VerdictToJson(const Verdict& v) {
  Json out{{"result", VerdictResultName(v.result)},
           {"states_visited", v.states_visited},
           {"header_classes", v.header_classes}};
  if (!v.statement.empty()) out["statement"] = v.statement;
  if (v.counterexample) {
    out["counterexample"] = Json{{"header", HeaderToJson(v.counterexample->header)},
                                 {"outcome", OutcomeToJson(v.counterexample->outcome)}};
  }
  return out;
}

std::string FieldText(const auto& value) {
  return value ? std::to_string(*value) : "*";
}

}  // namespace

std::string ExportReportMachine(const Report& report) {
  Json conflicts = Json::array();
  for (const Conflict& c : report.conflicts) {
    conflicts.push_back(Json{{"src", c.src},
                             {"dst", c.dst},
                             {"permit", c.permit_policy},
                             {"deny", c.deny_policy}});
  }
  Json verdicts = Json::array();
  for (const VcReport& r : report.results) {
    Json v{{"vc", r.vc.id},
           {"src", r.vc.src},
           {"dst", r.vc.dst},
           {"ip_proto", FieldText(r.vc.ip_proto)},
           {"tp_dst", FieldText(r.vc.tp_dst)},
           {"expected", r.vc.expected == Expectation::kReachable
                            ? "reachable"
                            : "unreachable"},
           {"provenance", r.vc.provenance},
           {"checker", VerdictToJson(r.verdict)}};
    if (r.oracle) v["oracle"] = VerdictToJson(*r.oracle);
    if (!r.conflicts_with.empty()) v["conflicts_with"] = r.conflicts_with;
    verdicts.push_back(std::move(v));
  }
  return json_io::Dump(Json{
      {"format", "sdnpolicy-report/1"},
      {"status", report.status() == Report::Status::kAllHold
                     ? "AllHold"
                     : "ViolationsFound"},
      {"summary",
       {{"total", report.results.size()},
        {"holds", report.holds},
        {"violated", report.violated},
        {"inconclusive", report.inconclusive},
        {"oracle_disagreements", report.oracle_disagreements}}},
      {"conflicts", std::move(conflicts)},
      {"verdicts", std::move(verdicts)}});
}

std::string ExportReportHuman(const Report& report) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof(line), "%-8s %-10s %-10s %-6s %-6s %-12s %-8s %-12s %s\n",
                "vc", "src", "dst", "proto", "port", "expected", "policy",
                "result", "oracle");
  out += line;
  for (const VcReport& r : report.results) {
    std::string oracle = r.oracle ? std::string(VerdictResultName(r.oracle->result))
                                  : "-";
    std::snprintf(line, sizeof(line), "%-8s %-10s %-10s %-6s %-6s %-12s %-8s %-12s %s\n",
                  r.vc.id.c_str(), r.vc.src.c_str(), r.vc.dst.c_str(),
                  FieldText(r.vc.ip_proto).c_str(),
                  FieldText(r.vc.tp_dst).c_str(),
                  r.vc.expected == Expectation::kReachable ? "reachable"
                                                           : "unreachable",
                  r.vc.provenance.c_str(),
                  std::string(VerdictResultName(r.verdict.result)).c_str(),
                  oracle.c_str());
    out += line;
    if (!r.verdict.statement.empty() &&
        r.verdict.result != VerdictResult::kHolds) {
      out += "    " + r.verdict.statement + "\n";
    }
    if (r.verdict.counterexample) {
      out += "    counterexample: " +
             HeaderToString(r.verdict.counterexample->header) + "\n";
      for (const Hop& hop : r.verdict.counterexample->outcome.trace) {
        out += "      " + hop.switch_id + " in_port=" +
               std::to_string(hop.in_port) +
               " priority=" + std::to_string(hop.priority) + " " +
               hop.action.ToString() + " (" + hop.provenance + ")\n";
      }
      out += "      => " + r.verdict.counterexample->outcome.ToString() + "\n";
    }
    if (!r.conflicts_with.empty()) {
      out += "    conflicts with:";
      for (const std::string& id : r.conflicts_with) out += " " + id;
      out += "\n";
    }
  }
  for (const Conflict& c : report.conflicts) {
    out += "conflict: " + c.src + " -> " + c.dst + " permit " +
           c.permit_policy + " vs deny " + c.deny_policy + "\n";
  }
  std::snprintf(line, sizeof(line),
                "status: %s (%zu VCs: %zu hold, %zu violated, %zu "
                "inconclusive, %zu oracle disagreements) in %.3f s\n",
                report.status() == Report::Status::kAllHold ? "AllHold"
                                                            : "ViolationsFound",
                report.results.size(), report.holds, report.violated,
                report.inconclusive, report.oracle_disagreements,
                report.wall_seconds);
  out += line;
  return out;
}

}  // namespace sdnpolicy
